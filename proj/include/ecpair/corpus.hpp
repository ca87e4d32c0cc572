#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ecpair {

// (emotion clause index, cause clause index), both 1-based.
using Pair = std::pair<int, int>;

struct Clause {
  int index = 0;  // 1-based position in the document
  std::string text;
  std::vector<std::string> tokens;  // filled by the active tokenizer
  std::optional<std::string> emotion_category;
  std::optional<std::string> emotion_keyword;

  bool has_emotion_annotation() const { return emotion_category.has_value(); }
};

struct Document {
  std::string doc_id;
  std::vector<Clause> clauses;
  std::set<Pair> gold_pairs;

  int size() const { return static_cast<int>(clauses.size()); }
  const Clause& clause(int index) const;  // 1-based access

  // Distinct gold emotion / cause indices, ascending.
  std::vector<int> gold_emotion_indices() const;
  std::vector<int> gold_cause_indices() const;
  std::vector<int> gold_causes_of(int emotion) const;
  std::vector<int> gold_emotions_of(int cause) const;

  // Emotion indices for ECE mode: clauses carrying emotion annotations,
  // falling back to the emotions named in gold_pairs when the corpus
  // carries no per-clause annotations.
  std::vector<int> annotated_emotion_indices() const;

  // Throws ValidationError if indices have gaps or pairs point outside
  // the document.
  void validate() const;
};

enum class SplitStyle { cv10, tvt };

struct Fold {
  std::vector<std::string> train;
  std::vector<std::string> val;  // empty for cv10
  std::vector<std::string> test;
};

struct DataSplit {
  SplitStyle style = SplitStyle::cv10;
  std::uint64_t seed = 0;
  std::vector<Fold> folds;
};

// Native benchmark text format: per record a `doc_id clause_count` header,
// a line of `(e,c)` tuples, then clause_count lines of
// `index,emotion_category,emotion_keyword,text`.
std::vector<Document> load_native_corpus(const std::string& path);

// Canonical interchange format: one JSON record per line with fields
// doc_id, clauses [{index, text, emotion_category?, emotion_keyword?}],
// pairs [[e, c]].
std::vector<Document> load_canonical_corpus(const std::string& path);
void save_canonical_corpus(const std::vector<Document>& docs,
                           const std::string& path);

// Seeded shuffle then contiguous chunking. cv10 produces 10 folds with
// near-equal test chunks; tvt produces one 80/10/10 fold.
DataSplit make_split(const std::vector<Document>& docs, SplitStyle style,
                     std::uint64_t seed);

// Desk-scale learnability corpus. Emotion clauses contain a reserved
// emotion keyword, cause clauses a reserved cause keyword, and each
// emotion shares a topic token with its causes so the pairing is
// recoverable from text alone.
std::vector<Document> generate_synthetic_corpus(int n_docs, int max_clauses,
                                                std::uint64_t seed);

struct CorpusStats {
  long documents = 0;
  long clauses = 0;
  long pairs = 0;
};
CorpusStats corpus_stats(const std::vector<Document>& docs);

// Resolve doc ids from a split fold back to documents.
std::vector<const Document*> select_documents(
    const std::vector<Document>& docs, const std::vector<std::string>& ids);

}  // namespace ecpair
