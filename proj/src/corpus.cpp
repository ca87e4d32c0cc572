#include "ecpair/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ecpair/errors.hpp"
#include "ecpair/rng.hpp"
#include "ecpair/tokenizer.hpp"
#include "json.hpp"

namespace ecpair {

using nlohmann::json;

const Clause& Document::clause(int index) const {
  if (index < 1 || index > size()) {
    throw ValidationError("doc " + doc_id + ": clause index " +
                          std::to_string(index) + " out of range 1.." +
                          std::to_string(size()));
  }
  return clauses[static_cast<std::size_t>(index - 1)];
}

std::vector<int> Document::gold_emotion_indices() const {
  std::set<int> s;
  for (const auto& [e, c] : gold_pairs) s.insert(e);
  return {s.begin(), s.end()};
}

std::vector<int> Document::gold_cause_indices() const {
  std::set<int> s;
  for (const auto& [e, c] : gold_pairs) s.insert(c);
  return {s.begin(), s.end()};
}

std::vector<int> Document::gold_causes_of(int emotion) const {
  std::vector<int> out;
  for (const auto& [e, c] : gold_pairs)
    if (e == emotion) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Document::gold_emotions_of(int cause) const {
  std::vector<int> out;
  for (const auto& [e, c] : gold_pairs)
    if (c == cause) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Document::annotated_emotion_indices() const {
  std::vector<int> out;
  for (const Clause& c : clauses)
    if (c.has_emotion_annotation()) out.push_back(c.index);
  if (out.empty()) return gold_emotion_indices();
  return out;
}

void Document::validate() const {
  for (int i = 0; i < size(); ++i) {
    if (clauses[static_cast<std::size_t>(i)].index != i + 1) {
      throw ValidationError("doc " + doc_id + ": clause at position " +
                            std::to_string(i + 1) + " has index " +
                            std::to_string(clauses[(std::size_t)i].index));
    }
  }
  for (const auto& [e, c] : gold_pairs) {
    if (e < 1 || e > size() || c < 1 || c > size()) {
      throw ValidationError("doc " + doc_id + ": gold pair (" +
                            std::to_string(e) + "," + std::to_string(c) +
                            ") references a clause outside 1.." +
                            std::to_string(size()));
    }
  }
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Pair lines look like "(2,3), (4,4)".
std::set<Pair> parse_pair_line(const std::string& line,
                               const std::string& doc_id, long line_no,
                               const std::string& path) {
  std::set<Pair> pairs;
  std::size_t pos = 0;
  while ((pos = line.find('(', pos)) != std::string::npos) {
    std::size_t close = line.find(')', pos);
    std::size_t comma = line.find(',', pos);
    if (close == std::string::npos || comma == std::string::npos ||
        comma > close) {
      throw ParseError("doc " + doc_id + ": malformed pair tuple", path,
                       line_no);
    }
    try {
      int e = std::stoi(line.substr(pos + 1, comma - pos - 1));
      int c = std::stoi(line.substr(comma + 1, close - comma - 1));
      pairs.insert({e, c});
    } catch (const std::exception&) {
      throw ParseError("doc " + doc_id + ": malformed pair tuple", path,
                       line_no);
    }
    pos = close + 1;
  }
  return pairs;
}

std::optional<std::string> opt_field(const std::string& s) {
  if (s.empty() || s == "null") return std::nullopt;
  return s;
}

}  // namespace

std::vector<Document> load_native_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);

  std::vector<Document> docs;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string header = strip(line);
    if (header.empty()) continue;

    std::istringstream hs(header);
    std::string doc_id;
    long n_clauses = -1;
    if (!(hs >> doc_id >> n_clauses) || n_clauses < 1) {
      throw ParseError("malformed header '" + header + "'", path, line_no);
    }

    if (!std::getline(in, line)) {
      throw ParseError("doc " + doc_id + ": missing pair line", path,
                       ++line_no);
    }
    ++line_no;
    Document doc;
    doc.doc_id = doc_id;
    doc.gold_pairs = parse_pair_line(line, doc_id, line_no, path);

    for (long i = 0; i < n_clauses; ++i) {
      if (!std::getline(in, line)) {
        throw ParseError("doc " + doc_id + ": expected " +
                             std::to_string(n_clauses) + " clauses, got " +
                             std::to_string(i),
                         path, line_no);
      }
      ++line_no;
      // index,emotion_category,emotion_keyword,text -- the text may itself
      // contain commas, so only the first three are separators.
      std::size_t c1 = line.find(',');
      std::size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
      std::size_t c3 = c2 == std::string::npos ? c2 : line.find(',', c2 + 1);
      if (c3 == std::string::npos) {
        throw ParseError("doc " + doc_id + ": malformed clause line", path,
                         line_no);
      }
      Clause clause;
      try {
        clause.index = std::stoi(line.substr(0, c1));
      } catch (const std::exception&) {
        throw ParseError("doc " + doc_id + ": malformed clause index", path,
                         line_no);
      }
      if (clause.index != static_cast<int>(i) + 1) {
        throw ParseError("doc " + doc_id + ": clause index " +
                             std::to_string(clause.index) +
                             " does not match position " +
                             std::to_string(i + 1) + " (clause-count mismatch)",
                         path, line_no);
      }
      clause.emotion_category = opt_field(line.substr(c1 + 1, c2 - c1 - 1));
      clause.emotion_keyword = opt_field(line.substr(c2 + 1, c3 - c2 - 1));
      clause.text = strip(line.substr(c3 + 1));
      clause.tokens = basic_tokenize(clause.text);
      doc.clauses.push_back(std::move(clause));
    }

    for (const auto& [e, c] : doc.gold_pairs) {
      if (e < 1 || e > doc.size() || c < 1 || c > doc.size()) {
        throw ParseError("doc " + doc_id + ": pair (" + std::to_string(e) +
                             "," + std::to_string(c) +
                             ") out of range for " +
                             std::to_string(doc.size()) + " clauses",
                         path, line_no);
      }
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

namespace {

Document document_from_json(const json& rec, const std::string& path,
                            long line_no) {
  auto fail = [&](const std::string& field) -> ParseError {
    return ParseError("canonical record missing or malformed field '" + field +
                          "'",
                      path, line_no);
  };
  if (!rec.is_object() || !rec.contains("doc_id") ||
      !rec["doc_id"].is_string())
    throw fail("doc_id");
  if (!rec.contains("clauses") || !rec["clauses"].is_array())
    throw fail("clauses");
  if (!rec.contains("pairs") || !rec["pairs"].is_array()) throw fail("pairs");

  Document doc;
  doc.doc_id = rec["doc_id"].get<std::string>();
  for (const json& jc : rec["clauses"]) {
    if (!jc.is_object() || !jc.contains("index") || !jc.contains("text"))
      throw fail("clauses[].index/text");
    Clause c;
    c.index = jc["index"].get<int>();
    c.text = jc["text"].get<std::string>();
    if (jc.contains("emotion_category") && !jc["emotion_category"].is_null())
      c.emotion_category = jc["emotion_category"].get<std::string>();
    if (jc.contains("emotion_keyword") && !jc["emotion_keyword"].is_null())
      c.emotion_keyword = jc["emotion_keyword"].get<std::string>();
    c.tokens = basic_tokenize(c.text);
    doc.clauses.push_back(std::move(c));
  }
  for (const json& jp : rec["pairs"]) {
    if (!jp.is_array() || jp.size() != 2) throw fail("pairs[]");
    doc.gold_pairs.insert({jp[0].get<int>(), jp[1].get<int>()});
  }
  try {
    doc.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), path, line_no);
  }
  return doc;
}

}  // namespace

std::vector<Document> load_canonical_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::vector<Document> docs;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), path,
                       line_no);
    }
    docs.push_back(document_from_json(rec, path, line_no));
  }
  return docs;
}

void save_canonical_corpus(const std::vector<Document>& docs,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write corpus file: " + path);
  for (const Document& doc : docs) {
    json rec;
    rec["doc_id"] = doc.doc_id;
    rec["clauses"] = json::array();
    for (const Clause& c : doc.clauses) {
      json jc;
      jc["index"] = c.index;
      jc["text"] = c.text;
      if (c.emotion_category) jc["emotion_category"] = *c.emotion_category;
      if (c.emotion_keyword) jc["emotion_keyword"] = *c.emotion_keyword;
      rec["clauses"].push_back(std::move(jc));
    }
    rec["pairs"] = json::array();
    for (const auto& [e, c] : doc.gold_pairs)
      rec["pairs"].push_back(json::array({e, c}));
    out << rec.dump() << "\n";
  }
}

DataSplit make_split(const std::vector<Document>& docs, SplitStyle style,
                     std::uint64_t seed) {
  const std::size_t n = docs.size();
  if (style == SplitStyle::cv10 && n < 10)
    throw ConfigError("cv10 needs at least 10 documents, got " +
                      std::to_string(n));
  if (style == SplitStyle::tvt && n < 3)
    throw ConfigError("tvt needs at least 3 documents, got " +
                      std::to_string(n));

  std::vector<std::string> ids;
  ids.reserve(n);
  for (const Document& d : docs) ids.push_back(d.doc_id);
  Rng rng(seed);
  rng.shuffle(ids);

  DataSplit split;
  split.style = style;
  split.seed = seed;

  if (style == SplitStyle::cv10) {
    // Near-equal contiguous chunks; the first n%10 chunks get one extra.
    std::size_t base = n / 10, extra = n % 10;
    std::size_t start = 0;
    std::vector<std::pair<std::size_t, std::size_t>> chunks;
    for (std::size_t k = 0; k < 10; ++k) {
      std::size_t len = base + (k < extra ? 1 : 0);
      chunks.push_back({start, len});
      start += len;
    }
    for (const auto& [s, len] : chunks) {
      Fold f;
      for (std::size_t i = 0; i < n; ++i) {
        if (i >= s && i < s + len)
          f.test.push_back(ids[i]);
        else
          f.train.push_back(ids[i]);
      }
      split.folds.push_back(std::move(f));
    }
  } else {
    std::size_t n_train = (n * 8) / 10;
    std::size_t n_val = n / 10;
    Fold f;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < n_train)
        f.train.push_back(ids[i]);
      else if (i < n_train + n_val)
        f.val.push_back(ids[i]);
      else
        f.test.push_back(ids[i]);
    }
    split.folds.push_back(std::move(f));
  }
  return split;
}

namespace {

const char* kFiller[] = {"river", "stone", "window", "garden", "letter",
                         "street", "yellow", "winter", "market", "silver",
                         "candle", "orchard", "harbor", "meadow", "lantern",
                         "valley", "mirror", "thread", "copper", "willow"};
constexpr int kNumFiller = 20;
constexpr int kNumTopics = 8;

std::string filler_words(Rng& rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (!out.empty()) out += ' ';
    out += kFiller[rng.below(kNumFiller)];
  }
  return out;
}

}  // namespace

std::vector<Document> generate_synthetic_corpus(int n_docs, int max_clauses,
                                                std::uint64_t seed) {
  if (n_docs < 1) throw ConfigError("n_docs must be >= 1");
  if (max_clauses < 3) throw ConfigError("max_clauses must be >= 3");

  Rng rng(seed);
  std::vector<Document> docs;
  docs.reserve(static_cast<std::size_t>(n_docs));
  for (int di = 0; di < n_docs; ++di) {
    Document doc;
    doc.doc_id = "synth-" + std::to_string(seed) + "-" + std::to_string(di);
    int n = 3 + static_cast<int>(rng.below(
                    static_cast<std::uint64_t>(max_clauses - 2)));

    int n_emotions = (n >= 5 && rng.uniform() < 0.3) ? 2 : 1;
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(positions);

    std::vector<int> emotion_pos(positions.begin(),
                                 positions.begin() + n_emotions);
    std::vector<int> topics;
    while (static_cast<int>(topics.size()) < n_emotions) {
      int t = static_cast<int>(rng.below(kNumTopics));
      if (std::find(topics.begin(), topics.end(), t) == topics.end())
        topics.push_back(t);
    }

    // plan: emotion -> topic, causes per emotion (self-pairs and
    // multi-cause emotions both occur with fixed probability)
    std::map<int, int> topic_of_emotion;
    std::map<int, std::vector<int>> topics_of_clause;
    for (int k = 0; k < n_emotions; ++k) {
      int e = emotion_pos[static_cast<std::size_t>(k)];
      int topic = topics[static_cast<std::size_t>(k)];
      topic_of_emotion[e] = topic;

      int n_causes = rng.uniform() < 0.25 ? 2 : 1;
      std::vector<int> pool;
      for (int p = 1; p <= n; ++p)
        if (std::find(emotion_pos.begin(), emotion_pos.end(), p) ==
            emotion_pos.end())
          pool.push_back(p);
      rng.shuffle(pool);

      std::set<int> causes;
      if (rng.uniform() < 0.2) causes.insert(e);  // self-pair
      for (int c : pool) {
        if (static_cast<int>(causes.size()) >= n_causes) break;
        causes.insert(c);
      }
      if (causes.empty()) causes.insert(e);
      for (int c : causes) {
        doc.gold_pairs.insert({e, c});
        topics_of_clause[c].push_back(topic);
      }
    }

    for (int p = 1; p <= n; ++p) {
      Clause clause;
      clause.index = p;
      std::string text = filler_words(rng, 2 + static_cast<int>(rng.below(3)));
      bool is_emotion = topic_of_emotion.count(p) > 0;
      if (is_emotion)
        text += " emok topic" + std::to_string(topic_of_emotion[p]);
      auto it = topics_of_clause.find(p);
      if (it != topics_of_clause.end()) {
        for (int t : it->second) text += " causek topic" + std::to_string(t);
      }
      clause.text = text;
      if (is_emotion) {
        clause.emotion_category = "synthetic";
        clause.emotion_keyword = "emok";
      }
      clause.tokens = basic_tokenize(clause.text);
      doc.clauses.push_back(std::move(clause));
    }
    doc.validate();
    docs.push_back(std::move(doc));
  }
  return docs;
}

CorpusStats corpus_stats(const std::vector<Document>& docs) {
  CorpusStats st;
  st.documents = static_cast<long>(docs.size());
  for (const Document& d : docs) {
    st.clauses += d.size();
    st.pairs += static_cast<long>(d.gold_pairs.size());
  }
  return st;
}

std::vector<const Document*> select_documents(
    const std::vector<Document>& docs, const std::vector<std::string>& ids) {
  std::map<std::string, const Document*> by_id;
  for (const Document& d : docs) by_id[d.doc_id] = &d;
  std::vector<const Document*> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw Error("unknown doc id in split: " + id);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace ecpair
