#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecpair/corpus.hpp"

namespace ecpair {

enum class QueryKindTag {
  static_emotion,   // extract all emotion clauses
  static_cause,     // extract all cause clauses (dual-direction variant)
  static_pair,      // extract pairs in one turn (end-to-end variant)
  dynamic_emotion,  // emotions corresponding to an anchor clause
  dynamic_cause,    // causes corresponding to an anchor clause
};

bool is_dynamic(QueryKindTag tag);
std::string to_string(QueryKindTag tag);
QueryKindTag query_kind_from_string(const std::string& s);

struct QueryKind {
  QueryKindTag tag = QueryKindTag::static_emotion;
  std::optional<int> anchor;  // clause index, required iff dynamic

  static QueryKind static_kind(QueryKindTag tag);
  static QueryKind dynamic_kind(QueryKindTag tag, int anchor);
};

enum class QueryLanguage { natural, pseudo, structured };
std::string to_string(QueryLanguage ql);
QueryLanguage query_language_from_string(const std::string& s);

struct RenderedQuery {
  QueryKind kind;
  std::string text;         // template with {anchor} substituted
  std::string anchor_text;  // empty for static kinds
};

// Templates keyed by (kind, language) for one locale. A template contains
// at most one "{anchor}" placeholder; dynamic kinds require it.
class TemplateSet {
public:
  // Shipped locales: "en" (the framework's original wording) and "zh".
  static TemplateSet builtin(const std::string& locale);
  // JSON file: { locale: { language: { kind: template } } }.
  static TemplateSet load(const std::string& path, const std::string& locale);

  const std::string& get(QueryKindTag tag, QueryLanguage lang) const;
  const std::string& locale() const { return locale_; }

private:
  std::string locale_;
  std::map<std::pair<QueryKindTag, QueryLanguage>, std::string> templates_;
};

// Exact template instantiation; dynamic kinds substitute the anchor
// clause's text verbatim.
RenderedQuery render_query(const QueryKind& kind, QueryLanguage lang,
                           const Document& doc, const TemplateSet& templates);

// Predictions feeding the next turn's query construction.
struct TurnInputs {
  std::optional<std::vector<int>> emotions;    // turn 1 output, for turn 2
  std::optional<std::vector<Pair>> candidates;  // turn 2 output, for turn 3
};

// Turn 1: one static emotion query. Turn 2: one dynamic cause query per
// predicted emotion. Turn 3: one dynamic emotion query per distinct cause
// clause among the candidates.
std::vector<RenderedQuery> build_turn_queries(int turn, const Document& doc,
                                              const TurnInputs& prior,
                                              QueryLanguage lang,
                                              const TemplateSet& templates);

}  // namespace ecpair
