#include "ecpair/tokenizer.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>

#include "ecpair/errors.hpp"

namespace ecpair {

namespace {

// Decodes one UTF-8 codepoint starting at i; advances i. Invalid bytes are
// passed through as single-byte codepoints.
char32_t next_codepoint(const std::string& s, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  std::size_t len = 1;
  char32_t cp = b0;
  if ((b0 & 0x80u) == 0) {
    len = 1;
  } else if ((b0 & 0xE0u) == 0xC0u) {
    len = 2;
    cp = b0 & 0x1Fu;
  } else if ((b0 & 0xF0u) == 0xE0u) {
    len = 3;
    cp = b0 & 0x0Fu;
  } else if ((b0 & 0xF8u) == 0xF0u) {
    len = 4;
    cp = b0 & 0x07u;
  }
  if (i + len > s.size()) len = 1, cp = b0;
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0u) != 0x80u) {  // truncated sequence
      len = 1;
      cp = b0;
      break;
    }
    cp = (cp << 6) | (bk & 0x3Fu);
  }
  i += len;
  return cp;
}

bool is_cjk(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) ||    // unified ideographs
         (cp >= 0x3400 && cp <= 0x4DBF) ||    // extension A
         (cp >= 0xF900 && cp <= 0xFAFF) ||    // compatibility
         (cp >= 0x3000 && cp <= 0x303F) ||    // CJK punctuation
         (cp >= 0xFF00 && cp <= 0xFFEF);      // fullwidth forms
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<std::string> basic_tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&]() {
    if (!word.empty()) {
      tokens.push_back(word);
      word.clear();
    }
  };
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = next_codepoint(text, i);
    if (cp < 0x80) {
      char ch = static_cast<char>(cp);
      if (std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else if (std::isalnum(static_cast<unsigned char>(ch))) {
        word += static_cast<char>(
            std::tolower(static_cast<unsigned char>(ch)));
      } else {
        flush();
        tokens.push_back(std::string(1, ch));
      }
    } else if (is_cjk(cp)) {
      flush();
      tokens.push_back(text.substr(start, i - start));
    } else {
      // other scripts: accumulate like word characters
      word += text.substr(start, i - start);
    }
  }
  flush();
  return tokens;
}

bool mostly_cjk(const std::string& text) {
  long cjk = 0, other = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = next_codepoint(text, i);
    if (cp < 0x80) continue;
    (is_cjk(cp) ? cjk : other)++;
  }
  return cjk > 0 && cjk >= other;
}

HashingTokenizer::HashingTokenizer(int vocab_size) : vocab_size_(vocab_size) {
  if (vocab_size_ < 16) throw ConfigError("hashing vocab_size must be >= 16");
}

std::vector<std::string> HashingTokenizer::tokenize(
    const std::string& text) const {
  return basic_tokenize(text);
}

std::vector<int> HashingTokenizer::ids(
    const std::vector<std::string>& tokens) const {
  constexpr int kSpecials = 2;  // [CLS], [SEP]
  std::vector<int> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (t == "[CLS]") {
      out.push_back(cls_id());
    } else if (t == "[SEP]") {
      out.push_back(sep_id());
    } else {
      out.push_back(kSpecials +
                    static_cast<int>(fnv1a(t) %
                                     static_cast<std::uint64_t>(vocab_size_ -
                                                                kSpecials)));
    }
  }
  return out;
}

WordPieceTokenizer::WordPieceTokenizer(const std::string& vocab_path) {
  std::ifstream in(vocab_path);
  if (!in) throw Error("cannot open vocab file: " + vocab_path);
  std::string line;
  int id = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    vocab_[line] = id++;
  }
  auto need = [&](const char* tok) {
    auto it = vocab_.find(tok);
    if (it == vocab_.end())
      throw Error(std::string("vocab file missing ") + tok + ": " +
                  vocab_path);
    return it->second;
  };
  cls_id_ = need("[CLS]");
  sep_id_ = need("[SEP]");
  unk_id_ = need("[UNK]");
}

std::vector<std::string> WordPieceTokenizer::tokenize(
    const std::string& text) const {
  std::vector<std::string> out;
  for (const std::string& word : basic_tokenize(text)) {
    // greedy longest-match-first with ## continuations
    std::size_t start = 0;
    std::vector<std::string> pieces;
    bool bad = false;
    while (start < word.size()) {
      std::size_t end = word.size();
      std::string cur;
      bool found = false;
      while (end > start) {
        std::string sub = word.substr(start, end - start);
        if (start > 0) sub = "##" + sub;
        if (vocab_.count(sub)) {
          cur = sub;
          found = true;
          break;
        }
        // back off one codepoint, not one byte
        std::size_t e = end - 1;
        while (e > start &&
               (static_cast<unsigned char>(word[e]) & 0xC0u) == 0x80u)
          --e;
        end = e;
      }
      if (!found) {
        bad = true;
        break;
      }
      pieces.push_back(cur);
      start += cur.size() - (pieces.size() > 1 ? 2 : 0);
    }
    if (bad) {
      out.push_back("[UNK]");
    } else {
      out.insert(out.end(), pieces.begin(), pieces.end());
    }
  }
  return out;
}

std::vector<int> WordPieceTokenizer::ids(
    const std::vector<std::string>& tokens) const {
  std::vector<int> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    auto it = vocab_.find(t);
    out.push_back(it == vocab_.end() ? unk_id_ : it->second);
  }
  return out;
}

}  // namespace ecpair
