#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ecpair {

// Language-agnostic surface tokenization: CJK codepoints become single
// tokens, alphanumeric runs become lowercased word tokens, punctuation
// stays as single-character tokens. Whitespace separates.
std::vector<std::string> basic_tokenize(const std::string& text);

// Returns true if the majority of non-ASCII codepoints are CJK; used to
// pick a default query-template locale for a corpus.
bool mostly_cjk(const std::string& text);

// Backbone-facing tokenizer contract: surface tokens plus integer ids.
class Tokenizer {
public:
  virtual ~Tokenizer() = default;
  virtual std::vector<std::string> tokenize(const std::string& text) const = 0;
  virtual std::vector<int> ids(const std::vector<std::string>& tokens)
      const = 0;
  virtual int vocab_size() const = 0;
  virtual int cls_id() const = 0;
  virtual int sep_id() const = 0;
};

// Hashing tokenizer used by the toy backbone: no vocabulary file, token
// strings are hashed into a fixed id range.
class HashingTokenizer : public Tokenizer {
public:
  explicit HashingTokenizer(int vocab_size = 4096);
  std::vector<std::string> tokenize(const std::string& text) const override;
  std::vector<int> ids(const std::vector<std::string>& tokens) const override;
  int vocab_size() const override { return vocab_size_; }
  int cls_id() const override { return 0; }
  int sep_id() const override { return 1; }

private:
  int vocab_size_;
};

// Greedy longest-match-first subword tokenizer over a vocab file, the
// scheme used by BERT-style checkpoints.
class WordPieceTokenizer : public Tokenizer {
public:
  explicit WordPieceTokenizer(const std::string& vocab_path);
  std::vector<std::string> tokenize(const std::string& text) const override;
  std::vector<int> ids(const std::vector<std::string>& tokens) const override;
  int vocab_size() const override { return static_cast<int>(vocab_.size()); }
  int cls_id() const override { return cls_id_; }
  int sep_id() const override { return sep_id_; }

private:
  std::unordered_map<std::string, int> vocab_;
  int cls_id_ = 0;
  int sep_id_ = 0;
  int unk_id_ = 0;
};

}  // namespace ecpair
