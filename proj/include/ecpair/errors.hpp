#pragma once

#include <stdexcept>
#include <string>

namespace ecpair {

// Base for all library errors. The CLI maps these to a single
// machine-parsable line and a non-zero exit code.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files (native corpus, canonical corpus, templates).
class ParseError : public Error {
public:
  ParseError(const std::string& msg, const std::string& where, long line)
      : Error(where + ":" + std::to_string(line) + ": " + msg),
        where_(where), line_(line) {}
  const std::string& where() const { return where_; }
  long line() const { return line_; }

private:
  std::string where_;
  long line_;
};

// Violated invariants on otherwise well-formed data.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Bad arguments or configuration values.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace ecpair
