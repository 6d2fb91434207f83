#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "uta/model.hpp"

namespace uta {

struct SourceSpan {
  std::string file;
  int line = 0;
  int col_start = 0;  // 1-based, inclusive
  int col_end = 0;    // exclusive
};

struct ParseError {
  SourceSpan span;
  std::string message;
  std::string str() const;
};

class ParseErrors : public std::runtime_error {
 public:
  explicit ParseErrors(std::vector<ParseError> errs);
  const std::vector<ParseError>& errors() const { return errs_; }

 private:
  std::vector<ParseError> errs_;
};

// Parse a `.uta` model. Throws ParseErrors listing every problem found.
Network parse(const std::string& text, const std::string& file = "<input>");
Network parse_file(const std::string& path);

std::string print(const Network& n);

std::string format_update(const Network& n, const Edge& e);
std::string format_guard(const Network& n, const Guard& g);
std::string format_lin(const Network& n, const LinExpr& e);

}  // namespace uta
