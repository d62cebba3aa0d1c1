#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idforest {

/// Input exceeds the desk-scale bound an exact routine supports.
class SizeLimitError : public std::length_error {
 public:
  SizeLimitError(const std::string& what, int limit, int actual)
      : std::length_error(what + ": size " + std::to_string(actual) +
                          " exceeds limit " + std::to_string(limit)),
        limit_(limit),
        actual_(actual) {}

  int limit() const noexcept { return limit_; }
  int actual() const noexcept { return actual_; }

 private:
  int limit_;
  int actual_;
};

/// A vertex or edge named by an operation does not exist in the graph.
class NotPresentError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A partition block is empty, overlaps another block, or names a foreign vertex.
class InvalidBlockError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace idforest
