#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dotdepth {

/// Malformed or inconsistent user input (regex, DFA file, formula text, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Regex syntax error carrying the byte offset where parsing stopped.
class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A configurable cap (semigroup size, signature size, variable count) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. Knast-only routine on a
/// semigroup that is not in B1).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A check that the theory guarantees came out false. Seeing one of these
/// means the implementation is wrong.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dotdepth
