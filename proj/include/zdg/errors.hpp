#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdg {

/// A Cayley table failed one of the semigroup axioms. `witness()` carries the
/// first offending index tuple in lexicographic scan order; unused slots are 0.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedTable,
    ZeroNotAbsorbing,
    NotCommutative,
    NotAssociative,
  };

  ValidationError(Kind kind, const std::string& msg,
                  std::array<std::size_t, 3> witness = {0, 0, 0})
      : std::runtime_error(msg), kind_(kind), witness_(witness) {}

  Kind kind() const noexcept { return kind_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::array<std::size_t, 3> witness_;
};

/// Malformed input document (bad JSON, missing or mistyped fields).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested structure exceeds a configured resource cap.
class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(const std::string& msg, std::size_t requested, std::size_t cap)
      : std::runtime_error(msg), requested_(requested), cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

class UnknownVertex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class SameVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Clique number is undefined on an empty graph.
class NoVertices : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zdg
