#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubert {

// Malformed text input: partitions, bundle expressions, polynomials.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that is mathematically invalid in its context:
// mismatched Grassmannians, wrong total degree, non-symmetric polynomials,
// non-integral Chern classes, rank conditions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace schubert
