#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/integer.hpp"

namespace schubert {

/// Which of the two root alphabets: x (roots of U-dual, size k) or
/// y (roots of Q, size n-k).
enum class Alphabet { x, y };

struct RootVariables {
  static constexpr char first = 'x';
  static constexpr char second = 'y';
};

struct ElementaryVariables {
  static constexpr char first = 'e';
  static constexpr char second = 'f';
};

/// Sparse polynomial with exact integer coefficients in two alphabets of
/// fixed sizes. An exponent vector lists the first alphabet, then the
/// second. Terms iterate in descending lexicographic order, so begin() is
/// the lex-leading term.
template <class Names>
class TwoAlphabetPolynomial {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Integer, std::greater<>>;

  TwoAlphabetPolynomial(int first_size, int second_size)
      : first_size_(first_size), second_size_(second_size) {
    if (first_size < 0 || second_size < 0) throw std::invalid_argument("negative alphabet size");
  }

  static TwoAlphabetPolynomial constant(int first_size, int second_size, const Integer& c) {
    TwoAlphabetPolynomial p(first_size, second_size);
    p.add_term(Exponent(static_cast<std::size_t>(first_size + second_size), 0), c);
    return p;
  }

  /// The variable x_index / y_index (1-based).
  static TwoAlphabetPolynomial variable(int first_size, int second_size, Alphabet alphabet,
                                        int index) {
    TwoAlphabetPolynomial p(first_size, second_size);
    const int size = alphabet == Alphabet::x ? first_size : second_size;
    if (index < 1 || index > size) throw std::out_of_range("variable index out of range");
    Exponent e(static_cast<std::size_t>(first_size + second_size), 0);
    e[static_cast<std::size_t>((alphabet == Alphabet::x ? 0 : first_size) + index - 1)] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  int first_size() const noexcept { return first_size_; }
  int second_size() const noexcept { return second_size_; }
  int num_variables() const noexcept { return first_size_ + second_size_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Exponent exponent, const Integer& c) {
    if (exponent.size() != static_cast<std::size_t>(num_variables())) {
      throw std::invalid_argument("exponent vector does not match the alphabet sizes");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponent), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Largest total degree of a term; -1 for zero.
  int total_degree() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  TwoAlphabetPolynomial homogeneous_part(int degree) const {
    TwoAlphabetPolynomial out(first_size_, second_size_);
    for (const auto& [e, c] : terms_) {
      if (degree_of(e) == degree) out.terms_.emplace(e, c);
    }
    return out;
  }

  TwoAlphabetPolynomial& operator+=(const TwoAlphabetPolynomial& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TwoAlphabetPolynomial& operator-=(const TwoAlphabetPolynomial& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  TwoAlphabetPolynomial& operator*=(const Integer& s) {
    if (s == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  /// Product with every term of total degree above max_degree dropped.
  TwoAlphabetPolynomial multiply_truncated(const TwoAlphabetPolynomial& o,
                                           std::optional<int> max_degree) const {
    require_same_shape(o);
    TwoAlphabetPolynomial out(first_size_, second_size_);
    Exponent sum(static_cast<std::size_t>(num_variables()));
    for (const auto& [ea, ca] : terms_) {
      const int da = degree_of(ea);
      for (const auto& [eb, cb] : o.terms_) {
        if (max_degree && da + degree_of(eb) > *max_degree) continue;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
        out.add_term(sum, ca * cb);
      }
    }
    return out;
  }

  friend TwoAlphabetPolynomial operator+(TwoAlphabetPolynomial a, const TwoAlphabetPolynomial& b) { return a += b; }
  friend TwoAlphabetPolynomial operator-(TwoAlphabetPolynomial a, const TwoAlphabetPolynomial& b) { return a -= b; }
  friend TwoAlphabetPolynomial operator*(TwoAlphabetPolynomial a, const Integer& s) { return a *= s; }
  friend TwoAlphabetPolynomial operator*(const Integer& s, TwoAlphabetPolynomial a) { return a *= s; }
  friend TwoAlphabetPolynomial operator*(const TwoAlphabetPolynomial& a, const TwoAlphabetPolynomial& b) {
    return a.multiply_truncated(b, std::nullopt);
  }
  friend bool operator==(const TwoAlphabetPolynomial&, const TwoAlphabetPolynomial&) = default;

  /// e.g. "216 e1^3 e2^2 e3 - 486 e1^2 e2 e3^2"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const Integer magnitude = negative ? Integer(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono;
      for (int i = 0; i < num_variables(); ++i) {
        const int power = e[static_cast<std::size_t>(i)];
        if (power == 0) continue;
        if (!mono.empty()) mono += ' ';
        mono += i < first_size_ ? Names::first : Names::second;
        mono += std::to_string(i < first_size_ ? i + 1 : i - first_size_ + 1);
        if (power > 1) mono += "^" + std::to_string(power);
      }
      if (magnitude != 1 || mono.empty()) {
        out += magnitude.str();
        if (!mono.empty()) out += ' ';
      }
      out += mono;
      first = false;
    }
    return out;
  }

  static int degree_of(const Exponent& e) noexcept {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }

 private:
  void require_same_shape(const TwoAlphabetPolynomial& o) const {
    if (first_size_ != o.first_size_ || second_size_ != o.second_size_) {
      throw std::invalid_argument("polynomials over different alphabets");
    }
  }

  int first_size_;
  int second_size_;
  Terms terms_;
};

/// Polynomial in the formal Chern roots x_1..x_k and y_1..y_{n-k}.
using RootPolynomial = TwoAlphabetPolynomial<RootVariables>;

/// Polynomial in the elementary symmetric functions e_i of the x-alphabet
/// and f_j of the y-alphabet. Exponent slot i counts e_{i+1}.
using ElementarySymmetricExpansion = TwoAlphabetPolynomial<ElementaryVariables>;

/// Raised by symmetric_reduce when a transposition moves the input.
class NonSymmetricError : public DomainError {
 public:
  NonSymmetricError(Alphabet alphabet, int i, int j);
  Alphabet alphabet() const noexcept { return alphabet_; }
  /// The offending transposition (1-based variable indices).
  std::pair<int, int> transposition() const noexcept { return {i_, j_}; }

 private:
  Alphabet alphabet_;
  int i_;
  int j_;
};

/// Rewrites a polynomial symmetric in each alphabet separately in terms of
/// the elementary symmetric functions, by lex leading-term elimination:
/// first in x with y-polynomials as coefficients, then each coefficient
/// in y. Throws NonSymmetricError on non-symmetric input.
ElementarySymmetricExpansion symmetric_reduce(const RootPolynomial& p);

/// Substitutes e_i and f_j by the elementary symmetric polynomials.
RootPolynomial expand_elementary(const ElementarySymmetricExpansion& p);

/// The power sum p_m of one alphabet in the e- (or f-) basis, from
/// Newton's identities.
ElementarySymmetricExpansion power_sum(Alphabet alphabet, int m, int first_size, int second_size);

/// Coefficients of a linear form in the root variables (x's then y's).
using LinearForm = std::vector<std::int64_t>;

RootPolynomial linear_form_polynomial(const LinearForm& form, int first_size, int second_size);

/// prod (1 + r) over the roots, dropping terms above max_degree.
RootPolynomial product_one_plus(std::span<const LinearForm> roots, int first_size,
                                int second_size, int max_degree);

/// sum r^m over the roots.
RootPolynomial root_power_sum(std::span<const LinearForm> roots, int m, int first_size,
                              int second_size);

/// Parses "c * x1^a x2^b ... + ..." (terms joined by + or -, factors
/// separated by whitespace or '*'). Alphabet sizes default to the largest
/// index seen in each alphabet.
RootPolynomial parse_root_polynomial(std::string_view text,
                                     std::optional<std::pair<int, int>> sizes = std::nullopt);

}  // namespace schubert
