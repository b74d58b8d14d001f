#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/partition.hpp"

namespace schubert {

/// Fixes the ring H*(Gr(k, n), Z). Requires 1 <= k < n.
class GrassmannianContext {
 public:
  GrassmannianContext(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int codim_rank() const noexcept { return n_ - k_; }  // n - k
  int dimension() const noexcept { return k_ * (n_ - k_); }
  Rectangle rectangle() const { return Rectangle(k_, n_ - k_); }
  Partition point_class() const;
  std::string to_string() const;

  friend bool operator==(const GrassmannianContext&, const GrassmannianContext&) = default;

 private:
  int k_;
  int n_;
};

/// A finite integer combination of Schubert classes. Partitions that do not
/// fit the rectangle vanish in the ring and are dropped on insertion; zero
/// coefficients are never stored.
class CohomologyElement {
 public:
  using Terms = std::map<Partition, Integer>;

  explicit CohomologyElement(GrassmannianContext ctx) : ctx_(ctx) {}

  static CohomologyElement zero(const GrassmannianContext& ctx) { return CohomologyElement(ctx); }
  static CohomologyElement unit(const GrassmannianContext& ctx);
  /// sigma_lambda. Throws DomainError if lambda does not fit.
  static CohomologyElement schubert_class(const GrassmannianContext& ctx, const Partition& lambda,
                                          Integer coefficient = 1);

  const GrassmannianContext& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Partition& lambda) const;

  /// True for zero and for elements whose terms share one codimension.
  bool is_homogeneous() const noexcept;
  /// Codimension of a nonzero homogeneous element; -1 otherwise.
  int degree() const noexcept;
  CohomologyElement graded_part(int degree) const;

  void add_term(const Partition& lambda, const Integer& coefficient);

  CohomologyElement& operator+=(const CohomologyElement& other);
  CohomologyElement& operator-=(const CohomologyElement& other);
  CohomologyElement& operator*=(const Integer& scalar);
  CohomologyElement operator-() const;

  friend CohomologyElement operator+(CohomologyElement a, const CohomologyElement& b) { return a += b; }
  friend CohomologyElement operator-(CohomologyElement a, const CohomologyElement& b) { return a -= b; }
  friend CohomologyElement operator*(CohomologyElement a, const Integer& s) { return a *= s; }
  friend CohomologyElement operator*(const Integer& s, CohomologyElement a) { return a *= s; }
  friend CohomologyElement operator*(const CohomologyElement& a, const CohomologyElement& b);
  friend bool operator==(const CohomologyElement&, const CohomologyElement&) = default;

  /// Terms in report order, e.g. "σ(4,1,1) + 2σ(3,2,1) + σ(2,2,2)";
  /// the unit prints as "σ()" and zero as "0".
  std::string to_string() const;
  /// Terms sorted by degree ascending, then descending lex.
  std::vector<std::pair<Partition, Integer>> ordered_terms() const;

 private:
  void require_same_context(const CohomologyElement& other) const;

  GrassmannianContext ctx_;
  Terms terms_;
};

/// sigma_p * sigma_lambda: every horizontal strip of size p added to
/// lambda that stays inside the rectangle, each with coefficient 1. Returns
/// zero when p < 0 or p > n - k.
CohomologyElement pieri(int p, const Partition& lambda, const GrassmannianContext& ctx);

/// The partitions produced by pieri(), in report order. Memoized.
const std::vector<Partition>& pieri_terms(int p, const Partition& lambda,
                                          const GrassmannianContext& ctx);

/// Applies sigma_p to every term of x.
CohomologyElement pieri_apply(int p, const CohomologyElement& x);

/// A polynomial in the special classes sigma_1..sigma_{n-k}. Each key is the
/// multiset of special indices (sorted descending, zeros removed).
class SpecialPolynomial {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Integer>;

  void add(Monomial specials, const Integer& coefficient);
  const Terms& terms() const noexcept { return terms_; }

  /// Sum of coefficient * sigma_{p1} * ... * x, evaluated by iterated Pieri.
  CohomologyElement apply_to(const CohomologyElement& x) const;
  CohomologyElement evaluate(const GrassmannianContext& ctx) const;

  /// e.g. "σ1^2 - σ2".
  std::string to_string() const;

  friend bool operator==(const SpecialPolynomial&, const SpecialPolynomial&) = default;

 private:
  Terms terms_;
};

/// Expansion of det(sigma_{lambda_i + j - i}) with sigma_0 = 1 and sigma_p = 0
/// outside 0..n-k. Throws DomainError if lambda does not fit.
SpecialPolynomial giambelli(const Partition& lambda, const GrassmannianContext& ctx);

/// Cup product: each class of b is expanded with giambelli() and applied to
/// a by iterated Pieri. Throws DomainError on mismatched contexts.
CohomologyElement multiply(const CohomologyElement& a, const CohomologyElement& b);

CohomologyElement power(const CohomologyElement& x, unsigned exponent);

/// Coefficient of the point class. The argument must be zero or homogeneous
/// of degree k(n-k); anything else throws DomainError.
Integer integrate(const CohomologyElement& x);

struct Factor {
  Partition partition;
  unsigned exponent = 1;
};

/// integrate(prod sigma_lambda_i^e_i). Throws DomainError when the total
/// degree differs from k(n-k) or a factor does not fit.
Integer intersection_number(std::span<const Factor> factors, const GrassmannianContext& ctx);

}  // namespace schubert
