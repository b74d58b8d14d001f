#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/chern_roots.hpp"
#include "schubert/integer.hpp"
#include "schubert/schubert_ring.hpp"

namespace schubert {

/// An immutable expression built from the tautological bundles U and Q of a
/// Grassmannian. o(m) is det(U-dual)^m. Copies share structure.
class BundleExpr {
 public:
  enum class Kind { sub, quotient, line, dual, sym, wedge, tensor, sum, det };

  static BundleExpr U();
  static BundleExpr Q();
  static BundleExpr o(std::int64_t m);
  static BundleExpr dual(BundleExpr e);
  static BundleExpr sym(int d, BundleExpr e);
  static BundleExpr wedge(int d, BundleExpr e);
  static BundleExpr tensor(BundleExpr a, BundleExpr b);
  static BundleExpr sum(BundleExpr a, BundleExpr b);
  static BundleExpr det(BundleExpr e);

  /// Whitespace-insensitive; throws ParseError with the offending position.
  static BundleExpr parse(std::string_view text);

  Kind kind() const noexcept;
  /// d for sym/wedge, m for o(m); zero otherwise.
  std::int64_t parameter() const noexcept;
  /// Operands, left to right (empty for U, Q, o).
  const std::vector<BundleExpr>& children() const noexcept;

  /// Canonical form, e.g. "sym(3,dual(U))". parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const BundleExpr& a, const BundleExpr& b);

 private:
  struct Node;
  explicit BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Rank by the usual binomial and multiplicative rules. Throws DomainError
/// if it does not fit in 64 bits.
std::uint64_t rank(const BundleExpr& e, const GrassmannianContext& ctx);

/// The multiset of formal Chern roots, as linear forms in x_1..x_k (roots of
/// U-dual) and y_1..y_{n-k} (roots of Q). Its size is the rank.
std::vector<LinearForm> chern_roots(const BundleExpr& e, const GrassmannianContext& ctx);

/// c_0..c_D with D = k(n-k). Classes above the computed range are absent
/// from `classes` (its size is max_degree + 1 when truncated).
struct ChernData {
  std::uint64_t rank = 0;
  std::vector<CohomologyElement> classes;

  const CohomologyElement& c(int i) const { return classes.at(static_cast<std::size_t>(i)); }
  /// 1 + c_1 + c_2 + ... as one inhomogeneous element.
  CohomologyElement total() const;
};

/// Degree-`degree` part of prod(1 + root) in the e/f basis.
ElementarySymmetricExpansion chern_class_symmetric(const BundleExpr& e,
                                                   const GrassmannianContext& ctx, int degree);

/// e_i -> sigma_{1^i}, f_j -> sigma_j, products taken in the Schubert ring.
CohomologyElement to_schubert(const ElementarySymmetricExpansion& p, const GrassmannianContext& ctx);

/// Total Chern class from the root multiset, truncated at k(n-k) or at
/// max_degree if smaller.
ChernData total_chern(const BundleExpr& e, const GrassmannianContext& ctx,
                      std::optional<int> max_degree = std::nullopt);

/// c_rank(e). Throws DomainError if the rank exceeds k(n-k).
CohomologyElement top_chern(const BundleExpr& e, const GrassmannianContext& ctx);

/// A class with rational coefficients: numerator / denominator, kept in
/// lowest terms with a positive denominator.
class RationalClass {
 public:
  explicit RationalClass(CohomologyElement numerator, Integer denominator = 1);

  const CohomologyElement& numerator() const noexcept { return numerator_; }
  const Integer& denominator() const noexcept { return denominator_; }
  bool is_integral() const noexcept { return denominator_ == 1; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }
  Rational coefficient(const Partition& lambda) const;
  /// Throws DomainError unless the denominator is 1.
  const CohomologyElement& integral() const;

  RationalClass& operator+=(const RationalClass& o);
  RationalClass& operator-=(const RationalClass& o);
  friend RationalClass operator+(RationalClass a, const RationalClass& b) { return a += b; }
  friend RationalClass operator-(RationalClass a, const RationalClass& b) { return a -= b; }
  friend RationalClass operator*(const RationalClass& a, const RationalClass& b);
  friend RationalClass operator*(const Rational& s, const RationalClass& a);
  friend bool operator==(const RationalClass&, const RationalClass&) = default;

  std::string to_string() const;

 private:
  void normalize();
  CohomologyElement numerator_;
  Integer denominator_;
};

/// ch_0..ch_max_degree with ch_m = (sum of root^m) / m!.
std::vector<RationalClass> chern_character(const BundleExpr& e, const GrassmannianContext& ctx,
                                           int max_degree);

/// ch from Chern classes via Newton's identities: ch_m = p_m(c_1, c_2, ...) / m!.
std::vector<RationalClass> chern_character_from_classes(const ChernData& chern, int max_degree);

/// Inverse of the above: c_m = (1/m) sum_{i=1..m} (-1)^{i-1} i! ch_i c_{m-i}.
/// Throws DomainError if a resulting class is not integral.
std::vector<CohomologyElement> chern_classes_from_character(const std::vector<RationalClass>& ch);

/// Truncated product of two graded characters.
std::vector<RationalClass> multiply_characters(const std::vector<RationalClass>& a,
                                               const std::vector<RationalClass>& b);

}  // namespace schubert
