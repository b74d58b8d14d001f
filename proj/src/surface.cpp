#include "schubert/surface.hpp"

#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

void ZeroLocusProblem::validate() const {
  const std::uint64_t r = rank(bundle, ctx);
  const int dim = ctx.dimension();
  if (dim < 2 || r != static_cast<std::uint64_t>(dim - 2)) {
    throw DomainError("zero locus of " + bundle.to_string() + " on " + ctx.to_string() +
                      " is not a surface: rank " + std::to_string(r) + ", need " +
                      std::to_string(dim - 2));
  }
  if (b1 < 0) throw DomainError("b1 must be nonnegative");
  if (b1 % 2 != 0) throw DomainError("b1 must be even (b1 = 2q), got " + b1.str());
}

ZeroLocusProblem ZeroLocusProblem::planes_in_cubic_fivefold() {
  return {GrassmannianContext(3, 7), BundleExpr::sym(3, BundleExpr::dual(BundleExpr::U())), 42};
}

ChernNumbers chern_numbers(const ZeroLocusProblem& problem) {
  problem.validate();
  const GrassmannianContext& ctx = problem.ctx;
  const BundleExpr tangent = BundleExpr::tensor(BundleExpr::dual(BundleExpr::U()), BundleExpr::Q());

  const ChernData t = total_chern(tangent, ctx, 2);
  const ChernData e = total_chern(problem.bundle, ctx, 2);
  const CohomologyElement fundamental = top_chern(problem.bundle, ctx);

  const CohomologyElement c1 = t.c(1) - e.c(1);
  const CohomologyElement c2 = multiply(e.c(1), e.c(1)) - multiply(t.c(1), e.c(1)) + t.c(2) - e.c(2);

  return {integrate(multiply(multiply(c1, c1), fundamental)), integrate(multiply(c2, fundamental))};
}

BettiNumbers betti_numbers(const Integer& c2, const Integer& b1) {
  if (b1 < 0) throw DomainError("b1 must be nonnegative");
  const Integer b2 = c2 - 2 + 2 * b1;
  if (b2 < 0) {
    throw DomainError("b2 = c2 - 2 + 2 b1 = " + b2.str() + " is negative");
  }
  return {1, b1, b2, b1, 1};
}

HodgeNumbers hodge_numbers(const Integer& c1_sq, const Integer& c2, const Integer& q) {
  const Integer numerator = c1_sq + c2;
  if (numerator % 12 != 0) {
    throw DomainError("c1^2 + c2 = " + numerator.str() + " is not divisible by 12");
  }
  if (q < 0) throw DomainError("irregularity must be nonnegative");
  HodgeNumbers h;
  h.chi_o = numerator / 12;
  h.h00 = 1;
  h.h10 = q;
  h.h20 = h.chi_o - 1 + q;
  h.h11 = c2 - 2 + 4 * q - 2 * h.h20;
  if (h.h20 < 0 || h.h11 < 0) {
    throw DomainError("inconsistent surface data: h20 = " + h.h20.str() + ", h11 = " + h.h11.str());
  }
  return h;
}

SurfaceInvariants surface_invariants(const ZeroLocusProblem& problem) {
  const ChernNumbers numbers = chern_numbers(problem);
  const Integer q = problem.b1 / 2;
  SurfaceInvariants s;
  s.c1_sq = numbers.c1_squared;
  s.c2 = numbers.c2;
  s.euler = numbers.c2;
  s.betti = betti_numbers(numbers.c2, problem.b1);
  s.hodge = hodge_numbers(numbers.c1_squared, numbers.c2, q);
  s.chi_o = s.hodge.chi_o;
  s.q = q;

  const auto& b = s.betti;
  if (b[0] - b[1] + b[2] - b[3] + b[4] != s.euler || b[2] != 2 * s.hodge.h20 + s.hodge.h11) {
    throw std::logic_error("Betti and Hodge numbers are inconsistent");
  }
  return s;
}

Integer projective_space_euler(int n, int m) {
  // (m+n)(m+n-1)...(m+1) / n!
  Integer num = 1;
  for (int i = 1; i <= n; ++i) num *= m + i;
  return num / factorial(static_cast<unsigned>(n));
}

ProjectiveSurface p3_surface_oracle(int d) {
  if (d < 1) throw DomainError("surface degree must be positive");
  // c(S) = (1+H)^4 (1 - dH + d^2 H^2 - ...), truncated at H^2.
  const Integer c1 = 4 - Integer(d);
  const Integer c2 = 6 - 4 * Integer(d) + Integer(d) * d;
  const Integer h_squared = d;

  ProjectiveSurface s;
  s.c1_sq = c1 * c1 * h_squared;
  s.c2 = c2 * h_squared;

  const Integer cubic = Integer(d) * d * d - 6 * Integer(d) * d + 11 * Integer(d);
  if (cubic % 6 != 0) throw std::logic_error("d^3 - 6d^2 + 11d is not divisible by 6");
  s.chi_o = cubic / 6;

  const Integer via_sequence = projective_space_euler(3, 0) - projective_space_euler(3, -d);
  if (via_sequence != s.chi_o) {
    throw std::logic_error("chi(O_S) routes disagree for d = " + std::to_string(d));
  }
  return s;
}

BaiCheck bai_criterion(const Integer& b4_ambient_cubic, const Integer& h10_fiber) {
  if (b4_ambient_cubic < 1) throw DomainError("b4 of the cubic must be at least 1");
  if (b4_ambient_cubic > 1'000'000) throw DomainError("b4 of the cubic is unreasonably large");
  BaiCheck check;
  check.b2_tr = b4_ambient_cubic - 1;
  if (check.b2_tr < 3) {
    check.threshold = 0;
    check.satisfied = false;
    return check;
  }
  const auto exponent = static_cast<unsigned>((check.b2_tr - 3) / 2);
  check.threshold = Integer(1) << exponent;
  check.satisfied = check.b2_tr >= 5 && h10_fiber < check.threshold;
  return check;
}

}  // namespace schubert
