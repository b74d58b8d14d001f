#pragma once

#include <array>

#include "schubert/bundle.hpp"
#include "schubert/integer.hpp"
#include "schubert/schubert_ring.hpp"

namespace schubert {

/// The zero locus of a general section of `bundle` on a Grassmannian, with
/// rank(bundle) = k(n-k) - 2 so that the locus is a surface. b1 is not
/// computed here; it is supplied from outside.
struct ZeroLocusProblem {
  GrassmannianContext ctx;
  BundleExpr bundle;
  Integer b1;

  /// Throws DomainError unless the locus is a surface and b1 is even and
  /// nonnegative.
  void validate() const;

  /// Planes in a cubic fivefold: Gr(3,7), Sym^3 U-dual, b1 = 42.
  static ZeroLocusProblem planes_in_cubic_fivefold();
};

struct ChernNumbers {
  Integer c1_squared;
  Integer c2;
};

using BettiNumbers = std::array<Integer, 5>;

struct HodgeNumbers {
  Integer h00;
  Integer h10;
  Integer h20;
  Integer h11;
  Integer chi_o;
};

struct SurfaceInvariants {
  Integer c1_sq;
  Integer c2;
  Integer euler;
  Integer chi_o;
  BettiNumbers betti;
  HodgeNumbers hodge;
  Integer q;
};

/// c1^2 = int (c1(T) - c1(E))^2 c_top(E) and
/// c2 = int (c1(E)^2 - c1(T) c1(E) + c2(T) - c2(E)) c_top(E), with the
/// ambient tangent bundle T = U-dual (x) Q.
ChernNumbers chern_numbers(const ZeroLocusProblem& problem);

/// b0 = b4 = 1, b3 = b1, b2 = c2 - 2 + 2 b1. Throws DomainError if b2 < 0.
BettiNumbers betti_numbers(const Integer& c2, const Integer& b1);

/// chi = (c1^2 + c2)/12, h20 = chi - 1 + q, h11 = c2 - 2 + 4q - 2 h20.
/// Throws DomainError if 12 does not divide c1^2 + c2 or a Hodge number
/// comes out negative.
HodgeNumbers hodge_numbers(const Integer& c1_sq, const Integer& c2, const Integer& q);

SurfaceInvariants surface_invariants(const ZeroLocusProblem& problem);

/// Smooth degree-d surface in P^3.
struct ProjectiveSurface {
  Integer c1_sq;
  Integer c2;
  Integer chi_o;
};

/// Chern numbers from c(S) = (1+H)^4 / (1+dH) with H^2 = d, and chi(O_S)
/// from chi(O_P3) - chi(O_P3(-d)). Throws std::logic_error if the two
/// chi(O_S) routes disagree.
ProjectiveSurface p3_surface_oracle(int d);

/// chi(O_{P^n}(m)) = binom(m + n, n) as a polynomial in m (valid for m < 0).
Integer projective_space_euler(int n, int m);

struct BaiCheck {
  Integer b2_tr;
  Integer threshold;
  bool satisfied;
};

/// b2_tr = b4 - 1 and threshold 2^floor((b2_tr - 3)/2); satisfied iff
/// b2_tr >= 5 and h10 < threshold. A negative exponent gives threshold 0.
BaiCheck bai_criterion(const Integer& b4_ambient_cubic, const Integer& h10_fiber);

}  // namespace schubert
