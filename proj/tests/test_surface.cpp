#include "doctest.h"
#include "schubert/errors.hpp"
#include "schubert/surface.hpp"

using namespace schubert;

TEST_CASE("planes in a cubic fivefold") {
  const SurfaceInvariants s = surface_invariants(ZeroLocusProblem::planes_in_cubic_fivefold());
  CHECK(s.c1_sq == 25515);
  CHECK(s.c2 == 13041);
  CHECK(s.euler == 13041);
  CHECK(s.chi_o == 3213);
  CHECK(s.q == 21);
  CHECK(s.betti == BettiNumbers{1, 42, 13123, 42, 1});
  CHECK(s.hodge.h00 == 1);
  CHECK(s.hodge.h10 == 21);
  CHECK(s.hodge.h20 == 3233);
  CHECK(s.hodge.h11 == 6657);
}

TEST_CASE("zero-locus validation") {
  const GrassmannianContext g(3, 7);
  const BundleExpr sym3 = BundleExpr::sym(3, BundleExpr::dual(BundleExpr::U()));
  CHECK_THROWS_AS(ZeroLocusProblem({g, BundleExpr::Q(), 0}).validate(), DomainError);
  CHECK_THROWS_AS(ZeroLocusProblem({g, sym3, 41}).validate(), DomainError);
  CHECK_THROWS_AS(ZeroLocusProblem({g, sym3, -2}).validate(), DomainError);
  CHECK_NOTHROW(ZeroLocusProblem({g, sym3, 0}).validate());
}

TEST_CASE("complete intersections in the Klein quadric") {
  // Gr(2,4) is a quadric in P5. Cutting by degrees 1 and 2 gives a quartic
  // del Pezzo surface; degrees 1 and 3 give a K3 surface.
  const GrassmannianContext g(2, 4);
  const SurfaceInvariants del_pezzo = surface_invariants({g, BundleExpr::parse("sum(o(1),o(2))"), 0});
  CHECK(del_pezzo.c1_sq == 4);
  CHECK(del_pezzo.c2 == 8);
  CHECK(del_pezzo.chi_o == 1);
  CHECK(del_pezzo.hodge.h20 == 0);
  CHECK(del_pezzo.hodge.h11 == 6);

  const SurfaceInvariants k3 = surface_invariants({g, BundleExpr::parse("sum(o(1),o(3))"), 0});
  CHECK(k3.c1_sq == 0);
  CHECK(k3.c2 == 24);
  CHECK(k3.hodge.h20 == 1);
  CHECK(k3.hodge.h11 == 20);
  CHECK(k3.betti[2] == 22);

  CHECK_THROWS_AS(chern_numbers({GrassmannianContext(2, 5), BundleExpr::parse("sum(o(1),o(2))"), 0}), DomainError);
}

TEST_CASE("Betti and Hodge helpers") {
  CHECK(betti_numbers(24, 0) == BettiNumbers{1, 0, 22, 0, 1});
  CHECK_THROWS_AS(betti_numbers(0, 0), DomainError);
  CHECK_THROWS_AS(hodge_numbers(1, 2, 0), DomainError);
  const HodgeNumbers h = hodge_numbers(0, 24, 0);
  CHECK(h.chi_o == 2);
  CHECK(h.h20 == 1);
  CHECK(h.h11 == 20);
  CHECK_THROWS_AS(hodge_numbers(0, 0, 0), DomainError);  // h20 = -1
}

TEST_CASE("surfaces in P3 satisfy Noether's formula") {
  for (int d = 1; d <= 10; ++d) {
    const ProjectiveSurface s = p3_surface_oracle(d);
    CHECK(12 * s.chi_o == s.c1_sq + s.c2);
    CHECK(s.chi_o == projective_space_euler(3, 0) - projective_space_euler(3, -d));
  }
  CHECK(p3_surface_oracle(4).c2 == 24);
  CHECK(p3_surface_oracle(4).chi_o == 2);
  CHECK(p3_surface_oracle(1).chi_o == 1);
  CHECK(projective_space_euler(3, 2) == 10);
  CHECK_THROWS_AS(p3_surface_oracle(0), DomainError);
}

TEST_CASE("transcendental-lattice criterion") {
  const BaiCheck fano = bai_criterion(23, 21);
  CHECK(fano.b2_tr == 22);
  CHECK(fano.threshold == 512);
  CHECK(fano.satisfied);

  CHECK_FALSE(bai_criterion(23, 512).satisfied);
  CHECK_FALSE(bai_criterion(5, 0).satisfied);  // b2_tr = 4 < 5
  CHECK(bai_criterion(6, 0).threshold == 2);
  CHECK(bai_criterion(2, 0).threshold == 0);
  CHECK_THROWS_AS(bai_criterion(0, 0), DomainError);
}
