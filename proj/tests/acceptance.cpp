// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <array>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "random_bundle.hpp"
#include "schubert/bundle.hpp"
#include "schubert/schubert_ring.hpp"
#include "schubert/surface.hpp"
#include "schur_oracle.hpp"

using namespace schubert;

namespace {

const GrassmannianContext kGr37(3, 7);
const BundleExpr kSym3 = BundleExpr::sym(3, BundleExpr::dual(BundleExpr::U()));
const BundleExpr kTangent = BundleExpr::tensor(BundleExpr::dual(BundleExpr::U()), BundleExpr::Q());

CohomologyElement sigma(const GrassmannianContext& g, const Partition& p, Integer c = 1) {
  return CohomologyElement::schubert_class(g, p, c);
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome intersection_numbers() {
  const Partition s1{1}, s11{1, 1}, s111{1, 1, 1};
  const std::array<std::array<unsigned, 3>, 8> exponents{
      {{6, 0, 2}, {5, 2, 1}, {3, 3, 1}, {4, 1, 2}, {3, 0, 3}, {1, 4, 1}, {2, 2, 2}, {1, 1, 3}}};
  const std::array<int, 8> expected{5, 11, 6, 3, 1, 3, 2, 1};
  std::ostringstream got;
  bool ok = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::array<Factor, 3> f{{{s1, exponents[i][0]}, {s11, exponents[i][1]}, {s111, exponents[i][2]}}};
    const Integer v = intersection_number(f, kGr37);
    ok = ok && v == expected[i];
    got << (i ? "," : "") << v;
  }
  return {ok, "(" + got.str() + ")"};
}

Outcome top_class_coefficients() {
  const ElementarySymmetricExpansion c10 = chern_class_symmetric(kSym3, kGr37, 10);
  const std::array<std::pair<std::vector<int>, int>, 5> expected{{{{3, 2, 1, 0, 0, 0, 0}, 216},
                                                                  {{1, 3, 1, 0, 0, 0, 0}, 108},
                                                                  {{4, 0, 2, 0, 0, 0, 0}, 108},
                                                                  {{2, 1, 2, 0, 0, 0, 0}, -486},
                                                                  {{1, 0, 3, 0, 0, 0, 0}, 729}}};
  bool ok = c10.terms().size() == expected.size();
  for (const auto& [e, c] : expected) ok = ok && c10.coefficient(e) == c;
  return {ok, c10.to_string()};
}

Outcome sym3_classes() {
  const ChernData c = total_chern(kSym3, kGr37, 2);
  const auto s1sq = multiply(sigma(kGr37, {1}), sigma(kGr37, {1}));
  const bool ok = c.c(1) == sigma(kGr37, {1}, 10) && c.c(2) == Integer(40) * s1sq + sigma(kGr37, {1, 1}, 15) &&
                  c.c(2) == sigma(kGr37, {2}, 40) + sigma(kGr37, {1, 1}, 55);
  return {ok, "c1 = " + c.c(1).to_string() + ", c2 = " + c.c(2).to_string()};
}

Outcome tangent_classes() {
  const ChernData c = total_chern(kTangent, kGr37, 2);
  const bool ok = c.c(1) == sigma(kGr37, {1}, 7) && c.c(2) == sigma(kGr37, {1, 1}, 24) + sigma(kGr37, {2}, 23);
  return {ok, "c1 = " + c.c(1).to_string() + ", c2 = " + c.c(2).to_string()};
}

Outcome chern_numbers_of_surface() {
  const ChernNumbers n = chern_numbers(ZeroLocusProblem::planes_in_cubic_fivefold());
  // By hand: c1(S) = (7 - 10) sigma_1, so c1^2 = 9 int sigma_1^2 c10. Each
  // monomial e1^a e2^b e3^c of c10 becomes sigma_1^(a+2) sigma_11^b sigma_111^c.
  const ElementarySymmetricExpansion c10 = chern_class_symmetric(kSym3, kGr37, 10);
  Integer s1sq_c10 = 0;
  for (const auto& [e, coeff] : c10.terms()) {
    const std::array<Factor, 3> f{{{Partition{1}, static_cast<unsigned>(e[0] + 2)},
                                   {Partition{1, 1}, static_cast<unsigned>(e[1])},
                                   {Partition{1, 1, 1}, static_cast<unsigned>(e[2])}}};
    s1sq_c10 += coeff * intersection_number(f, kGr37);
  }
  const bool ok = n.c1_squared == 25515 && n.c2 == 13041 && s1sq_c10 == 2835 && 9 * s1sq_c10 == 25515;
  return {ok, "c1^2 = " + n.c1_squared.str() + ", c2 = " + n.c2.str() + ", 9*" + s1sq_c10.str()};
}

Outcome betti_and_hodge() {
  const SurfaceInvariants s = surface_invariants(ZeroLocusProblem::planes_in_cubic_fivefold());
  const bool ok = s.betti == BettiNumbers{1, 42, 13123, 42, 1} && s.hodge.h20 == 3233 && s.hodge.h11 == 6657 &&
                  s.chi_o == 3213;
  std::ostringstream d;
  d << "b = (" << s.betti[0] << "," << s.betti[1] << "," << s.betti[2] << "," << s.betti[3] << "," << s.betti[4]
    << "), h20 = " << s.hodge.h20 << ", h11 = " << s.hodge.h11 << ", chi = " << s.chi_o;
  return {ok, d.str()};
}

Outcome transcendental_criterion() {
  // Fano variety of lines of a cubic fourfold: b4 = 23, with h10 = 21.
  const BaiCheck c = bai_criterion(23, 21);
  const bool ok = c.b2_tr == 22 && c.threshold == 512 && c.satisfied;
  return {ok, "(" + c.b2_tr.str() + ", " + c.threshold.str() + ", " + (c.satisfied ? "true" : "false") + ")"};
}

Outcome noether_in_p3() {
  bool ok = true;
  for (int d = 1; d <= 10; ++d) {
    const ProjectiveSurface s = p3_surface_oracle(d);  // throws if the chi routes disagree
    ok = ok && 12 * s.chi_o == s.c1_sq + s.c2 &&
         s.chi_o == projective_space_euler(3, 0) - projective_space_euler(3, -d);
  }
  return {ok, "d = 1..10"};
}

Outcome property_suites() {
  std::size_t pairs = 0, pairings = 0, bundles = 0;
  bool ok = true;

  for (const auto [k, n] : std::array<std::pair<int, int>, 3>{{{2, 4}, {2, 5}, {3, 6}}}) {
    const GrassmannianContext g(k, n);
    for (const auto& a : partitions_in(g.rectangle())) {
      for (const auto& b : partitions_in(g.rectangle())) {
        CohomologyElement expected(g);
        for (const auto& [shape, c] : oracle::grassmannian_product(a.parts(), b.parts(), k, n)) {
          expected.add_term(Partition(shape), c);
        }
        ok = ok && sigma(g, a) * sigma(g, b) == expected;
        ++pairs;
      }
    }
  }

  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      const GrassmannianContext g(k, n);
      if (g.dimension() > 12) continue;
      for (const auto& a : partitions_in(g.rectangle())) {
        const Partition dual = complement(a, g.rectangle());
        for (const auto& b : partitions_in(g.rectangle(), g.dimension() - a.size())) {
          ok = ok && integrate(sigma(g, a) * sigma(g, b)) == (b == dual ? 1 : 0);
          ++pairings;
        }
      }
    }
  }

  std::mt19937 rng(424242);
  for (const auto [k, n] : std::array<std::pair<int, int>, 2>{{{2, 4}, {2, 5}}}) {
    const GrassmannianContext g(k, n);
    const int dim = g.dimension();
    for (int trial = 0; trial < 50; ++trial, ++bundles) {
      const BundleExpr a = support::random_bundle(rng, g, 2, 10);
      const BundleExpr b = support::random_bundle(rng, g, 2, 10);
      const ChernData ca = total_chern(a, g), cb = total_chern(b, g);
      const ChernData whitney = total_chern(BundleExpr::sum(a, b), g);
      const ChernData dual = total_chern(BundleExpr::dual(a), g);
      std::uniform_int_distribution<int> twist(-3, 3);
      const int m = twist(rng);
      const ChernData twisted = total_chern(BundleExpr::tensor(a, BundleExpr::o(m)), g);
      const CohomologyElement l = sigma(g, {1}, m);
      for (int i = 0; i <= dim; ++i) {
        CohomologyElement sum_expected(g), twist_expected(g);
        for (int j = 0; j <= i; ++j) {
          sum_expected += multiply(ca.c(j), cb.c(i - j));
          if (static_cast<std::uint64_t>(j) <= ca.rank) {
            twist_expected +=
                support::binomial(ca.rank - static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(i - j)) *
                multiply(ca.c(j), power(l, static_cast<unsigned>(i - j)));
          }
        }
        ok = ok && whitney.c(i) == sum_expected && dual.c(i) == (i % 2 ? -ca.c(i) : ca.c(i)) &&
             twisted.c(i) == twist_expected;
      }
    }
  }
  return {ok && bundles == 100, std::to_string(pairs) + " products, " + std::to_string(pairings) +
                                    " pairings, " + std::to_string(bundles) + " bundles"};
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 9> criteria{{
      {"intersection numbers on Gr(3,7)", intersection_numbers},
      {"c10(Sym3 U*) in elementary symmetric functions", top_class_coefficients},
      {"c1, c2 of Sym3 U*", sym3_classes},
      {"c1, c2 of the tangent bundle", tangent_classes},
      {"Chern numbers of the surface", chern_numbers_of_surface},
      {"Betti and Hodge numbers", betti_and_hodge},
      {"transcendental-lattice criterion", transcendental_criterion},
      {"Noether's formula for surfaces in P3", noether_in_p3},
      {"property suites", property_suites},
  }};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
