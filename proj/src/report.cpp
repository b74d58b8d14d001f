#include "schubert/report.hpp"

#include <array>

#include "schubert/bundle.hpp"
#include "schubert/schubert_ring.hpp"
#include "schubert/surface.hpp"

namespace schubert {

namespace {

class Table {
 public:
  void add(std::string label, const Integer& expected, const Integer& computed, std::string source) {
    entries_.push_back({std::move(label), expected, computed, std::move(source), expected == computed});
  }
  std::vector<ReportEntry> take() { return std::move(entries_); }

 private:
  std::vector<ReportEntry> entries_;
};

struct IntersectionCase {
  const char* label;
  unsigned s1, s11, s111;
  int expected;
};

constexpr std::array<IntersectionCase, 8> kIntersections{{
    {"σ1^6·σ111^2", 6, 0, 2, 5},
    {"σ1^5·σ11^2·σ111", 5, 2, 1, 11},
    {"σ1^3·σ11^3·σ111", 3, 3, 1, 6},
    {"σ1^4·σ11·σ111^2", 4, 1, 2, 3},
    {"σ1^3·σ111^3", 3, 0, 3, 1},
    {"σ1·σ11^4·σ111", 1, 4, 1, 3},
    {"σ1^2·σ11^2·σ111^2", 2, 2, 2, 2},
    {"σ1·σ11·σ111^3", 1, 1, 3, 1},
}};

}  // namespace

std::vector<ReportEntry> paper_report(const ReportOptions& options) {
  Table table;
  const GrassmannianContext gr(3, 7);
  const Partition s1{1}, s11{1, 1}, s111{1, 1, 1}, s2{2};

  // Intersection numbers on Gr(3,7).
  std::array<Integer, 8> intersections;
  for (std::size_t i = 0; i < kIntersections.size(); ++i) {
    const auto& c = kIntersections[i];
    const std::array<Factor, 3> factors{{{s1, c.s1}, {s11, c.s11}, {s111, c.s111}}};
    intersections[i] = intersection_number(factors, gr);
    table.add(std::string("∫ ") + c.label, c.expected, intersections[i], "Schubert calculus on Gr(3,7)");
  }

  const BundleExpr sym3 = BundleExpr::sym(3, BundleExpr::dual(BundleExpr::U()));
  const BundleExpr tangent = BundleExpr::tensor(BundleExpr::dual(BundleExpr::U()), BundleExpr::Q());

  const ChernData e = total_chern(sym3, gr, 2);
  table.add("c1(Sym3 U*) coefficient of σ1", 10, e.c(1).coefficient(s1), "splitting principle");
  table.add("c2(Sym3 U*) coefficient of σ2", 40, e.c(2).coefficient(s2), "splitting principle");
  table.add("c2(Sym3 U*) coefficient of σ11", 55, e.c(2).coefficient(s11),
            "splitting principle (40σ1^2 + 15σ11)");

  const ChernData t = total_chern(tangent, gr, 2);
  table.add("c1(U*⊗Q) coefficient of σ1", 7, t.c(1).coefficient(s1), "tangent bundle of Gr(3,7)");
  table.add("c2(U*⊗Q) coefficient of σ11", 24, t.c(2).coefficient(s11), "tangent bundle of Gr(3,7)");
  table.add("c2(U*⊗Q) coefficient of σ2", 23, t.c(2).coefficient(s2), "tangent bundle of Gr(3,7)");

  // Top Chern class of Sym3 U* in the elementary symmetric basis.
  const ElementarySymmetricExpansion top = chern_class_symmetric(sym3, gr, 10);
  struct Coefficient {
    const char* label;
    std::vector<int> exponent;
    int expected;
  };
  const std::array<Coefficient, 5> top_terms{{
      {"c10(Sym3 U*) coefficient of e1^3 e2^2 e3", {3, 2, 1, 0, 0, 0, 0}, 216},
      {"c10(Sym3 U*) coefficient of e1 e2^3 e3", {1, 3, 1, 0, 0, 0, 0}, 108},
      {"c10(Sym3 U*) coefficient of e1^4 e3^2", {4, 0, 2, 0, 0, 0, 0}, 108},
      {"c10(Sym3 U*) coefficient of e1^2 e2 e3^2", {2, 1, 2, 0, 0, 0, 0}, -486},
      {"c10(Sym3 U*) coefficient of e1 e3^3", {1, 0, 3, 0, 0, 0, 0}, 729},
  }};
  for (const auto& c : top_terms) {
    table.add(c.label, c.expected, top.coefficient(c.exponent), "symmetric reduction of the root product");
  }
  table.add("c10(Sym3 U*) term count", 5, static_cast<long>(top.terms().size()),
            "symmetric reduction of the root product");

  // Hand substitution of the intersection numbers into c1(Σ)^2 = 9 σ1^2 c10.
  const Integer hand = 9 * (216 * intersections[1] + 108 * intersections[2] + 108 * intersections[0] -
                            486 * intersections[3] + 729 * intersections[4]);
  table.add("9·(216·11 + 108·6 + 108·5 - 486·3 + 729·1)", 25515, hand, "hand substitution");

  const ZeroLocusProblem problem = ZeroLocusProblem::planes_in_cubic_fivefold();
  const SurfaceInvariants s = surface_invariants(problem);
  table.add("c1(Σ)^2", options.corrupt_golden ? 25516 : 25515, s.c1_sq, "normal sequence of Σ in Gr(3,7)");
  table.add("c2(Σ)", 13041, s.c2, "normal sequence of Σ in Gr(3,7)");
  table.add("e(Σ)", 13041, s.euler, "Hopf-Poincaré");
  table.add("χ(O_Σ)", 3213, s.chi_o, "Noether's formula");
  table.add("b0(Σ)", 1, s.betti[0], "connectedness");
  table.add("b1(Σ)", 42, s.betti[1], "Abel-Jacobi isomorphism (input)");
  table.add("b2(Σ)", 13123, s.betti[2], "alternating Betti sum");
  table.add("b3(Σ)", 42, s.betti[3], "Poincaré duality");
  table.add("b4(Σ)", 1, s.betti[4], "Poincaré duality");
  table.add("h10(Σ)", 21, s.hodge.h10, "Hodge symmetry");
  table.add("h20(Σ)", 3233, s.hodge.h20, "Noether's formula");
  table.add("h11(Σ)", 6657, s.hodge.h11, "Hodge decomposition of b2");

  const BaiCheck bai = bai_criterion(23, s.hodge.h10);
  table.add("b2(X)_tr", 22, bai.b2_tr, "b4 of a cubic fourfold minus one");
  table.add("2^floor((b2_tr - 3)/2)", 512, bai.threshold, "maximal variation criterion");
  table.add("h10 < threshold and b2_tr >= 5", 1, bai.satisfied ? 1 : 0, "maximal variation criterion");

  for (int d = 1; d <= 10; ++d) {
    const ProjectiveSurface p = p3_surface_oracle(d);
    table.add("12·χ(O_S) for a degree-" + std::to_string(d) + " surface in P3", p.c1_sq + p.c2, 12 * p.chi_o,
              "Noether's formula in P3");
  }
  return table.take();
}

}  // namespace schubert
