#include <functional>
#include <random>

#include "doctest.h"
#include "schubert/bundle.hpp"
#include "schubert/errors.hpp"
#include "random_bundle.hpp"

using namespace schubert;

namespace {

const BundleExpr kUdual = BundleExpr::dual(BundleExpr::U());

}  // namespace

TEST_CASE("parse and print") {
  const BundleExpr e = BundleExpr::parse(" sym( 3 , dual(U) ) ");
  CHECK(e == BundleExpr::sym(3, kUdual));
  CHECK(e.to_string() == "sym(3,dual(U))");
  CHECK(e.kind() == BundleExpr::Kind::sym);
  CHECK(e.parameter() == 3);

  const char* samples[] = {"U", "Q", "o(-2)", "tensor(dual(U),Q)", "sum(wedge(2,Q),o(1))", "det(sym(2,U))"};
  for (const char* s : samples) CHECK(BundleExpr::parse(s).to_string() == s);

  CHECK_THROWS_AS(BundleExpr::parse("tensor(U)"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse("sym(U)"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse("foo(U)"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse("dual(U"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse("U Q"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse(""), ParseError);
}

TEST_CASE("ranks") {
  const GrassmannianContext g(3, 7);
  CHECK(rank(BundleExpr::U(), g) == 3);
  CHECK(rank(BundleExpr::Q(), g) == 4);
  CHECK(rank(BundleExpr::sym(3, kUdual), g) == 10);
  CHECK(rank(BundleExpr::wedge(2, BundleExpr::Q()), g) == 6);
  CHECK(rank(BundleExpr::wedge(5, BundleExpr::Q()), g) == 0);
  CHECK(rank(BundleExpr::tensor(kUdual, BundleExpr::Q()), g) == 12);
  CHECK(rank(BundleExpr::det(BundleExpr::Q()), g) == 1);
  CHECK(chern_roots(BundleExpr::sym(2, BundleExpr::U()), g).size() == 6);
}

TEST_CASE("Chern classes on Gr(3,7)") {
  const GrassmannianContext g(3, 7);
  const Partition s1{1}, s2{2}, s11{1, 1};

  const ChernData sym3 = total_chern(BundleExpr::sym(3, kUdual), g);
  CHECK(sym3.c(1) == CohomologyElement::schubert_class(g, s1, 10));
  CHECK(sym3.c(2) == CohomologyElement::schubert_class(g, s2, 40) + CohomologyElement::schubert_class(g, s11, 55));
  const auto s1sq = multiply(CohomologyElement::schubert_class(g, s1), CohomologyElement::schubert_class(g, s1));
  CHECK(sym3.c(2) == Integer(40) * s1sq + CohomologyElement::schubert_class(g, s11, 15));
  CHECK(sym3.c(11).is_zero());
  CHECK(top_chern(BundleExpr::sym(3, kUdual), g) ==
        CohomologyElement::schubert_class(g, {4, 4, 2}, 1134) + CohomologyElement::schubert_class(g, {4, 3, 3}, 1701));

  const ChernData tangent = total_chern(BundleExpr::tensor(kUdual, BundleExpr::Q()), g, 2);
  CHECK(tangent.classes.size() == 3);
  CHECK(tangent.c(1) == CohomologyElement::schubert_class(g, s1, 7));
  CHECK(tangent.c(2) == CohomologyElement::schubert_class(g, s2, 23) + CohomologyElement::schubert_class(g, s11, 24));

  // Euler characteristic of Gr(3,7) is binom(7,3).
  CHECK(integrate(top_chern(BundleExpr::tensor(kUdual, BundleExpr::Q()), g)) == 35);

  const ElementarySymmetricExpansion c10 = chern_class_symmetric(BundleExpr::sym(3, kUdual), g, 10);
  CHECK(c10.terms().size() == 5);
  CHECK(c10.coefficient({3, 2, 1, 0, 0, 0, 0}) == 216);
  CHECK(c10.coefficient({1, 3, 1, 0, 0, 0, 0}) == 108);
  CHECK(c10.coefficient({4, 0, 2, 0, 0, 0, 0}) == 108);
  CHECK(c10.coefficient({2, 1, 2, 0, 0, 0, 0}) == -486);
  CHECK(c10.coefficient({1, 0, 3, 0, 0, 0, 0}) == 729);
  CHECK(to_schubert(c10, g) == top_chern(BundleExpr::sym(3, kUdual), g));

  const ElementarySymmetricExpansion t2 = chern_class_symmetric(BundleExpr::tensor(kUdual, BundleExpr::Q()), g, 2);
  CHECK(t2.coefficient({2, 0, 0, 0, 0, 0, 0}) == 6);
  CHECK(t2.coefficient({0, 1, 0, 0, 0, 0, 0}) == 4);
  CHECK(t2.coefficient({1, 0, 0, 1, 0, 0, 0}) == 11);
  CHECK(t2.coefficient({0, 0, 0, 2, 0, 0, 0}) == 3);
  CHECK(t2.coefficient({0, 0, 0, 0, 1, 0, 0}) == 3);

  CHECK_THROWS_AS(top_chern(BundleExpr::sym(4, kUdual), g), DomainError);
}

TEST_CASE("tautological sequence and line bundles") {
  const GrassmannianContext g(2, 5);
  // c(U) c(Q) = 1
  const ChernData whole = total_chern(BundleExpr::sum(BundleExpr::U(), BundleExpr::Q()), g);
  for (int i = 1; i <= g.dimension(); ++i) CHECK(whole.c(i).is_zero());
  CHECK(total_chern(BundleExpr::o(3), g).c(1) == CohomologyElement::schubert_class(g, {1}, 3));
  CHECK(total_chern(BundleExpr::det(BundleExpr::Q()), g).c(1) == CohomologyElement::schubert_class(g, {1}));
}

TEST_CASE("Whitney, duality and line-twist identities on random bundles") {
  std::mt19937 rng(424242);
  int checked = 0;
  for (const auto [k, n] : std::array<std::pair<int, int>, 2>{{{2, 4}, {2, 5}}}) {
    const GrassmannianContext g(k, n);
    const int dim = g.dimension();
    for (int trial = 0; trial < 50; ++trial, ++checked) {
      const BundleExpr a = support::random_bundle(rng, g, 2, 10);
      const BundleExpr b = support::random_bundle(rng, g, 2, 10);
      const ChernData ca = total_chern(a, g), cb = total_chern(b, g);
      INFO(a.to_string(), " ", b.to_string());

      const ChernData whitney = total_chern(BundleExpr::sum(a, b), g);
      for (int i = 0; i <= dim; ++i) {
        CohomologyElement expected(g);
        for (int j = 0; j <= i; ++j) expected += multiply(ca.c(j), cb.c(i - j));
        CHECK(whitney.c(i) == expected);
      }

      const ChernData dual = total_chern(BundleExpr::dual(a), g);
      for (int i = 0; i <= dim; ++i) CHECK(dual.c(i) == (i % 2 ? -ca.c(i) : ca.c(i)));

      std::uniform_int_distribution<int> twist(-3, 3);
      const int m = twist(rng);
      const ChernData twisted = total_chern(BundleExpr::tensor(a, BundleExpr::o(m)), g);
      const CohomologyElement l = CohomologyElement::schubert_class(g, {1}, m);
      for (int i = 0; i <= dim; ++i) {
        CohomologyElement expected(g);
        // c_i(A (x) L) = sum_j binom(r - j, i - j) c_j(A) c_1(L)^(i-j)
        for (int j = 0; j <= i && static_cast<std::uint64_t>(j) <= ca.rank; ++j) {
          expected += support::binomial(ca.rank - static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(i - j)) *
                      multiply(ca.c(j), power(l, static_cast<unsigned>(i - j)));
        }
        CHECK(twisted.c(i) == expected);
      }
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("Chern character routes agree") {
  std::mt19937 rng(99);
  const GrassmannianContext g(2, 5);
  const int dim = g.dimension();
  for (int trial = 0; trial < 20; ++trial) {
    const BundleExpr a = support::random_bundle(rng, g, 1, 6);
    const BundleExpr b = support::random_bundle(rng, g, 1, 6);
    INFO(a.to_string(), " ", b.to_string());
    const auto ch_a = chern_character(a, g, dim);
    const auto ch_b = chern_character(b, g, dim);
    const ChernData ca = total_chern(a, g);

    CHECK(ch_a == chern_character_from_classes(ca, dim));
    CHECK(chern_classes_from_character(ch_a) == ca.classes);

    // ch is multiplicative, and inverting it recovers c of the tensor product.
    const auto product = multiply_characters(ch_a, ch_b);
    CHECK(product == chern_character(BundleExpr::tensor(a, b), g, dim));
    CHECK(chern_classes_from_character(product) == total_chern(BundleExpr::tensor(a, b), g).classes);
  }
}

TEST_CASE("rational classes") {
  const GrassmannianContext g(2, 4);
  const RationalClass half(CohomologyElement::schubert_class(g, {1}, 2), 4);
  CHECK(half.denominator() == 2);
  CHECK(half.coefficient(Partition{1}) == Rational(1, 2));
  CHECK_FALSE(half.is_integral());
  CHECK_THROWS_AS(half.integral(), DomainError);
  CHECK((half + half).is_integral());
  CHECK((Rational(2) * half).integral() == CohomologyElement::schubert_class(g, {1}));

  // ch_1 = 1/2 sigma_1 has no integral Chern class preimage.
  std::vector<RationalClass> bad{RationalClass(CohomologyElement::unit(g)), half};
  CHECK_THROWS_AS(chern_classes_from_character(bad), DomainError);
}
