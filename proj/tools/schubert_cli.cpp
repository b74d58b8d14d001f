// Command-line front end: Schubert products, intersection numbers, Chern
// classes of bundle expressions, symmetric reduction, surface invariants
// and the golden reproduction report.
//
// Exit codes: 0 success, 1 golden mismatch, 2 usage or parse error,
// 3 semantic error (context, degree, rank, integrality).

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schubert/bundle.hpp"
#include "schubert/chern_roots.hpp"
#include "schubert/errors.hpp"
#include "schubert/report.hpp"
#include "schubert/schubert_ring.hpp"
#include "schubert/surface.hpp"

namespace {

using nlohmann::json;
using namespace schubert;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSemantic = 3;

struct GlobalOptions {
  bool json = false;
  std::string gr = "3,7";
  bool gr_given = false;
};

GrassmannianContext parse_gr(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--gr expects K,N", 0);
  auto number = [&](std::size_t from, std::size_t to) {
    const std::string part = text.substr(from, to - from);
    if (part.empty() || part.size() > 6 || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("--gr expects two positive integers K,N", from);
    }
    return std::stoi(part);
  };
  return GrassmannianContext(number(0, comma), number(comma + 1, text.size()));
}

json element_terms(const CohomologyElement& x) {
  json terms = json::array();
  for (const auto& [lambda, c] : x.ordered_terms()) {
    terms.push_back({{"partition", lambda.parts()}, {"coeff", c.str()}});
  }
  return terms;
}

// partition[^exponent]
Factor parse_factor(const std::string& token) {
  const auto caret = token.find('^');
  Factor f{Partition::parse(token.substr(0, caret)), 1};
  if (caret != std::string::npos) {
    const std::string exp = token.substr(caret + 1);
    if (exp.empty() || exp.size() > 6 || exp.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad exponent in factor '" + token + "'", caret + 1);
    }
    f.exponent = static_cast<unsigned>(std::stoul(exp));
  }
  return f;
}

int cmd_product(const GlobalOptions& g, const std::vector<std::string>& tokens) {
  const GrassmannianContext ctx = parse_gr(g.gr);
  std::vector<Partition> factors;
  for (const auto& t : tokens) factors.push_back(Partition::parse(t));
  CohomologyElement result = CohomologyElement::unit(ctx);
  for (const auto& lambda : factors) {
    result = multiply(result, CohomologyElement::schubert_class(ctx, lambda));
  }
  if (g.json) {
    std::cout << json{{"gr", {ctx.k(), ctx.n()}}, {"terms", element_terms(result)}}.dump() << "\n";
  } else {
    std::cout << result.to_string() << "\n";
  }
  return 0;
}

int cmd_intersect(const GlobalOptions& g, const std::vector<std::string>& tokens) {
  const GrassmannianContext ctx = parse_gr(g.gr);
  std::vector<Factor> factors;
  for (const auto& t : tokens) factors.push_back(parse_factor(t));
  const Integer value = intersection_number(factors, ctx);
  if (g.json) {
    std::cout << json{{"gr", {ctx.k(), ctx.n()}}, {"value", value.str()}}.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_chern(const GlobalOptions& g, const std::string& bundle_text, std::optional<int> degree) {
  const GrassmannianContext ctx = parse_gr(g.gr);
  const BundleExpr bundle = BundleExpr::parse(bundle_text);
  if (degree && (*degree < 0 || *degree > ctx.dimension())) {
    throw DomainError("--degree must lie in 0.." + std::to_string(ctx.dimension()));
  }
  const std::uint64_t r = rank(bundle, ctx);
  const int top = static_cast<int>(std::min<std::uint64_t>(r, static_cast<std::uint64_t>(ctx.dimension())));
  const ChernData data = total_chern(bundle, ctx, degree ? *degree : top);

  json classes = json::array();
  for (int i = degree ? *degree : 0; i <= (degree ? *degree : top); ++i) {
    classes.push_back({{"degree", i}, {"terms", element_terms(data.c(i))}});
  }
  std::cout << json{{"rank", r}, {"classes", classes}}.dump() << "\n";
  return 0;
}

int cmd_reduce(const GlobalOptions& g, const std::string& text) {
  std::optional<std::pair<int, int>> sizes;
  if (g.gr_given) {
    const GrassmannianContext ctx = parse_gr(g.gr);
    sizes = std::make_pair(ctx.k(), ctx.codim_rank());
  }
  const RootPolynomial p = parse_root_polynomial(text, sizes);
  const ElementarySymmetricExpansion r = symmetric_reduce(p);
  if (g.json) {
    json terms = json::array();
    for (const auto& [exponent, c] : r.terms()) {
      const auto split = exponent.begin() + r.first_size();
      terms.push_back({{"e", std::vector<int>(exponent.begin(), split)},
                       {"f", std::vector<int>(split, exponent.end())},
                       {"coeff", c.str()}});
    }
    std::cout << json{{"terms", terms}}.dump() << "\n";
  } else {
    std::cout << r.to_string() << "\n";
  }
  return 0;
}

int cmd_surface(const GlobalOptions& g, const std::string& bundle_text, long long b1) {
  const ZeroLocusProblem problem{parse_gr(g.gr), BundleExpr::parse(bundle_text), b1};
  const SurfaceInvariants s = surface_invariants(problem);
  if (g.json) {
    json betti = json::array();
    for (const auto& b : s.betti) betti.push_back(b.str());
    const json out{{"c1_sq", s.c1_sq.str()},
                   {"c2", s.c2.str()},
                   {"euler", s.euler.str()},
                   {"chi_O", s.chi_o.str()},
                   {"betti", betti},
                   {"hodge",
                    {{"h00", s.hodge.h00.str()},
                     {"h10", s.hodge.h10.str()},
                     {"h20", s.hodge.h20.str()},
                     {"h11", s.hodge.h11.str()}}},
                   {"q", s.q.str()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "c1^2   " << s.c1_sq << "\n"
              << "c2     " << s.c2 << "\n"
              << "euler  " << s.euler << "\n"
              << "chi(O) " << s.chi_o << "\n"
              << "betti  " << s.betti[0] << " " << s.betti[1] << " " << s.betti[2] << " " << s.betti[3]
              << " " << s.betti[4] << "\n"
              << "hodge  h00=" << s.hodge.h00 << " h10=" << s.hodge.h10 << " h20=" << s.hodge.h20
              << " h11=" << s.hodge.h11 << "\n"
              << "q      " << s.q << "\n";
  }
  return 0;
}

int cmd_paper_report(const GlobalOptions& g, bool corrupt) {
  const auto entries = paper_report({corrupt});
  const bool ok = all_pass(entries);
  if (g.json) {
    json out = json::array();
    for (const auto& e : entries) {
      out.push_back({{"label", e.label},
                     {"expected", e.expected.str()},
                     {"computed", e.computed.str()},
                     {"source", e.source},
                     {"pass", e.pass}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& e : entries) {
      passed += e.pass;
      std::cout << (e.pass ? "PASS  " : "FAIL  ") << e.label << " = " << e.computed << "  (expected "
                << e.expected << "; " << e.source << ")\n";
    }
    std::cout << passed << "/" << entries.size() << " entries pass\n";
    if (!ok) {
      std::cout << "\nmismatches:\n";
      for (const auto& e : entries) {
        if (!e.pass) {
          std::cout << "  " << e.label << ": expected " << e.expected << ", computed " << e.computed << "\n";
        }
      }
    }
  }
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus and Chern class calculator for Grassmannians"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  auto* gr_opt = app.add_option("--gr", g.gr, "Grassmannian Gr(K,N) as K,N (default 3,7)");

  std::vector<std::string> partitions;
  auto* product = app.add_subcommand("product", "Expand a product of Schubert classes");
  product->add_option("partitions", partitions, "Partitions, e.g. 2,1,1 or 211")->required();

  std::vector<std::string> factors;
  auto* intersect = app.add_subcommand("intersect", "Intersection number of Schubert classes");
  intersect->add_option("factors", factors, "Factors partition[^exponent], e.g. 1^6 111^2")->required();

  std::string bundle_text;
  std::optional<int> degree;
  auto* chern = app.add_subcommand("chern", "Chern classes of a bundle expression (JSON)");
  chern->add_option("--bundle", bundle_text, "Bundle, e.g. sym(3,dual(U))")->required();
  chern->add_option("--degree", degree, "Only the class of this degree");

  std::string polynomial;
  auto* reduce = app.add_subcommand("reduce", "Rewrite a symmetric polynomial in elementary symmetric functions");
  reduce->add_option("polynomial", polynomial, "Polynomial, e.g. \"x1^2 + x2^2 + x3^2\"")->required();

  std::string surface_bundle = "sym(3,dual(U))";
  long long b1 = 42;
  auto* surface = app.add_subcommand("surface", "Invariants of the zero-locus surface of a bundle");
  surface->add_option("--bundle", surface_bundle, "Bundle of rank dim - 2 (default sym(3,dual(U)))");
  surface->add_option("--b1", b1, "First Betti number of the surface (default 42)");

  bool corrupt = false;
  auto* report = app.add_subcommand("paper-report", "Recompute and check every golden value");
  report->add_flag("--corrupt-golden", corrupt, "Perturb one golden constant (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  g.gr_given = gr_opt->count() > 0;

  try {
    if (*product) return cmd_product(g, partitions);
    if (*intersect) return cmd_intersect(g, factors);
    if (*chern) return cmd_chern(g, bundle_text, degree);
    if (*reduce) return cmd_reduce(g, polynomial);
    if (*surface) return cmd_surface(g, surface_bundle, b1);
    if (*report) return cmd_paper_report(g, corrupt);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitUsage;
}
