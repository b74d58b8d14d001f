#include "schubert/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>

#include "schubert/errors.hpp"

namespace schubert {

struct BundleExpr::Node {
  Kind kind;
  std::int64_t parameter = 0;
  std::vector<BundleExpr> children;
};

namespace {

// Root multisets are expanded explicitly; this bounds memory and time.
constexpr std::uint64_t kMaxRoots = 200000;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("bundle rank overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("bundle rank overflows 64 bits");
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  if (result > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError("bundle rank overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

const char* kind_name(BundleExpr::Kind kind) {
  switch (kind) {
    case BundleExpr::Kind::sub: return "U";
    case BundleExpr::Kind::quotient: return "Q";
    case BundleExpr::Kind::line: return "o";
    case BundleExpr::Kind::dual: return "dual";
    case BundleExpr::Kind::sym: return "sym";
    case BundleExpr::Kind::wedge: return "wedge";
    case BundleExpr::Kind::tensor: return "tensor";
    case BundleExpr::Kind::sum: return "sum";
    case BundleExpr::Kind::det: return "det";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction and printing

BundleExpr BundleExpr::U() { return BundleExpr(std::make_shared<Node>(Node{Kind::sub, 0, {}})); }
BundleExpr BundleExpr::Q() { return BundleExpr(std::make_shared<Node>(Node{Kind::quotient, 0, {}})); }
BundleExpr BundleExpr::o(std::int64_t m) {
  return BundleExpr(std::make_shared<Node>(Node{Kind::line, m, {}}));
}
BundleExpr BundleExpr::dual(BundleExpr e) {
  return BundleExpr(std::make_shared<Node>(Node{Kind::dual, 0, {std::move(e)}}));
}
BundleExpr BundleExpr::sym(int d, BundleExpr e) {
  if (d < 0) throw std::invalid_argument("sym degree must be nonnegative");
  return BundleExpr(std::make_shared<Node>(Node{Kind::sym, d, {std::move(e)}}));
}
BundleExpr BundleExpr::wedge(int d, BundleExpr e) {
  if (d < 0) throw std::invalid_argument("wedge degree must be nonnegative");
  return BundleExpr(std::make_shared<Node>(Node{Kind::wedge, d, {std::move(e)}}));
}
BundleExpr BundleExpr::tensor(BundleExpr a, BundleExpr b) {
  return BundleExpr(std::make_shared<Node>(Node{Kind::tensor, 0, {std::move(a), std::move(b)}}));
}
BundleExpr BundleExpr::sum(BundleExpr a, BundleExpr b) {
  return BundleExpr(std::make_shared<Node>(Node{Kind::sum, 0, {std::move(a), std::move(b)}}));
}
BundleExpr BundleExpr::det(BundleExpr e) {
  return BundleExpr(std::make_shared<Node>(Node{Kind::det, 0, {std::move(e)}}));
}

BundleExpr::Kind BundleExpr::kind() const noexcept { return node_->kind; }
std::int64_t BundleExpr::parameter() const noexcept { return node_->parameter; }
const std::vector<BundleExpr>& BundleExpr::children() const noexcept { return node_->children; }

std::string BundleExpr::to_string() const {
  switch (kind()) {
    case Kind::sub: return "U";
    case Kind::quotient: return "Q";
    case Kind::line: return "o(" + std::to_string(parameter()) + ")";
    case Kind::sym:
    case Kind::wedge:
      return std::string(kind_name(kind())) + "(" + std::to_string(parameter()) + "," +
             children()[0].to_string() + ")";
    default: break;
  }
  std::string out = std::string(kind_name(kind())) + "(";
  for (std::size_t i = 0; i < children().size(); ++i) {
    if (i) out += ",";
    out += children()[i].to_string();
  }
  return out + ")";
}

bool operator==(const BundleExpr& a, const BundleExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.parameter() == b.parameter() && a.children() == b.children();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class BundleParser {
 public:
  explicit BundleParser(std::string_view text) : text_(text) {}

  BundleExpr parse_all() {
    BundleExpr e = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected trailing '") + peek() + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c, const std::string& context) {
    skip_space();
    if (at_end()) throw ParseError("expected '" + std::string(1, c) + "' in " + context + " but input ended", pos_);
    if (peek() != c) {
      throw ParseError("expected '" + std::string(1, c) + "' in " + context + " but found '" +
                           std::string(1, peek()) + "'",
                       pos_);
    }
    ++pos_;
  }

  // Between arguments: a ')' where a ',' belongs means too few arguments.
  void expect_separator(const std::string& name, int arity) {
    skip_space();
    if (!at_end() && peek() == ')') {
      throw ParseError(name + " takes " + std::to_string(arity) + " arguments", pos_);
    }
    expect(',', name);
  }

  void expect_close(const std::string& name, int arity) {
    skip_space();
    if (!at_end() && peek() == ',') {
      throw ParseError(name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"),
                       pos_);
    }
    expect(')', name);
  }

  std::int64_t integer(bool allow_negative) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      if (!allow_negative && peek() == '-') throw ParseError("expected a nonnegative integer", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected an integer", pos_);
    return negative ? -value : value;
  }

  BundleExpr expr() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) {
      if (at_end()) throw ParseError("expected a bundle expression but input ended", pos_);
      throw ParseError(std::string("expected a bundle expression but found '") + peek() + "'", pos_);
    }
    if (name == "U") return BundleExpr::U();
    if (name == "Q") return BundleExpr::Q();

    if (name == "o") {
      expect('(', name);
      const std::int64_t m = integer(true);
      expect_close(name, 1);
      return BundleExpr::o(m);
    }
    if (name == "dual" || name == "det") {
      expect('(', name);
      BundleExpr inner = expr();
      expect_close(name, 1);
      return name == "dual" ? BundleExpr::dual(std::move(inner)) : BundleExpr::det(std::move(inner));
    }
    if (name == "sym" || name == "wedge") {
      expect('(', name);
      const std::int64_t d = integer(false);
      expect_separator(name, 2);
      BundleExpr inner = expr();
      expect_close(name, 2);
      return name == "sym" ? BundleExpr::sym(static_cast<int>(d), std::move(inner))
                           : BundleExpr::wedge(static_cast<int>(d), std::move(inner));
    }
    if (name == "tensor" || name == "sum") {
      expect('(', name);
      BundleExpr a = expr();
      expect_separator(name, 2);
      BundleExpr b = expr();
      expect_close(name, 2);
      return name == "tensor" ? BundleExpr::tensor(std::move(a), std::move(b))
                              : BundleExpr::sum(std::move(a), std::move(b));
    }
    throw ParseError("unknown bundle constructor '" + name + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BundleExpr BundleExpr::parse(std::string_view text) { return BundleParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rank and roots

std::uint64_t rank(const BundleExpr& e, const GrassmannianContext& ctx) {
  using Kind = BundleExpr::Kind;
  switch (e.kind()) {
    case Kind::sub: return static_cast<std::uint64_t>(ctx.k());
    case Kind::quotient: return static_cast<std::uint64_t>(ctx.codim_rank());
    case Kind::line:
    case Kind::det: return 1;
    case Kind::dual: return rank(e.children()[0], ctx);
    case Kind::sym: {
      const std::uint64_t r = rank(e.children()[0], ctx);
      const auto d = static_cast<std::uint64_t>(e.parameter());
      if (r == 0) return d == 0 ? 1 : 0;
      return binomial(checked_add(r, d) - 1, d);
    }
    case Kind::wedge:
      return binomial(rank(e.children()[0], ctx), static_cast<std::uint64_t>(e.parameter()));
    case Kind::tensor:
      return checked_mul(rank(e.children()[0], ctx), rank(e.children()[1], ctx));
    case Kind::sum:
      return checked_add(rank(e.children()[0], ctx), rank(e.children()[1], ctx));
  }
  return 0;
}

namespace {

void for_each_multiset(std::size_t n, std::size_t d, std::size_t start, std::vector<std::size_t>& chosen,
                       bool distinct, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (chosen.size() == d) {
    f(chosen);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    chosen.push_back(i);
    for_each_multiset(n, d, distinct ? i + 1 : i, chosen, distinct, f);
    chosen.pop_back();
  }
}

LinearForm add_forms(const LinearForm& a, const LinearForm& b) {
  LinearForm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

std::vector<LinearForm> chern_roots(const BundleExpr& e, const GrassmannianContext& ctx) {
  using Kind = BundleExpr::Kind;
  if (rank(e, ctx) > kMaxRoots) {
    throw DomainError("bundle " + e.to_string() + " has too many Chern roots to expand");
  }
  const int k = ctx.k();
  const auto width = static_cast<std::size_t>(ctx.n());
  std::vector<LinearForm> out;

  switch (e.kind()) {
    case Kind::sub:
      for (int i = 0; i < k; ++i) {
        LinearForm f(width, 0);
        f[static_cast<std::size_t>(i)] = -1;
        out.push_back(std::move(f));
      }
      break;
    case Kind::quotient:
      for (int j = 0; j < ctx.codim_rank(); ++j) {
        LinearForm f(width, 0);
        f[static_cast<std::size_t>(k + j)] = 1;
        out.push_back(std::move(f));
      }
      break;
    case Kind::line: {
      LinearForm f(width, 0);
      for (int i = 0; i < k; ++i) f[static_cast<std::size_t>(i)] = e.parameter();
      out.push_back(std::move(f));
      break;
    }
    case Kind::dual:
      out = chern_roots(e.children()[0], ctx);
      for (auto& f : out) {
        for (auto& v : f) v = -v;
      }
      break;
    case Kind::sym:
    case Kind::wedge: {
      const auto inner = chern_roots(e.children()[0], ctx);
      std::vector<std::size_t> chosen;
      for_each_multiset(inner.size(), static_cast<std::size_t>(e.parameter()), 0, chosen,
                        e.kind() == Kind::wedge, [&](const std::vector<std::size_t>& idx) {
                          LinearForm f(width, 0);
                          for (std::size_t i : idx) f = add_forms(f, inner[i]);
                          out.push_back(std::move(f));
                        });
      break;
    }
    case Kind::tensor: {
      const auto a = chern_roots(e.children()[0], ctx);
      const auto b = chern_roots(e.children()[1], ctx);
      for (const auto& fa : a) {
        for (const auto& fb : b) out.push_back(add_forms(fa, fb));
      }
      break;
    }
    case Kind::sum:
      out = chern_roots(e.children()[0], ctx);
      for (auto& f : chern_roots(e.children()[1], ctx)) out.push_back(std::move(f));
      break;
    case Kind::det: {
      LinearForm f(width, 0);
      for (const auto& r : chern_roots(e.children()[0], ctx)) f = add_forms(f, r);
      out.push_back(std::move(f));
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chern classes

CohomologyElement ChernData::total() const {
  CohomologyElement out = CohomologyElement::zero(classes.front().context());
  for (const auto& c : classes) out += c;
  return out;
}

CohomologyElement to_schubert(const ElementarySymmetricExpansion& p, const GrassmannianContext& ctx) {
  if (p.first_size() != ctx.k() || p.second_size() != ctx.codim_rank()) {
    throw DomainError("expansion alphabets do not match " + ctx.to_string());
  }
  std::vector<CohomologyElement> columns;
  for (int i = 1; i <= ctx.k(); ++i) {
    columns.push_back(CohomologyElement::schubert_class(ctx, Partition(std::vector<int>(static_cast<std::size_t>(i), 1))));
  }
  CohomologyElement out(ctx);
  for (const auto& [exponent, c] : p.terms()) {
    CohomologyElement value = CohomologyElement::unit(ctx);
    for (int j = 1; j <= ctx.codim_rank() && !value.is_zero(); ++j) {
      for (int r = 0; r < exponent[static_cast<std::size_t>(ctx.k() + j - 1)]; ++r) {
        value = pieri_apply(j, value);
      }
    }
    for (int i = 1; i <= ctx.k() && !value.is_zero(); ++i) {
      for (int r = 0; r < exponent[static_cast<std::size_t>(i - 1)]; ++r) {
        value = multiply(value, columns[static_cast<std::size_t>(i - 1)]);
      }
    }
    value *= c;
    out += value;
  }
  return out;
}

ElementarySymmetricExpansion chern_class_symmetric(const BundleExpr& e,
                                                   const GrassmannianContext& ctx, int degree) {
  const auto roots = chern_roots(e, ctx);
  const RootPolynomial product = product_one_plus(roots, ctx.k(), ctx.codim_rank(), degree);
  return symmetric_reduce(product.homogeneous_part(degree));
}

ChernData total_chern(const BundleExpr& e, const GrassmannianContext& ctx, std::optional<int> max_degree) {
  ChernData data;
  data.rank = rank(e, ctx);
  int top = ctx.dimension();
  if (max_degree) top = std::clamp(*max_degree, 0, top);
  const int nonzero_top = static_cast<int>(std::min<std::uint64_t>(data.rank, static_cast<std::uint64_t>(top)));

  const auto roots = chern_roots(e, ctx);
  const RootPolynomial product = product_one_plus(roots, ctx.k(), ctx.codim_rank(), nonzero_top);

  data.classes.push_back(CohomologyElement::unit(ctx));
  for (int i = 1; i <= top; ++i) {
    if (i > nonzero_top) {
      data.classes.push_back(CohomologyElement::zero(ctx));
      continue;
    }
    data.classes.push_back(to_schubert(symmetric_reduce(product.homogeneous_part(i)), ctx));
  }
  return data;
}

CohomologyElement top_chern(const BundleExpr& e, const GrassmannianContext& ctx) {
  const std::uint64_t r = rank(e, ctx);
  if (r > static_cast<std::uint64_t>(ctx.dimension())) {
    throw DomainError("rank " + std::to_string(r) + " of " + e.to_string() + " exceeds dim " +
                      ctx.to_string() + " = " + std::to_string(ctx.dimension()));
  }
  return to_schubert(chern_class_symmetric(e, ctx, static_cast<int>(r)), ctx);
}

// ---------------------------------------------------------------------------
// Rational classes and the Chern character

RationalClass::RationalClass(CohomologyElement numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_ == 0) throw std::invalid_argument("zero denominator");
  normalize();
}

void RationalClass::normalize() {
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    numerator_ = -numerator_;
  }
  if (numerator_.is_zero()) {
    denominator_ = 1;
    return;
  }
  Integer g = denominator_;
  for (const auto& [lambda, c] : numerator_.terms()) g = boost::multiprecision::gcd(g, c);
  if (g < 0) g = -g;
  if (g == 1) return;
  CohomologyElement reduced(numerator_.context());
  for (const auto& [lambda, c] : numerator_.terms()) reduced.add_term(lambda, c / g);
  numerator_ = std::move(reduced);
  denominator_ /= g;
}

Rational RationalClass::coefficient(const Partition& lambda) const {
  return Rational(numerator_.coefficient(lambda), denominator_);
}

const CohomologyElement& RationalClass::integral() const {
  if (!is_integral()) throw DomainError("class " + to_string() + " is not integral");
  return numerator_;
}

RationalClass& RationalClass::operator+=(const RationalClass& o) {
  numerator_ = numerator_ * o.denominator_ + o.numerator_ * denominator_;
  denominator_ *= o.denominator_;
  normalize();
  return *this;
}

RationalClass& RationalClass::operator-=(const RationalClass& o) {
  numerator_ = numerator_ * o.denominator_ - o.numerator_ * denominator_;
  denominator_ *= o.denominator_;
  normalize();
  return *this;
}

RationalClass operator*(const RationalClass& a, const RationalClass& b) {
  return RationalClass(multiply(a.numerator_, b.numerator_), a.denominator_ * b.denominator_);
}

RationalClass operator*(const Rational& s, const RationalClass& a) {
  return RationalClass(a.numerator_ * boost::multiprecision::numerator(s),
                       a.denominator_ * boost::multiprecision::denominator(s));
}

std::string RationalClass::to_string() const {
  if (is_integral()) return numerator_.to_string();
  return "(" + numerator_.to_string() + ")/" + denominator_.str();
}

std::vector<RationalClass> chern_character(const BundleExpr& e, const GrassmannianContext& ctx,
                                           int max_degree) {
  if (max_degree < 0 || max_degree > ctx.dimension()) {
    throw DomainError("Chern character degree must lie in 0.." + std::to_string(ctx.dimension()));
  }
  const auto roots = chern_roots(e, ctx);
  std::vector<RationalClass> ch;
  ch.emplace_back(CohomologyElement::unit(ctx) * Integer(rank(e, ctx)));
  for (int m = 1; m <= max_degree; ++m) {
    const RootPolynomial pm = root_power_sum(roots, m, ctx.k(), ctx.codim_rank());
    ch.emplace_back(to_schubert(symmetric_reduce(pm), ctx), factorial(static_cast<unsigned>(m)));
  }
  return ch;
}

namespace {

// Evaluates a polynomial in e_1..e_s (x-alphabet slots) at given classes.
CohomologyElement substitute(const ElementarySymmetricExpansion& p,
                             const std::vector<CohomologyElement>& values,
                             const GrassmannianContext& ctx) {
  CohomologyElement out(ctx);
  for (const auto& [exponent, c] : p.terms()) {
    CohomologyElement term = CohomologyElement::unit(ctx);
    for (std::size_t i = 0; i < exponent.size() && !term.is_zero(); ++i) {
      for (int r = 0; r < exponent[i]; ++r) term = multiply(term, values.at(i + 1));
    }
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace

std::vector<RationalClass> chern_character_from_classes(const ChernData& chern, int max_degree) {
  const GrassmannianContext& ctx = chern.classes.front().context();
  if (max_degree < 0 || static_cast<std::size_t>(max_degree) >= chern.classes.size()) {
    throw DomainError("Chern character degree exceeds the computed Chern classes");
  }
  std::vector<RationalClass> ch;
  ch.emplace_back(CohomologyElement::unit(ctx) * Integer(chern.rank));
  for (int m = 1; m <= max_degree; ++m) {
    // Only e_1..e_m enter p_m, and c_i vanishes past the rank anyway.
    const ElementarySymmetricExpansion pm = power_sum(Alphabet::x, m, m, 0);
    ch.emplace_back(substitute(pm, chern.classes, ctx), factorial(static_cast<unsigned>(m)));
  }
  return ch;
}

std::vector<CohomologyElement> chern_classes_from_character(const std::vector<RationalClass>& ch) {
  if (ch.empty()) throw std::invalid_argument("empty Chern character");
  const GrassmannianContext& ctx = ch.front().numerator().context();
  std::vector<CohomologyElement> c{CohomologyElement::unit(ctx)};
  for (std::size_t m = 1; m < ch.size(); ++m) {
    RationalClass acc(CohomologyElement::zero(ctx));
    for (std::size_t i = 1; i <= m; ++i) {
      const Rational weight(factorial(static_cast<unsigned>(i)) * (i % 2 ? 1 : -1));
      acc += weight * (ch[i] * RationalClass(c[m - i]));
    }
    const RationalClass cm = Rational(1, static_cast<long long>(m)) * acc;
    if (!cm.is_integral()) {
      throw DomainError("Chern class c_" + std::to_string(m) + " = " + cm.to_string() +
                        " is not integral");
    }
    c.push_back(cm.numerator());
  }
  return c;
}

std::vector<RationalClass> multiply_characters(const std::vector<RationalClass>& a,
                                               const std::vector<RationalClass>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  if (n == 0) return {};
  const GrassmannianContext& ctx = a.front().numerator().context();
  std::vector<RationalClass> out;
  for (std::size_t m = 0; m < n; ++m) {
    RationalClass acc(CohomologyElement::zero(ctx));
    for (std::size_t i = 0; i <= m; ++i) acc += a[i] * b[m - i];
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace schubert
