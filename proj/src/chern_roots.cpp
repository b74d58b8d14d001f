#include "schubert/chern_roots.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace schubert {

namespace {

using Exponent = std::vector<int>;

std::string alphabet_name(Alphabet a) { return a == Alphabet::x ? "x" : "y"; }

// Polynomials in a single alphabet of the given size; the coefficient ring
// is either the integers or polynomials in the other alphabet.
template <class Coeff>
using LexMap = std::map<Exponent, Coeff, std::greater<>>;

bool is_zero(const Integer& c) { return c == 0; }
bool is_zero(const RootPolynomial& c) { return c.is_zero(); }

// prod e_i^{b_i} in `size` variables.
LexMap<Integer> elementary_monomial(const Exponent& e_exponent, int size) {
  LexMap<Integer> result;
  result.emplace(Exponent(static_cast<std::size_t>(size), 0), 1);
  for (int i = 1; i <= size; ++i) {
    // e_i as a sum over i-subsets.
    std::vector<Exponent> subsets;
    std::vector<int> mask(static_cast<std::size_t>(size), 0);
    std::fill(mask.begin(), mask.begin() + i, 1);
    do {
      subsets.emplace_back(mask.begin(), mask.end());
    } while (std::prev_permutation(mask.begin(), mask.end()));

    for (int power = 0; power < e_exponent[static_cast<std::size_t>(i - 1)]; ++power) {
      LexMap<Integer> next;
      for (const auto& [e, c] : result) {
        for (const Exponent& s : subsets) {
          Exponent sum = e;
          for (int v = 0; v < size; ++v) sum[static_cast<std::size_t>(v)] += s[static_cast<std::size_t>(v)];
          next[sum] += c;
        }
      }
      result = std::move(next);
    }
  }
  return result;
}

// Leading-term elimination in one alphabet. Returns the e-exponents with
// their coefficients; consumes `poly`.
template <class Coeff>
std::vector<std::pair<Exponent, Coeff>> reduce_lex(LexMap<Coeff> poly, int size) {
  std::vector<std::pair<Exponent, Coeff>> out;
  std::map<Exponent, LexMap<Integer>> expansions;
  while (!poly.empty()) {
    auto lead = poly.begin();
    const Exponent leading = lead->first;
    const Coeff c = lead->second;
    for (int i = 0; i + 1 < size; ++i) {
      if (leading[static_cast<std::size_t>(i)] < leading[static_cast<std::size_t>(i + 1)]) {
        throw std::logic_error("symmetric reduction reached a non-partition leading term");
      }
    }
    Exponent e_exp(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      const int next = i + 1 < size ? leading[static_cast<std::size_t>(i + 1)] : 0;
      e_exp[static_cast<std::size_t>(i)] = leading[static_cast<std::size_t>(i)] - next;
    }
    auto [it, inserted] = expansions.try_emplace(e_exp);
    if (inserted) it->second = elementary_monomial(e_exp, size);
    for (const auto& [m, k] : it->second) {
      auto [slot, fresh] = poly.try_emplace(m, c * Integer(-k));
      if (!fresh) {
        slot->second -= c * k;
        if (is_zero(slot->second)) poly.erase(slot);
      }
    }
    out.emplace_back(std::move(e_exp), c);
  }
  return out;
}

void check_symmetric(const RootPolynomial& p, Alphabet alphabet) {
  const int size = alphabet == Alphabet::x ? p.first_size() : p.second_size();
  const int offset = alphabet == Alphabet::x ? 0 : p.first_size();
  for (int i = 0; i + 1 < size; ++i) {
    for (const auto& [e, c] : p.terms()) {
      Exponent swapped = e;
      std::swap(swapped[static_cast<std::size_t>(offset + i)],
                swapped[static_cast<std::size_t>(offset + i + 1)]);
      if (p.coefficient(swapped) != c) throw NonSymmetricError(alphabet, i + 1, i + 2);
    }
  }
}

}  // namespace

NonSymmetricError::NonSymmetricError(Alphabet alphabet, int i, int j)
    : DomainError("polynomial is not symmetric under " + alphabet_name(alphabet) + std::to_string(i) +
                  " <-> " + alphabet_name(alphabet) + std::to_string(j)),
      alphabet_(alphabet),
      i_(i),
      j_(j) {}

ElementarySymmetricExpansion symmetric_reduce(const RootPolynomial& p) {
  check_symmetric(p, Alphabet::x);
  check_symmetric(p, Alphabet::y);

  const int nx = p.first_size();
  const int ny = p.second_size();

  LexMap<RootPolynomial> by_x;
  for (const auto& [e, c] : p.terms()) {
    Exponent xe(e.begin(), e.begin() + nx);
    Exponent ye(e.begin() + nx, e.end());
    auto [it, inserted] = by_x.try_emplace(std::move(xe), RootPolynomial(0, ny));
    it->second.add_term(std::move(ye), c);
  }

  ElementarySymmetricExpansion out(nx, ny);
  for (auto& [e_exp, y_poly] : reduce_lex(std::move(by_x), nx)) {
    LexMap<Integer> y_terms(y_poly.terms().begin(), y_poly.terms().end());
    for (auto& [f_exp, c] : reduce_lex(std::move(y_terms), ny)) {
      Exponent combined = e_exp;
      combined.insert(combined.end(), f_exp.begin(), f_exp.end());
      out.add_term(std::move(combined), c);
    }
  }
  return out;
}

RootPolynomial expand_elementary(const ElementarySymmetricExpansion& p) {
  const int nx = p.first_size();
  const int ny = p.second_size();
  RootPolynomial out(nx, ny);
  for (const auto& [e, c] : p.terms()) {
    const Exponent e_exp(e.begin(), e.begin() + nx);
    const Exponent f_exp(e.begin() + nx, e.end());
    const auto xs = elementary_monomial(e_exp, nx);
    const auto ys = elementary_monomial(f_exp, ny);
    for (const auto& [xm, xc] : xs) {
      for (const auto& [ym, yc] : ys) {
        Exponent combined = xm;
        combined.insert(combined.end(), ym.begin(), ym.end());
        out.add_term(std::move(combined), c * xc * yc);
      }
    }
  }
  return out;
}

ElementarySymmetricExpansion power_sum(Alphabet alphabet, int m, int first_size, int second_size) {
  if (m < 1) throw std::invalid_argument("power sum index must be positive");
  const int size = alphabet == Alphabet::x ? first_size : second_size;
  const int offset = alphabet == Alphabet::x ? 0 : first_size;
  const auto width = static_cast<std::size_t>(first_size + second_size);

  auto elementary = [&](int i) {
    ElementarySymmetricExpansion e(first_size, second_size);
    Exponent exp(width, 0);
    exp[static_cast<std::size_t>(offset + i - 1)] = 1;
    e.add_term(std::move(exp), 1);
    return e;
  };

  // p_j = sum_{i<j} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j, with e_i = 0 past the size.
  std::vector<ElementarySymmetricExpansion> sums;
  sums.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    ElementarySymmetricExpansion pj(first_size, second_size);
    for (int i = 1; i < j && i <= size; ++i) {
      auto term = elementary(i) * sums[static_cast<std::size_t>(j - i - 1)];
      pj += (i % 2 ? Integer(1) : Integer(-1)) * term;
    }
    if (j <= size) pj += Integer(j % 2 ? j : -j) * elementary(j);
    sums.push_back(std::move(pj));
  }
  return sums.back();
}

RootPolynomial linear_form_polynomial(const LinearForm& form, int first_size, int second_size) {
  if (form.size() != static_cast<std::size_t>(first_size + second_size)) {
    throw std::invalid_argument("linear form does not match the alphabet sizes");
  }
  RootPolynomial out(first_size, second_size);
  for (std::size_t v = 0; v < form.size(); ++v) {
    if (form[v] == 0) continue;
    Exponent e(form.size(), 0);
    e[v] = 1;
    out.add_term(std::move(e), form[v]);
  }
  return out;
}

RootPolynomial product_one_plus(std::span<const LinearForm> roots, int first_size,
                                int second_size, int max_degree) {
  RootPolynomial acc = RootPolynomial::constant(first_size, second_size, 1);
  for (const LinearForm& root : roots) {
    if (root.size() != static_cast<std::size_t>(first_size + second_size)) {
      throw std::invalid_argument("linear form does not match the alphabet sizes");
    }
    RootPolynomial next = acc;
    for (const auto& [e, c] : acc.terms()) {
      if (RootPolynomial::degree_of(e) >= max_degree) continue;
      for (std::size_t v = 0; v < root.size(); ++v) {
        if (root[v] == 0) continue;
        Exponent shifted = e;
        ++shifted[v];
        next.add_term(std::move(shifted), c * root[v]);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

RootPolynomial root_power_sum(std::span<const LinearForm> roots, int m, int first_size,
                              int second_size) {
  RootPolynomial out(first_size, second_size);
  for (const LinearForm& root : roots) {
    const RootPolynomial linear = linear_form_polynomial(root, first_size, second_size);
    RootPolynomial pw = RootPolynomial::constant(first_size, second_size, 1);
    for (int i = 0; i < m; ++i) pw = pw * linear;
    out += pw;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text grammar: term (('+'|'-') term)*, term := [int] ['*'] factor*,
// factor := ('x'|'y') nat ['^' nat], factors separated by spaces or '*'.

namespace {

struct ParsedTerm {
  Integer coefficient;
  std::vector<std::pair<int, int>> x_powers;  // (index, power)
  std::vector<std::pair<int, int>> y_powers;
};

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_);
      }
      negative = peek() == '-';
      ++pos_;
      terms.push_back(term(negative));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_number() {
    const std::size_t start = pos_;
    const Integer v = number();
    if (v > 10000) throw ParseError("index or exponent too large", start);
    return static_cast<int>(v);
  }

  ParsedTerm term(bool negative) {
    ParsedTerm t{1, {}, {}};
    skip_space();
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient = number();
      any = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    while (!at_end() && (peek() == 'x' || peek() == 'y')) {
      const char name = peek();
      const std::size_t at = pos_;
      ++pos_;
      const int index = small_number();
      if (index < 1) throw ParseError("variable indices start at 1", at);
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        power = small_number();
      }
      (name == 'x' ? t.x_powers : t.y_powers).emplace_back(index, power);
      any = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || (peek() != 'x' && peek() != 'y')) {
          throw ParseError("expected a variable after '*'", pos_);
        }
      }
    }
    if (!any) {
      if (at_end()) throw ParseError("unexpected end of polynomial", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RootPolynomial parse_root_polynomial(std::string_view text,
                                     std::optional<std::pair<int, int>> sizes) {
  const auto terms = PolynomialParser(text).parse();
  int nx = 0;
  int ny = 0;
  for (const auto& t : terms) {
    for (auto [i, p] : t.x_powers) nx = std::max(nx, i);
    for (auto [i, p] : t.y_powers) ny = std::max(ny, i);
  }
  if (sizes) {
    if (nx > sizes->first || ny > sizes->second) {
      throw DomainError("polynomial uses variables beyond the declared alphabets (x1..x" +
                        std::to_string(sizes->first) + ", y1..y" + std::to_string(sizes->second) + ")");
    }
    nx = sizes->first;
    ny = sizes->second;
  }
  RootPolynomial out(nx, ny);
  for (const auto& t : terms) {
    Exponent e(static_cast<std::size_t>(nx + ny), 0);
    for (auto [i, p] : t.x_powers) e[static_cast<std::size_t>(i - 1)] += p;
    for (auto [i, p] : t.y_powers) e[static_cast<std::size_t>(nx + i - 1)] += p;
    out.add_term(std::move(e), t.coefficient);
  }
  return out;
}

}  // namespace schubert
