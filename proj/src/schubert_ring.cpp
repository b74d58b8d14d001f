#include "schubert/schubert_ring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "schubert/errors.hpp"

namespace schubert {

GrassmannianContext::GrassmannianContext(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k >= n) {
    throw DomainError("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") requires 1 <= k < n");
  }
}

Partition GrassmannianContext::point_class() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(k_), n_ - k_));
}

std::string GrassmannianContext::to_string() const {
  return "Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
}

// ---------------------------------------------------------------------------
// CohomologyElement

CohomologyElement CohomologyElement::unit(const GrassmannianContext& ctx) {
  CohomologyElement e(ctx);
  e.terms_.emplace(Partition{}, 1);
  return e;
}

CohomologyElement CohomologyElement::schubert_class(const GrassmannianContext& ctx,
                                                    const Partition& lambda, Integer coefficient) {
  if (!fits(lambda, ctx.rectangle())) {
    throw DomainError("σ(" + lambda.to_string() + ") is not a Schubert class on " + ctx.to_string());
  }
  CohomologyElement e(ctx);
  e.add_term(lambda, coefficient);
  return e;
}

Integer CohomologyElement::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool CohomologyElement::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.size() == d; });
}

int CohomologyElement::degree() const noexcept {
  if (terms_.empty() || !is_homogeneous()) return -1;
  return terms_.begin()->first.size();
}

CohomologyElement CohomologyElement::graded_part(int d) const {
  CohomologyElement out(ctx_);
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() == d) out.terms_.emplace(lambda, c);
  }
  return out;
}

void CohomologyElement::add_term(const Partition& lambda, const Integer& coefficient) {
  if (coefficient == 0 || !fits(lambda, ctx_.rectangle())) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void CohomologyElement::require_same_context(const CohomologyElement& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw DomainError("cannot combine classes on " + ctx_.to_string() + " and " +
                      other.ctx_.to_string());
  }
}

CohomologyElement& CohomologyElement::operator+=(const CohomologyElement& other) {
  require_same_context(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

CohomologyElement& CohomologyElement::operator-=(const CohomologyElement& other) {
  require_same_context(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

CohomologyElement& CohomologyElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

CohomologyElement CohomologyElement::operator-() const {
  CohomologyElement out = *this;
  for (auto& [lambda, c] : out.terms_) c = -c;
  return out;
}

CohomologyElement operator*(const CohomologyElement& a, const CohomologyElement& b) {
  return multiply(a, b);
}

std::vector<std::pair<Partition, Integer>> CohomologyElement::ordered_terms() const {
  std::vector<std::pair<Partition, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return report_order(a.first, b.first); });
  return out;
}

std::string CohomologyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : ordered_terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.str();
    out += "σ(";
    if (!lambda.empty()) out += lambda.to_string();
    out += ")";
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pieri

namespace {

using PieriKey = std::tuple<int, int, int, std::vector<int>>;

class PieriCache {
 public:
  const std::vector<Partition>* find(const PieriKey& key) {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    return it == cache_.end() ? nullptr : &it->second;
  }

  const std::vector<Partition>& insert(PieriKey key, std::vector<Partition> value) {
    std::lock_guard lock(mutex_);
    // Map nodes are stable and never erased, so references stay valid.
    return cache_.try_emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<PieriKey, std::vector<Partition>> cache_;
};

PieriCache& pieri_cache() {
  static PieriCache cache;
  return cache;
}

void horizontal_strips(const Partition& lambda, int rows, int cols, std::size_t row, int remaining,
                       std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> parts = current;
    for (std::size_t i = row; i < lambda.length(); ++i) parts.push_back(lambda[i]);
    out.emplace_back(std::move(parts));
    return;
  }
  if (row >= static_cast<std::size_t>(rows)) return;
  const int low = lambda[row];
  const int high = row == 0 ? cols : lambda[row - 1];
  if (low > high) return;
  for (int value = std::min(high, low + remaining); value >= low; --value) {
    current.push_back(value);
    horizontal_strips(lambda, rows, cols, row + 1, remaining - (value - low), current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& pieri_terms(int p, const Partition& lambda,
                                          const GrassmannianContext& ctx) {
  static const std::vector<Partition> none;
  if (p < 0 || p > ctx.codim_rank() || !fits(lambda, ctx.rectangle())) return none;

  PieriKey key{ctx.k(), ctx.n(), p, lambda.parts()};
  if (const auto* hit = pieri_cache().find(key)) return *hit;

  std::vector<Partition> result;
  std::vector<int> current;
  horizontal_strips(lambda, ctx.k(), ctx.codim_rank(), 0, p, current, result);
  std::sort(result.begin(), result.end(), report_order);
  return pieri_cache().insert(std::move(key), std::move(result));
}

CohomologyElement pieri(int p, const Partition& lambda, const GrassmannianContext& ctx) {
  CohomologyElement out(ctx);
  for (const Partition& rho : pieri_terms(p, lambda, ctx)) out.add_term(rho, 1);
  return out;
}

CohomologyElement pieri_apply(int p, const CohomologyElement& x) {
  if (p == 0) return x;
  CohomologyElement out(x.context());
  for (const auto& [lambda, c] : x.terms()) {
    for (const Partition& rho : pieri_terms(p, lambda, x.context())) out.add_term(rho, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Giambelli

void SpecialPolynomial::add(Monomial specials, const Integer& coefficient) {
  if (coefficient == 0) return;
  std::erase(specials, 0);
  std::sort(specials.begin(), specials.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(std::move(specials), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

CohomologyElement SpecialPolynomial::apply_to(const CohomologyElement& x) const {
  CohomologyElement out(x.context());
  for (const auto& [specials, c] : terms_) {
    CohomologyElement partial = x;
    for (int p : specials) {
      partial = pieri_apply(p, partial);
      if (partial.is_zero()) break;
    }
    partial *= c;
    out += partial;
  }
  return out;
}

CohomologyElement SpecialPolynomial::evaluate(const GrassmannianContext& ctx) const {
  return apply_to(CohomologyElement::unit(ctx));
}

std::string SpecialPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest number of factors first, then by indices.
  std::vector<std::pair<Monomial, Integer>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  for (const auto& [mono, c] : ordered) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      if (!factors.empty()) factors += "·";
      factors += "σ" + std::to_string(mono[i]);
      if (j - i > 1) factors += "^" + std::to_string(j - i);
      i = j;
    }
    if (magnitude != 1 || factors.empty()) out += magnitude.str();
    out += factors;
    first = false;
  }
  return out;
}

SpecialPolynomial giambelli(const Partition& lambda, const GrassmannianContext& ctx) {
  if (!fits(lambda, ctx.rectangle())) {
    throw DomainError("σ(" + lambda.to_string() + ") is not a Schubert class on " + ctx.to_string());
  }
  // Rows past the length of lambda contribute a unit diagonal, so the
  // length x length minor suffices.
  const int len = static_cast<int>(lambda.length());
  std::vector<int> perm(static_cast<std::size_t>(len));
  std::iota(perm.begin(), perm.end(), 0);

  SpecialPolynomial out;
  do {
    std::vector<int> specials;
    bool vanishes = false;
    for (int i = 0; i < len && !vanishes; ++i) {
      const int index = lambda[static_cast<std::size_t>(i)] + perm[i] - i;
      if (index < 0 || index > ctx.codim_rank()) vanishes = true;
      specials.push_back(index);
    }
    if (vanishes) continue;
    int inversions = 0;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) inversions += perm[i] > perm[j];
    }
    out.add(std::move(specials), inversions % 2 ? Integer(-1) : Integer(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Products and integration

CohomologyElement multiply(const CohomologyElement& a, const CohomologyElement& b) {
  if (!(a.context() == b.context())) {
    throw DomainError("cannot multiply classes on " + a.context().to_string() + " and " +
                      b.context().to_string());
  }
  CohomologyElement out(a.context());
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [mu, c] : b.terms()) {
    CohomologyElement partial = giambelli(mu, a.context()).apply_to(a);
    partial *= c;
    out += partial;
  }
  return out;
}

CohomologyElement power(const CohomologyElement& x, unsigned exponent) {
  CohomologyElement out = CohomologyElement::unit(x.context());
  for (unsigned i = 0; i < exponent; ++i) out = multiply(out, x);
  return out;
}

Integer integrate(const CohomologyElement& x) {
  if (x.is_zero()) return 0;
  const int dim = x.context().dimension();
  if (!x.is_homogeneous()) {
    throw DomainError("cannot integrate a non-homogeneous class over " + x.context().to_string());
  }
  if (x.degree() != dim) {
    throw DomainError("cannot integrate a class of degree " + std::to_string(x.degree()) + " over " +
                      x.context().to_string() + ": expected degree " + std::to_string(dim));
  }
  return x.coefficient(x.context().point_class());
}

Integer intersection_number(std::span<const Factor> factors, const GrassmannianContext& ctx) {
  long total = 0;
  for (const Factor& f : factors) {
    if (!fits(f.partition, ctx.rectangle())) {
      throw DomainError("σ(" + f.partition.to_string() + ") is not a Schubert class on " +
                        ctx.to_string());
    }
    total += static_cast<long>(f.exponent) * f.partition.size();
  }
  if (total != ctx.dimension()) {
    throw DomainError("intersection on " + ctx.to_string() + " needs total degree " +
                      std::to_string(ctx.dimension()) + ", got " + std::to_string(total));
  }
  CohomologyElement product = CohomologyElement::unit(ctx);
  for (const Factor& f : factors) {
    const CohomologyElement cls = CohomologyElement::schubert_class(ctx, f.partition);
    for (unsigned i = 0; i < f.exponent; ++i) product = multiply(product, cls);
  }
  return integrate(product);
}

}  // namespace schubert
