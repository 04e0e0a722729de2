#include "lpq/univariate.hpp"

#include <stdexcept>
#include <utility>

namespace lpq {

void trim(DensePoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int degree(const DensePoly& f) { return static_cast<int>(f.size()) - 1; }

DensePoly derivative(const DensePoly& f) {
  DensePoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

Integer content(const DensePoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

DensePoly primitive_part(const DensePoly& f) {
  DensePoly r = f;
  trim(r);
  Integer g = content(r);
  if (g > 1)
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

DensePoly pseudo_remainder(const DensePoly& f, const DensePoly& g) {
  if (g.empty()) throw std::domain_error("pseudo-remainder by zero");
  DensePoly r = f;
  trim(r);
  const int dg = degree(g);
  Integer lc = abs(g.back());
  int steps = degree(r) - dg + 1;
  if (steps <= 0) return r;
  const bool neg = sgn(g.back()) < 0;
  // r <- lc*r - sign * r_top * x^(k) * g, repeated; each step multiplies by |lc|.
  while (degree(r) >= dg) {
    int shift = degree(r) - dg;
    Integer top = r.back();
    for (auto& c : r) c *= lc;
    if (neg) top = -top;
    for (int k = 0; k <= dg; ++k) r[shift + k] -= top * g[k];
    trim(r);
    --steps;
  }
  if (steps > 0) {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : r) c *= m;
  }
  return r;
}

DensePoly gcd(DensePoly f, DensePoly g) {
  f = primitive_part(f);
  g = primitive_part(g);
  if (degree(f) < degree(g)) std::swap(f, g);
  while (!g.empty()) {
    DensePoly r = primitive_part(pseudo_remainder(f, g));
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty() && sgn(f.back()) < 0)
    for (auto& c : f) c = -c;
  return f;
}

DensePoly exact_quotient(const DensePoly& f, const DensePoly& g) {
  if (g.empty()) throw std::domain_error("division by zero polynomial");
  DensePoly r = f;
  trim(r);
  if (r.empty()) return {};
  const int dg = degree(g);
  if (degree(r) < dg) throw NotDivisible("dense quotient: degree too small");
  DensePoly q(static_cast<std::size_t>(degree(r) - dg + 1));
  while (!r.empty() && degree(r) >= dg) {
    int shift = degree(r) - dg;
    if (!mpz_divisible_p(r.back().get_mpz_t(), g.back().get_mpz_t()))
      throw NotDivisible("dense quotient: coefficient not divisible");
    Integer c;
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), g.back().get_mpz_t());
    for (int k = 0; k <= dg; ++k) r[shift + k] -= c * g[k];
    q[shift] = c;
    trim(r);
  }
  if (!r.empty()) throw NotDivisible("dense quotient: nonzero remainder");
  trim(q);
  return q;
}

namespace {

int sign_at_pos_inf(const DensePoly& f) { return sgn(f.back()); }

int sign_at_neg_inf(const DensePoly& f) {
  int s = sgn(f.back());
  return degree(f) % 2 == 0 ? s : -s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_real_root_count(const DensePoly& f) {
  DensePoly p0 = primitive_part(f);
  if (p0.empty()) throw std::domain_error("Sturm sequence of the zero polynomial");
  std::vector<DensePoly> chain{p0};
  DensePoly p1 = primitive_part(derivative(p0));
  while (!p1.empty()) {
    chain.push_back(p1);
    DensePoly r = pseudo_remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    p1 = primitive_part(r);
  }
  std::vector<int> lo, hi;
  for (const auto& p : chain) {
    lo.push_back(sign_at_neg_inf(p));
    hi.push_back(sign_at_pos_inf(p));
  }
  return sign_changes(lo) - sign_changes(hi);
}

DensePoly to_dense(const MultiLaurent& p) {
  if (p.nvars() != 1)
    throw std::invalid_argument("expected a polynomial in exactly one variable");
  if (p.is_zero()) return {};
  const int lo = p.trailing_term().exp[0];
  const int hi = p.leading_term().exp[0];
  DensePoly f(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& t : p.terms()) f[static_cast<std::size_t>(t.exp[0] - lo)] = t.coeff;
  return f;
}

std::size_t count_real_roots(const MultiLaurent& p) {
  if (p.nvars() != 1)
    throw std::invalid_argument("count_real_roots expects exactly one variable");
  if (p.is_zero()) throw std::domain_error("count_real_roots of the zero polynomial");
  DensePoly f = to_dense(p);
  if (degree(f) <= 0) return 0;
  DensePoly g = gcd(f, derivative(f));
  DensePoly squarefree = degree(g) > 0 ? exact_quotient(primitive_part(f), g) : primitive_part(f);
  return sturm_real_root_count(squarefree);
}

RootTermBound check_root_term_bound(const MultiLaurent& p) {
  RootTermBound r{};
  r.rho = count_real_roots(p);
  r.tau = p.term_count();
  r.holds = r.rho + 2 <= 2 * r.tau;
  return r;
}

}  // namespace lpq
