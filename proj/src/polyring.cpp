#include "lpq/polyring.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace lpq {

namespace {

Exponents zero_exponents(std::size_t n) { return Exponents(n, 0); }

bool lex_less(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sorts, merges and strips zeros in place.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_less(a.exp, b.exp); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exp == terms[i].exp) {
      sum += terms[j].coeff;
      ++j;
    }
    if (sgn(sum) != 0) {
      if (out != i) terms[out].exp = std::move(terms[i].exp);
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists: a + sign*b.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && lex_less(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || lex_less(b[j].exp, a[i].exp)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coeff + b[j].coeff) : Integer(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Mixed-radix encoding of exponent vectors inside a box [lo, hi] into
// integers; the encoding is monotone for the lexicographic order.
struct Packing {
  Exponents lo;
  std::vector<std::uint64_t> stride;
  std::uint64_t space = 1;
  bool ok = true;

  Packing(const Exponents& low, const Exponents& high) : lo(low), stride(low.size()) {
    unsigned __int128 total = 1;
    for (std::size_t i = low.size(); i-- > 0;) {
      stride[i] = static_cast<std::uint64_t>(total);
      total *= static_cast<unsigned __int128>(static_cast<long long>(high[i]) - low[i] + 1);
      if (total > (static_cast<unsigned __int128>(1) << 62)) {
        ok = false;
        return;
      }
    }
    space = static_cast<std::uint64_t>(total);
  }

  std::uint64_t pack(const Exponents& e, const Exponents& base) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k += static_cast<std::uint64_t>(e[i] - base[i]) * stride[i];
    return k;
  }
  std::uint64_t pack(const Exponents& e) const { return pack(e, lo); }

  Exponents unpack(std::uint64_t k) const {
    Exponents e(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      e[i] = static_cast<int>(k / stride[i]) + lo[i];
      k %= stride[i];
    }
    return e;
  }
};

// Largest box handled with a dense coefficient array.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

// True when every coefficient is a machine long and any sum of pairwise
// products stays below 2^125 in magnitude.
bool fits_int128_product(const std::vector<Term>& a, const std::vector<Term>& b) {
  auto max_bits = [](const std::vector<Term>& ts) {
    std::size_t bits = 0;
    for (const auto& t : ts) {
      if (!mpz_fits_slong_p(t.coeff.get_mpz_t())) return std::size_t{64};
      bits = std::max(bits, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
    }
    return bits;
  };
  std::size_t ba = max_bits(a), bb = max_bits(b);
  if (ba >= 63 || bb >= 63) return false;
  std::size_t nb = 0;
  for (std::size_t m = std::min(a.size(), b.size()); m; m >>= 1) ++nb;
  return ba + bb + nb <= 125;
}

Integer from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

}  // namespace

MultiLaurent MultiLaurent::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exp.size() != vars.size())
      throw VariableMismatch("exponent vector length does not match variable count");
  MultiLaurent p(std::move(vars));
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

MultiLaurent MultiLaurent::constant(std::vector<std::string> vars, const Integer& c) {
  std::size_t n = vars.size();
  return monomial(std::move(vars), zero_exponents(n), c);
}

MultiLaurent MultiLaurent::monomial(std::vector<std::string> vars, Exponents exp,
                                    const Integer& c) {
  if (exp.size() != vars.size())
    throw VariableMismatch("exponent vector length does not match variable count");
  MultiLaurent p(std::move(vars));
  if (sgn(c) != 0) p.terms_.push_back({std::move(exp), c});
  return p;
}

MultiLaurent MultiLaurent::variable(std::vector<std::string> vars, const std::string& name,
                                    int power) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw VariableMismatch("unknown variable '" + name + "'");
  Exponents e = zero_exponents(vars.size());
  e[static_cast<std::size_t>(it - vars.begin())] = power;
  return monomial(std::move(vars), std::move(e));
}

bool MultiLaurent::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 &&
         std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](int e) { return e == 0; });
}

std::optional<std::size_t> MultiLaurent::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

Integer MultiLaurent::coeff(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& x) { return lex_less(t.exp, x); });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

Exponents MultiLaurent::min_exponents() const {
  if (is_zero()) throw std::domain_error("min_exponents of the zero polynomial");
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

Exponents MultiLaurent::max_exponents() const {
  if (is_zero()) throw std::domain_error("max_exponents of the zero polynomial");
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], t.exp[i]);
  return m;
}

MultiLaurent MultiLaurent::inverse_monomial() const {
  if (terms_.size() != 1 || abs(terms_[0].coeff) != 1)
    throw NotDivisible("polynomial is not a unit");
  Exponents e = terms_[0].exp;
  for (auto& v : e) v = -v;
  return monomial(vars_, std::move(e), terms_[0].coeff);
}

void MultiLaurent::check_same_vars(const MultiLaurent& o) const {
  if (vars_ != o.vars_) throw VariableMismatch("operands have different variable lists");
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  check_same_vars(o);
  terms_ = merge_add(terms_, o.terms_, +1);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  check_same_vars(o);
  terms_ = merge_add(terms_, o.terms_, -1);
  return *this;
}

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) {
  *this = *this * o;
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  a.check_same_vars(b);
  MultiLaurent r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.nvars();
  if (a.is_monomial() && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].exp);
  if (b.is_monomial() && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].exp);

  Exponents amin = a.min_exponents(), bmin = b.min_exponents();
  Exponents amax = a.max_exponents(), bmax = b.max_exponents();
  Exponents lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = amin[i] + bmin[i];
    hi[i] = amax[i] + bmax[i];
  }

  // The product of two packed exponents is the sum of the packed values.
  if (Packing pk(lo, hi); pk.ok) {
    std::vector<std::uint64_t> ka(a.terms_.size()), kb(b.terms_.size());
    for (std::size_t i = 0; i < ka.size(); ++i) ka[i] = pk.pack(a.terms_[i].exp, amin);
    for (std::size_t j = 0; j < kb.size(); ++j) kb[j] = pk.pack(b.terms_[j].exp, bmin);
    const std::size_t pairs = ka.size() * kb.size();

    const bool dense_ok = pk.space <= kDenseLimit && pk.space <= 8 * pairs + 4096;
    if (dense_ok && fits_int128_product(a.terms_, b.terms_)) {
      std::vector<__int128> dense(pk.space, 0);
      std::vector<long> cb(kb.size());
      for (std::size_t j = 0; j < kb.size(); ++j) cb[j] = b.terms_[j].coeff.get_si();
      for (std::size_t i = 0; i < ka.size(); ++i) {
        const __int128 ca = a.terms_[i].coeff.get_si();
        __int128* base = dense.data() + ka[i];
        for (std::size_t j = 0; j < kb.size(); ++j) base[kb[j]] += ca * cb[j];
      }
      for (std::uint64_t k = 0; k < pk.space; ++k)
        if (dense[k] != 0) r.terms_.push_back({pk.unpack(k), from_int128(dense[k])});
      return r;
    }
    if (dense_ok) {
      std::vector<Integer> dense(pk.space);
      for (std::size_t i = 0; i < ka.size(); ++i) {
        const mpz_srcptr ca = a.terms_[i].coeff.get_mpz_t();
        for (std::size_t j = 0; j < kb.size(); ++j)
          mpz_addmul(dense[ka[i] + kb[j]].get_mpz_t(), ca, b.terms_[j].coeff.get_mpz_t());
      }
      for (std::uint64_t k = 0; k < pk.space; ++k)
        if (sgn(dense[k]) != 0) r.terms_.push_back({pk.unpack(k), std::move(dense[k])});
      return r;
    }

    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(std::min<std::size_t>(pairs, 1u << 20));
    for (std::size_t i = 0; i < ka.size(); ++i) {
      const mpz_srcptr ca = a.terms_[i].coeff.get_mpz_t();
      for (std::size_t j = 0; j < kb.size(); ++j) {
        Integer& slot = acc[ka[i] + kb[j]];
        mpz_addmul(slot.get_mpz_t(), ca, b.terms_[j].coeff.get_mpz_t());
      }
    }
    std::vector<std::pair<std::uint64_t, Integer>> flat;
    flat.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (sgn(c) != 0) flat.emplace_back(k, std::move(c));
    std::sort(flat.begin(), flat.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    r.terms_.reserve(flat.size());
    for (auto& [k, c] : flat) r.terms_.push_back({pk.unpack(k), std::move(c)});
    return r;
  }

  std::map<Exponents, Integer> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = ta.exp[i] + tb.exp[i];
      Integer& slot = acc[e];
      mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) r.terms_.push_back({e, std::move(c)});
  return r;
}

MultiLaurent operator+(MultiLaurent a, long c) {
  return a + MultiLaurent::constant(a.vars(), Integer(c));
}

MultiLaurent operator*(MultiLaurent a, const Integer& c) {
  if (sgn(c) == 0) return MultiLaurent(a.vars());
  for (auto& t : a.terms_) t.coeff *= c;
  return a;
}

MultiLaurent MultiLaurent::shifted(const Exponents& shift) const {
  if (shift.size() != nvars()) throw VariableMismatch("shift length does not match variables");
  MultiLaurent r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < shift.size(); ++i) t.exp[i] += shift[i];
  return r;
}

std::string MultiLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Integer& c = it->coeff;
    bool neg = sgn(c) < 0;
    Integer mag = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < nvars(); ++i) {
      int e = it->exp[i];
      if (e == 0) continue;
      factors.push_back(e == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiLaurent& p) { return os << p.to_string(); }

MultiLaurent pow(const MultiLaurent& p, unsigned k) {
  MultiLaurent result = MultiLaurent::constant(p.vars(), 1);
  MultiLaurent base = p;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

MultiLaurent UnitEquivalenceWitness::apply(const MultiLaurent& q) const {
  MultiLaurent r = monomial.empty() ? q : q.shifted(monomial);
  return sign < 0 ? -r : r;
}

CanonicalForm canonical(const MultiLaurent& p) {
  CanonicalForm out{p, {1, zero_exponents(p.nvars())}};
  if (p.is_zero()) return out;
  Exponents mn = p.min_exponents();
  Exponents neg = mn;
  for (auto& v : neg) v = -v;
  out.poly = p.shifted(neg);
  out.witness.monomial = mn;
  if (sgn(out.poly.trailing_term().coeff) < 0) {
    out.poly = -out.poly;
    out.witness.sign = -1;
  }
  return out;
}

bool unit_equivalent(const MultiLaurent& a, const MultiLaurent& b) {
  return canonical(a).poly == canonical(b).poly;
}

std::optional<MultiLaurent> try_exact_div(const MultiLaurent& p, const MultiLaurent& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.vars() != d.vars()) throw VariableMismatch("operands have different variable lists");
  MultiLaurent q(p.vars());
  if (p.is_zero()) return q;
  const std::size_t n = p.nvars();

  if (d.is_monomial()) {
    const Term& dt = d.terms()[0];
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t())) return std::nullopt;
      Exponents e = t.exp;
      for (std::size_t i = 0; i < n; ++i) e[i] -= dt.exp[i];
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
      out.push_back({std::move(e), std::move(c)});
    }
    return MultiLaurent::from_terms(p.vars(), std::move(out));
  }

  // Any quotient term must lie in this box: extreme degrees add under products.
  Exponents pmin = p.min_exponents(), pmax = p.max_exponents();
  Exponents dmin = d.min_exponents(), dmax = d.max_exponents();
  Exponents lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = pmin[i] - dmin[i];
    hi[i] = pmax[i] - dmax[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }

  const Term& lead = d.leading_term();

  // Every partial remainder stays inside the box of P, so a dense array over
  // that box can be swept from the top key down.
  if (Packing pk(pmin, pmax); pk.ok && pk.space <= kDenseLimit) {
    std::vector<Integer> rem(pk.space);
    for (const auto& t : p.terms()) rem[pk.pack(t.exp)] = t.coeff;
    std::vector<std::int64_t> doff;
    const std::uint64_t lead_key = pk.pack(lead.exp, dmin);
    for (const auto& t : d.terms())
      doff.push_back(static_cast<std::int64_t>(pk.pack(t.exp, dmin)) - static_cast<std::int64_t>(lead_key));
    std::vector<Term> quot;
    Integer qc;
    for (std::uint64_t key = pk.space; key-- > 0;) {
      if (sgn(rem[key]) == 0) continue;
      Exponents re = pk.unpack(key);
      Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = re[i] - lead.exp[i];
        if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
      }
      if (!mpz_divisible_p(rem[key].get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
      mpz_divexact(qc.get_mpz_t(), rem[key].get_mpz_t(), lead.coeff.get_mpz_t());
      for (std::size_t k = 0; k < doff.size(); ++k) {
        Integer& slot = rem[static_cast<std::uint64_t>(static_cast<std::int64_t>(key) + doff[k])];
        mpz_submul(slot.get_mpz_t(), qc.get_mpz_t(), d.terms()[k].coeff.get_mpz_t());
      }
      quot.push_back({std::move(e), qc});
    }
    std::reverse(quot.begin(), quot.end());
    return MultiLaurent::from_terms(p.vars(), std::move(quot));
  }

  std::map<Exponents, Integer, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace(t.exp, t.coeff);
  std::vector<Term> quot;
  Exponents e(n);
  Integer qc;
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.begin();
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = re[i] - lead.exp[i];
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead.coeff.get_mpz_t());
    for (const auto& dt : d.terms()) {
      Exponents k(n);
      for (std::size_t i = 0; i < n; ++i) k[i] = e[i] + dt.exp[i];
      auto [it, inserted] = rem.try_emplace(std::move(k));
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), dt.coeff.get_mpz_t());
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quot.push_back({e, qc});
  }
  std::reverse(quot.begin(), quot.end());
  return MultiLaurent::from_terms(p.vars(), std::move(quot));
}

MultiLaurent exact_div(const MultiLaurent& p, const MultiLaurent& d) {
  auto q = try_exact_div(p, d);
  if (!q) throw NotDivisible("(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
  return *std::move(q);
}

MultiLaurent substitute(const MultiLaurent& p, const Assignment& assignment,
                        const std::vector<std::string>& out_vars) {
  std::vector<const Exponents*> images(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = assignment.find(p.vars()[i]);
    if (it == assignment.end())
      throw std::invalid_argument("variable '" + p.vars()[i] + "' is not assigned");
    if (it->second.size() != out_vars.size())
      throw VariableMismatch("image of '" + p.vars()[i] + "' has wrong exponent length");
    images[i] = &it->second;
  }
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Exponents e = zero_exponents(out_vars.size());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += t.exp[i] * (*images[i])[k];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return MultiLaurent::from_terms(out_vars, std::move(out));
}

std::size_t support_rank(const MultiLaurent& p) {
  if (p.is_zero()) throw std::domain_error("support_rank of the zero polynomial");
  const std::size_t n = p.nvars();
  const Exponents& base = p.terms()[0].exp;
  std::vector<std::vector<Integer>> rows;
  for (std::size_t k = 1; k < p.term_count(); ++k) {
    std::vector<Integer> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = p.terms()[k].exp[i] - base[i];
    rows.push_back(std::move(row));
  }
  // Fraction-free forward elimination.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      Integer a = rows[rank][col], b = rows[r][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] = a * rows[r][c] - b * rows[rank][c];
      Integer g = 0;
      for (std::size_t c = col; c < n; ++c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[r][c].get_mpz_t());
      if (g > 1)
        for (std::size_t c = col; c < n; ++c) mpz_divexact(rows[r][c].get_mpz_t(), rows[r][c].get_mpz_t(), g.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

bool has_symmetric_support(const MultiLaurent& p) {
  for (const auto& t : p.terms()) {
    Exponents neg = t.exp;
    for (auto& v : neg) v = -v;
    if (sgn(p.coeff(neg)) == 0) return false;
  }
  return true;
}

MultiLaurent symmetrize(const MultiLaurent& p) {
  if (p.is_zero()) throw NotSymmetrizable("cannot symmetrize the zero polynomial");
  Exponents mn = p.min_exponents(), mx = p.max_exponents();
  Exponents shift(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    int s = mn[i] + mx[i];
    if (s % 2 != 0)
      throw NotSymmetrizable("support of " + p.vars()[i] + " has no integral center");
    shift[i] = -s / 2;
  }
  MultiLaurent q = p.shifted(shift);
  int sign = 0;
  for (const auto& t : q.terms()) {
    Exponents neg = t.exp;
    for (auto& v : neg) v = -v;
    Integer mirror = q.coeff(neg);
    int s = mirror == t.coeff ? 1 : (mirror == -t.coeff ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign))
      throw NotSymmetrizable("coefficients are not centrally symmetric");
    sign = s;
  }
  if (sgn(q.leading_term().coeff) < 0) q = -q;
  return q;
}

MultiLaurent reorder_vars(const MultiLaurent& p, const std::vector<std::string>& new_vars) {
  std::vector<std::optional<std::size_t>> where(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), p.vars()[i]);
    if (it != new_vars.end()) where[i] = static_cast<std::size_t>(it - new_vars.begin());
  }
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Exponents e = zero_exponents(new_vars.size());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!where[i]) throw VariableMismatch("variable '" + p.vars()[i] + "' occurs but is dropped");
      e[*where[i]] = t.exp[i];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return MultiLaurent::from_terms(new_vars, std::move(out));
}

nlohmann::json to_json(const MultiLaurent& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exp = nlohmann::json::array();
    for (int e : t.exp) exp.push_back(e);
    nlohmann::json term;
    term["exp"] = std::move(exp);
    term["coeff"] = t.coeff.get_str();
    terms.push_back(std::move(term));
  }
  nlohmann::json j;
  j["vars"] = p.vars();
  j["terms"] = std::move(terms);
  return j;
}

MultiLaurent from_json(const nlohmann::json& j) {
  auto vars = j.at("vars").get<std::vector<std::string>>();
  std::vector<Term> terms;
  for (const auto& jt : j.at("terms")) {
    Exponents e;
    for (const auto& v : jt.at("exp")) e.push_back(v.get<int>());
    Integer c;
    if (c.set_str(jt.at("coeff").get<std::string>(), 10) != 0)
      throw std::invalid_argument("malformed coefficient " + jt.at("coeff").dump());
    terms.push_back({std::move(e), std::move(c)});
  }
  return MultiLaurent::from_terms(std::move(vars), std::move(terms));
}

}  // namespace lpq
