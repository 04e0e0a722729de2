#include "lpq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpq {

MultiLaurent determinant(PolyMatrix m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return MultiLaurent::constant(vars, 1);

  bool negate = false;
  MultiLaurent prev = MultiLaurent::constant(vars, 1);
  for (std::size_t k = 0; k < n; ++k) {
    // Sparsest nonzero pivot keeps intermediate products small.
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r)
      if (!m[r][k].is_zero() && (piv == n || m[r][k].term_count() < m[piv][k].term_count()))
        piv = r;
    if (piv == n) return MultiLaurent(vars);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiLaurent v = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      m[i][k] = MultiLaurent(vars);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

PolyMatrix minor_matrix(const PolyMatrix& m, std::size_t row, std::size_t col) {
  PolyMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<MultiLaurent> r;
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

CoefficientSplit split_by_variable(const MultiLaurent& p, const std::string& var) {
  auto idx = p.var_index(var);
  if (!idx) throw VariableMismatch("variable '" + var + "' not in polynomial");
  CoefficientSplit out;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (i != *idx) out.rest_vars.push_back(p.vars()[i]);
  if (p.is_zero()) return out;
  int lo = p.terms()[0].exp[*idx], hi = lo;
  for (const auto& t : p.terms()) {
    lo = std::min(lo, t.exp[*idx]);
    hi = std::max(hi, t.exp[*idx]);
  }
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& t : p.terms()) {
    Exponents e;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (i != *idx) e.push_back(t.exp[i]);
    buckets[static_cast<std::size_t>(t.exp[*idx] - lo)].push_back({std::move(e), t.coeff});
  }
  out.lowest = lo;
  for (auto& b : buckets) out.coeffs.push_back(MultiLaurent::from_terms(out.rest_vars, std::move(b)));
  return out;
}

MultiLaurent sylvester_resultant(const std::vector<MultiLaurent>& f,
                                 const std::vector<MultiLaurent>& g,
                                 const std::vector<std::string>& vars) {
  if (f.empty() || g.empty()) return MultiLaurent(vars);
  if (f.back().is_zero() || g.back().is_zero())
    throw std::invalid_argument("sylvester_resultant: leading coefficient is zero");
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return MultiLaurent::constant(vars, 1);
  PolyMatrix s(size, std::vector<MultiLaurent>(size, MultiLaurent(vars)));
  // Row r of the f-block holds f shifted right by r, highest degree first.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k];
  return determinant(std::move(s), vars);
}

MultiLaurent roots_of_unity_product(const MultiLaurent& p, const std::string& var, int order) {
  if (order < 1) throw std::invalid_argument("roots_of_unity_product: order must be >= 1");
  CoefficientSplit split = split_by_variable(p, var);
  if (p.is_zero()) return MultiLaurent(split.rest_vars);
  std::vector<MultiLaurent> cyc(static_cast<std::size_t>(order) + 1,
                                MultiLaurent(split.rest_vars));
  cyc.front() = MultiLaurent::constant(split.rest_vars, -1);
  cyc.back() = MultiLaurent::constant(split.rest_vars, 1);
  return sylvester_resultant(cyc, split.coeffs, split.rest_vars);
}

}  // namespace lpq
