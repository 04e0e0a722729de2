#pragma once

// Matrices over the Laurent ring: fraction-free determinants, Sylvester
// resultants and products over roots of unity.

#include <string>
#include <vector>

#include "lpq/polyring.hpp"

namespace lpq {

using PolyMatrix = std::vector<std::vector<MultiLaurent>>;

/// Bareiss elimination; every intermediate division is exact.  The empty
/// matrix has determinant 1 (over `vars`).
MultiLaurent determinant(PolyMatrix m, const std::vector<std::string>& vars);

/// Matrix with row `row` and column `col` removed.
PolyMatrix minor_matrix(const PolyMatrix& m, std::size_t row, std::size_t col);

/// Coefficients of P as a polynomial in `var` (index k holds the coefficient
/// of var^(k + lowest)), each a polynomial in the remaining variables.
struct CoefficientSplit {
  int lowest = 0;
  std::vector<MultiLaurent> coeffs;
  std::vector<std::string> rest_vars;
};
CoefficientSplit split_by_variable(const MultiLaurent& p, const std::string& var);

/// Sylvester resultant of sum f[i] v^i and sum g[j] v^j (leading entries nonzero).
MultiLaurent sylvester_resultant(const std::vector<MultiLaurent>& f,
                                 const std::vector<MultiLaurent>& g,
                                 const std::vector<std::string>& vars);

/// prod_{j=0}^{p-1} P(..., w^j) for w a primitive p-th root of unity, up to a
/// unit, as Res(var^p - 1, P cleared of negative var-powers).
MultiLaurent roots_of_unity_product(const MultiLaurent& p, const std::string& var, int order);

}  // namespace lpq
