#pragma once

// Dense integer polynomials in one variable and exact real-root counting.

#include <cstddef>
#include <vector>

#include "lpq/polyring.hpp"

namespace lpq {

/// Coefficients in increasing degree; no trailing zeros (empty = zero).
using DensePoly = std::vector<Integer>;

void trim(DensePoly& f);
int degree(const DensePoly& f);  // -1 for zero
DensePoly derivative(const DensePoly& f);
Integer content(const DensePoly& f);
/// Divides by the positive content; zero stays zero.
DensePoly primitive_part(const DensePoly& f);
/// |lc(g)|^(deg f - deg g + 1) * f mod g.  The multiplier is positive so the
/// sign pattern used by Sturm chains is preserved.
DensePoly pseudo_remainder(const DensePoly& f, const DensePoly& g);
/// Primitive gcd with positive leading coefficient.
DensePoly gcd(DensePoly f, DensePoly g);
/// Exact quotient f / g over the integers; throws NotDivisible.
DensePoly exact_quotient(const DensePoly& f, const DensePoly& g);

/// Number of distinct real roots of a square-free f (Sturm, -inf to +inf).
std::size_t sturm_real_root_count(const DensePoly& f);

/// Laurent polynomial in exactly one variable to an ordinary polynomial with
/// nonzero constant term (the minimal exponent is shifted to 0).
DensePoly to_dense(const MultiLaurent& p);

/// Distinct nonzero real roots of a one-variable Laurent polynomial.
std::size_t count_real_roots(const MultiLaurent& p);

struct RootTermBound {
  bool holds;
  std::size_t rho;  // distinct nonzero real roots
  std::size_t tau;  // nonzero terms
};

/// rho <= 2*tau - 2 for a nontrivial one-variable Laurent polynomial.
RootTermBound check_root_term_bound(const MultiLaurent& p);

}  // namespace lpq
