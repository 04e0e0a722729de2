#include <doctest.h>

#include <random>
#include <set>

#include "lpq/univariate.hpp"
#include "lpq/verification.hpp"
#include "oracles.hpp"

using namespace lpq;

namespace {

const std::vector<std::string> kS{"s"};
MultiLaurent s_var() { return MultiLaurent::variable(kS, "s"); }

DensePoly dense(std::initializer_list<long> cs) {
  DensePoly f;
  for (long c : cs) f.push_back(c);
  return f;
}

}  // namespace

TEST_CASE("dense helpers") {
  DensePoly f = dense({6, -5, 1});  // (s - 2)(s - 3)
  CHECK(degree(f) == 2);
  CHECK(derivative(f) == dense({-5, 2}));
  CHECK(content(dense({4, 6, -2})) == 2);
  CHECK(primitive_part(dense({4, 6, -2})) == dense({2, 3, -1}));
  CHECK(gcd(f, dense({-2, 1})) == dense({-2, 1}));
  CHECK(gcd(dense({1, 1}), dense({-1, 1})) == dense({1}));
  CHECK(exact_quotient(f, dense({-3, 1})) == dense({-2, 1}));
  CHECK_THROWS_AS(exact_quotient(f, dense({1, 1})), NotDivisible);
  DensePoly zero;
  CHECK(degree(zero) == -1);
}

TEST_CASE("pseudo remainder keeps a positive multiplier") {
  DensePoly f = dense({1, 0, 0, 1}), g = dense({1, -2});
  DensePoly r = pseudo_remainder(f, g);
  // 2^3 * f(1/2) = 9
  CHECK(r == dense({9}));
}

TEST_CASE("to_dense clears negative powers") {
  MultiLaurent s = s_var();
  CHECK(to_dense(s.inverse_monomial() + 2 + s) == dense({1, 2, 1}));
  CHECK_THROWS(to_dense(MultiLaurent::variable({"s", "t"}, "s")));
}

TEST_CASE("Sturm counts the roots of constructed products") {
  std::mt19937_64 rng(21);
  MultiLaurent s = s_var();
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> k(1, 7), root(-9, 9), mult(1, 3), extra(0, 2);
    std::set<int> roots;
    MultiLaurent p = MultiLaurent::constant(kS, 1);
    for (int i = k(rng); i > 0; --i) {
      int r = root(rng);
      if (r == 0) continue;
      roots.insert(r);
      p *= pow(s - r, static_cast<unsigned>(mult(rng)));
    }
    // Irreducible quadratics add no real roots; powers of s add only zero.
    for (int i = extra(rng); i > 0; --i) p *= s * s + (i + 1);
    p *= MultiLaurent::monomial(kS, {root(rng)});
    CHECK(count_real_roots(p) == roots.size());
  }
  CHECK(count_real_roots(s * s - 2) == 2);
  CHECK(count_real_roots(pow(s, 3) - 2) == 1);
  CHECK(count_real_roots(MultiLaurent::constant(kS, 7)) == 0);
  CHECK_THROWS(count_real_roots(MultiLaurent(kS)));
}

TEST_CASE("Sturm agrees with a sign-change scan on random polynomials") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    MultiLaurent p = random_laurent(rng, 6, 12);
    std::size_t rho = count_real_roots(p);
    CHECK(oracle::grid_sign_changes(p, 200) <= rho);
    CHECK(rho <= oracle::descartes_bound(p));
  }
}

TEST_CASE("root-term bound on 1000 seeded random polynomials") {
  std::mt19937_64 rng(20010611);
  for (int i = 0; i < 1000; ++i) {
    MultiLaurent p = random_laurent(rng);
    CHECK(p.term_count() <= 8);
    CHECK(p.max_exponents()[0] - p.min_exponents()[0] <= 30);
    RootTermBound b = check_root_term_bound(p);
    CHECK(b.holds);
    CHECK(b.rho + 2 <= 2 * b.tau);
  }
}

TEST_CASE("root-term bound on products of distinct linear factors") {
  std::mt19937_64 rng(99);
  for (int k = 1; k <= 6; ++k)
    for (int i = 0; i < 50; ++i) {
      MultiLaurent p = random_linear_product(rng, k);
      RootTermBound b = check_root_term_bound(p);
      CHECK(b.rho == static_cast<std::size_t>(k));
      CHECK(b.holds);
    }
}
