#include <doctest.h>

#include <random>

#include "lpq/alexander.hpp"
#include "lpq/verification.hpp"
#include "oracles.hpp"

using namespace lpq;

namespace {

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXYZT{"x", "y", "z", "t"};

MultiLaurent v(const std::vector<std::string>& vs, const char* n) { return MultiLaurent::variable(vs, n); }

BraidWord random_braid(std::mt19937_64& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(strands, letters);
}

std::vector<Exponents> identity_images(int mu) {
  std::vector<Exponents> images;
  for (int c = 0; c < mu; ++c) {
    Exponents e(static_cast<std::size_t>(mu), 0);
    e[static_cast<std::size_t>(c)] = 1;
    images.push_back(e);
  }
  return images;
}

}  // namespace

TEST_CASE("component names") {
  CHECK(component_names(1) == kT);
  CHECK(component_names(3) == kXYZ);
  CHECK(component_names(4) == kXYZT);
  CHECK(component_names(5) == std::vector<std::string>{"t1", "t2", "t3", "t4", "t5"});
}

TEST_CASE("Fox derivatives by hand") {
  // d/dx1 (x1 x2 x1^-1) = 1 - x1 x2 x1^-1 -> 1 - t2 after abelianization.
  const std::vector<std::string> xy{"x", "y"};
  FreeWord w = FreeWord::generator(1) * FreeWord::generator(2) * FreeWord::generator(1, -1);
  CHECK(fox_derivative(w, 1, {0, 1}, xy) == 1 - v(xy, "y"));
  CHECK(fox_derivative(w, 2, {0, 1}, xy) == v(xy, "x"));
  CHECK(fox_derivative(FreeWord(), 1, {0, 1}, xy).is_zero());
}

TEST_CASE("trefoil matrix by hand") {
  // Burau matrix of sigma_1 is [[1 - t, t], [1, 0]]; its cube minus I.
  BraidWord b = BraidWord::parse("1 1 1");
  PolyMatrix m = alexander_matrix(b, identity_images(1), kT);
  MultiLaurent t = v(kT, "t");
  CHECK(m[0][0] == -t + t * t - t * t * t);
  CHECK(m[0][1] == t - t * t + t * t * t);
  CHECK(m[1][0] == 1 - t + t * t);
  CHECK(m[1][1] == t - t * t - 1);
}

TEST_CASE("chain-rule and word-based Alexander matrices agree") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 60; ++i) {
    BraidWord b = random_braid(rng, 2 + i % 4, 3 + i % 9);
    LinkPresentation pres = presentation_from_braid(b);
    std::vector<std::string> vars = component_names(pres.components);
    CHECK(alexander_matrix(b, identity_images(pres.components), vars) == alexander_matrix(pres, vars));
  }
  for (int p = 0; p <= 2; ++p)
    for (int q = 1; q <= 3; ++q) {
      BraidWord b = family_braid({p, q});
      CHECK(alexander_matrix(b, identity_images(4), kXYZT) == alexander_matrix(presentation_from_braid(b), kXYZT));
    }
}

TEST_CASE("Fox fundamental identity") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    BraidWord b = random_braid(rng, 2 + i % 4, 10);
    ClosureComponents c = closure_components(b);
    std::vector<std::string> vars = component_names(c.count);
    CHECK(fox_fundamental_identity_holds(alexander_matrix(b, identity_images(c.count), vars), c.label, vars));
  }
}

TEST_CASE("known values") {
  MultiLaurent t = v(kT, "t");
  CHECK(multivariable_alexander(BraidWord::parse("1 1")).is_one());
  CHECK(multivariable_alexander(BraidWord::parse("1 1 1")) == t * t - t + 1);
  CHECK(multivariable_alexander(BraidWord::parse("1 -2 1 -2")) == t * t - 3 * t + 1);  // figure eight
  CHECK(multivariable_alexander(BraidWord::parse("1 1 1 1 1")) == canonical(pow(t, 4) - pow(t, 3) + t * t - t + 1).poly);
  MultiLaurent borr = (v(kXYZ, "x") - 1) * (v(kXYZ, "y") - 1) * (v(kXYZ, "z") - 1);
  CHECK(unit_equivalent(multivariable_alexander(borromean_braid()), borr));
  // T(2,4): Delta = 1 + xy.
  const std::vector<std::string> xy{"x", "y"};
  CHECK(unit_equivalent(multivariable_alexander(BraidWord::parse("1 1 1 1")), v(xy, "x") * v(xy, "y") + 1));
  CHECK(multivariable_alexander(BraidWord::parse(""), {}).is_one());
}

TEST_CASE("borromean rings plus axis") {
  MultiLaurent d = multivariable_alexander(family_braid({1, 1}));
  CHECK(unit_equivalent(d, borromean_axis_polynomial()));
  CHECK(d.term_count() == 17);
}

TEST_CASE("split links have zero polynomial") {
  CHECK(multivariable_alexander(BraidWord::identity(2)).is_zero());
  CHECK(multivariable_alexander(BraidWord::identity(3)).is_zero());
  CHECK(multivariable_alexander(BraidWord(4, {1, 1, 1})).is_zero());
  CHECK(multivariable_alexander(BraidWord(4, borromean_braid().letters())).is_zero());
  CHECK(multivariable_alexander(BraidWord(5, {1, 1, 3, 3})).is_zero());
}

TEST_CASE("every minor gives the same polynomial") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) CHECK(minor_independent(family_braid({p, q})));
  std::mt19937_64 rng(55);
  for (int i = 0; i < 30; ++i) CHECK(minor_independent(random_braid(rng, 2 + i % 3, 8)));
}

TEST_CASE("conjugation and stabilization invariance") {
  std::mt19937_64 rng(57);
  for (int i = 0; i < 30; ++i) {
    BraidWord b = random_braid(rng, 2 + i % 3, 7);
    for (int k = 1; k < b.strands(); ++k) {
      CHECK(conjugation_invariant(b, k));
      CHECK(conjugation_invariant(b, -k));
    }
    CHECK(stabilization_invariant(b, 1));
    CHECK(stabilization_invariant(b, -1));
  }
  CHECK(conjugation_invariant(family_braid({1, 2}), 3));
  CHECK(stabilization_invariant(family_braid({1, 1}), -1));
  // Knots need no component matching.
  MultiLaurent tref = multivariable_alexander(BraidWord::parse("1 1 1"));
  CHECK(multivariable_alexander(BraidWord(3, {1, 1, 1, 2})) == tref);
  CHECK(multivariable_alexander(BraidWord(3, {2, 2, 2, 1})) == tref);
  CHECK(multivariable_alexander(BraidWord(3, {1, 2, 2, 2})) == tref);
}

TEST_CASE("inversion symmetry") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 40; ++i) CHECK(inversion_symmetric(multivariable_alexander(random_braid(rng, 2 + i % 4, 9))));
  for (int p = 0; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) CHECK(inversion_symmetric(multivariable_alexander(family_braid({p, q}))));
}

TEST_CASE("specializing the matrix equals substituting into Delta") {
  std::mt19937_64 rng(61);
  const std::vector<std::string> s{"s"};
  std::uniform_int_distribution<int> power(-2, 3);
  int tested = 0;
  for (int i = 0; tested < 40 && i < 400; ++i) {
    BraidWord b = random_braid(rng, 3 + i % 2, 8);
    ClosureComponents c = closure_components(b);
    if (c.count < 2) continue;
    std::vector<Exponents> images;
    Assignment a;
    std::vector<std::string> names = component_names(c.count);
    bool nontrivial = false;
    for (int k = 0; k < c.count; ++k) {
      int e = power(rng);
      nontrivial = nontrivial || e != 0;
      images.push_back({e});
      a[names[static_cast<std::size_t>(k)]] = {e};
    }
    if (!nontrivial) continue;
    ++tested;
    MultiLaurent full = multivariable_alexander(b);
    CHECK(specialized_alexander(b, images, s) == canonical(substitute(full, a, s)).poly);
  }
  CHECK(tested == 40);
}

TEST_CASE("Torres formula for the family") {
  AlexanderCache cache;
  for (int p = 0; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) CHECK(torres_check({p, q}, cache).passed);
  for (int q = 1; q <= 3; ++q) {
    MultiLaurent rhs = (MultiLaurent::monomial(kXYZ, {q, 1, 1}) - 1) * (v(kXYZ, "x") - 1) *
                       (v(kXYZ, "y") - 1) * (v(kXYZ, "z") - 1);
    CHECK(unit_equivalent(at_axis_one(cache.family({1, q})), rhs));
  }
  CHECK(unit_equivalent(cache.axis_free({1, 1}), (v(kXYZ, "x") - 1) * (v(kXYZ, "y") - 1) * (v(kXYZ, "z") - 1)));
}

TEST_CASE("periodic factorization") {
  AlexanderCache cache;
  for (int p = 1; p <= 4; ++p) CHECK(periodic_check(p, cache).passed);
  CHECK_THROWS(periodic_check(0, cache));
}

TEST_CASE("cache returns stable references") {
  AlexanderCache cache;
  const MultiLaurent& a = cache.family({1, 2});
  const MultiLaurent& b = cache.family({1, 2});
  CHECK(&a == &b);
  CHECK(a == multivariable_alexander(family_braid({1, 2})));
}
