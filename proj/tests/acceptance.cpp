// Acceptance criteria 1-12: one PASS/FAIL line each, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lpq/alexander.hpp"
#include "lpq/swtheory.hpp"
#include "lpq/univariate.hpp"
#include "lpq/verification.hpp"
#include "oracles.hpp"

using namespace lpq;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXYZT{"x", "y", "z", "t"};

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) {
    out.ok = false;
    out.note << " [over time limit " << limit_s << " s]";
  }
  if (!out.ok) ++failures;
  std::printf("%s criterion %2d: %s (%.2f s)%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.note.str().c_str());
  std::fflush(stdout);
}

std::string pq(int p, int q) { return "p=" + std::to_string(p) + ",q=" + std::to_string(q); }

MultiLaurent xyz_minus_one() {
  return (MultiLaurent::variable(kXYZ, "x") - 1) * (MultiLaurent::variable(kXYZ, "y") - 1) *
         (MultiLaurent::variable(kXYZ, "z") - 1);
}

// The displayed polynomial, entered term by term.
MultiLaurent displayed_polynomial() {
  const int terms[][5] = {
      {0, 0, 0, 0, -4},  {0, 0, 0, 1, 1},   {0, 0, 0, -1, 1},  {1, 0, 0, 0, 1},    {-1, 0, 0, 0, 1},
      {0, 1, 0, 0, 1},   {0, -1, 0, 0, 1},  {0, 0, 1, 0, 1},   {0, 0, -1, 0, 1},   {1, 1, 0, 0, -1},
      {-1, -1, 0, 0, -1}, {0, 1, 1, 0, -1}, {0, -1, -1, 0, -1}, {1, 0, 1, 0, -1},  {-1, 0, -1, 0, -1},
      {1, 1, 1, 0, 1},   {-1, -1, -1, 0, 1}};
  std::vector<Term> ts;
  for (const auto& t : terms) ts.push_back({{t[0], t[1], t[2], t[3]}, t[4]});
  return MultiLaurent::from_terms(kXYZT, ts);
}

}  // namespace

int main() {
  criterion(1, "golden Borromean-plus-axis polynomial", 1.0, [](Outcome& o) {
    MultiLaurent d = multivariable_alexander(family_braid({1, 1}));
    o.expect(unit_equivalent(d, displayed_polynomial()), "differs from the displayed polynomial");
    o.note << " terms=" << d.term_count();
  });

  criterion(2, "linking matrix ((0,0,q),(0,0,1),(0,0,1)) for p<=6, q<=5", 1.0, [](Outcome& o) {
    for (int p = 0; p <= 6; ++p)
      for (int q = 1; q <= 5; ++q) {
        LinkingMatrix expected{{0, 0, 0, q}, {0, 0, 0, 1}, {0, 0, 0, 1}, {q, 1, 1, 0}};
        o.expect(linking_matrix(family_braid({p, q})) == expected, pq(p, q));
      }
  });

  criterion(3, "Torres formula for 0<=p<=4, 1<=q<=4", 30.0, [](Outcome& o) {
    AlexanderCache cache;
    for (int p = 0; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q) {
        TorresReport r = torres_check({p, q}, cache);
        o.expect(r.passed, pq(p, q));
        if (p == 1) {
          MultiLaurent rhs = (MultiLaurent::monomial(kXYZ, {q, 1, 1}) - 1) * xyz_minus_one();
          o.expect(unit_equivalent(r.right, rhs), "p=1 right side " + pq(p, q));
          o.expect(unit_equivalent(r.left, rhs), "p=1 left side " + pq(p, q));
        }
      }
  });

  criterion(4, "reduced polynomial equals the closed form for 1<=p<=5, 1<=q<=4", 30.0, [](Outcome& o) {
    AlexanderCache cache;
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= 4; ++q) {
        MultiLaurent r = reduced_poly({p, q}, cache);
        o.expect(unit_equivalent(r, closed_form_reduced({p, q})), "resultant form " + pq(p, q));
        o.expect(unit_equivalent(r, oracle::closed_form_by_lucas(p, q)), "cosine product " + pq(p, q));
        o.expect(r == reduced_poly_by_substitution({p, q}, cache), "substitution route " + pq(p, q));
      }
  });

  criterion(5, "periodic-link factorization for 1<=p<=5", 30.0, [](Outcome& o) {
    AlexanderCache cache;
    for (int p = 1; p <= 5; ++p) o.expect(periodic_check(p, cache).passed, "p=" + std::to_string(p));
    o.expect(unit_equivalent(cache.axis_free({1, 1}), xyz_minus_one()), "R_1 is the Borromean rings");
  });

  criterion(6, "graph-link formula for 1<=q<=6", 10.0, [](Outcome& o) {
    AlexanderCache cache;
    MultiLaurent x = MultiLaurent::variable(kXYZT, "x"), t = MultiLaurent::variable(kXYZT, "t");
    for (int q = 1; q <= 6; ++q) {
      o.expect(graph_link_check(q, cache).passed, "q=" + std::to_string(q));
      MultiLaurent geometric(kXYZT);
      for (int k = 0; k < q; ++k) geometric += pow(x * t, static_cast<unsigned>(k));
      o.expect(unit_equivalent(cache.family({0, q}), oracle::naive_mul((t - 1) * (t - 1), geometric)),
               "direct sum q=" + std::to_string(q));
    }
  });

  criterion(7, "tau = 6p+1 for q in {1,3,5}, 1<=p<=6, increasing in p", 30.0, [](Outcome& o) {
    AlexanderCache cache;
    for (int q : {1, 3, 5}) {
      std::size_t prev = 0;
      for (int p = 1; p <= 6; ++p) {
        std::size_t t = tau({p, q}, cache);
        std::size_t oracle_t = oracle::closed_form_by_lucas(p, q).term_count();
        o.expect(t == oracle_t, "oracle term count " + pq(p, q));
        o.expect(t == static_cast<std::size_t>(6 * p + 1),
                 pq(p, q) + " tau=" + std::to_string(t) + " expected " + std::to_string(6 * p + 1));
        o.expect(t > prev, "not increasing at " + pq(p, q));
        prev = t;
      }
    }
  });

  criterion(8, "rho >= 1 + 2 floor((p-1)/2) for 1<=p<=8, q in {1,2,3}", 30.0, [](Outcome& o) {
    AlexanderCache cache;
    for (int p = 1; p <= 8; ++p)
      for (int q = 1; q <= 3; ++q) {
        std::size_t r = rho({p, q}, cache);
        std::size_t bound = 1 + 2 * static_cast<std::size_t>((p - 1) / 2);
        o.expect(r >= bound, pq(p, q) + " rho=" + std::to_string(r));
        o.expect(oracle::grid_sign_changes(reduced_poly({p, q}, cache), 1000) <= r, "grid scan exceeds Sturm " + pq(p, q));
      }
  });

  criterion(9, "rho <= 2 tau - 2 on seeded random and constructed polynomials", 30.0, [](Outcome& o) {
    std::mt19937_64 rng(VerificationOptions{}.seed);
    for (int i = 0; i < 1000; ++i) {
      MultiLaurent p = random_laurent(rng, 8, 30);
      std::size_t r = count_real_roots(p);
      o.expect(r + 2 <= 2 * p.term_count(), "random #" + std::to_string(i));
      o.expect(r <= oracle::descartes_bound(p), "Descartes bound #" + std::to_string(i));
    }
    for (int k = 1; k <= 6; ++k)
      for (int i = 0; i < 50; ++i) {
        MultiLaurent p = random_linear_product(rng, k);
        std::size_t r = count_real_roots(p);
        o.expect(r == static_cast<std::size_t>(k), "constructed roots k=" + std::to_string(k));
        o.expect(r + 2 <= 2 * p.term_count(), "bound k=" + std::to_string(k));
      }
  });

  criterion(10, "span of basic classes: 2 for p=0 (q>=2), >=3 for p=1", 10.0, [](Outcome& o) {
    AlexanderCache cache;
    for (int q = 2; q <= 4; ++q) {
      auto d = basic_class_span({3, {0, q}}, cache);
      o.expect(d == 2u, "p=0 q=" + std::to_string(q));
      o.expect(oracle::float_support_rank(sw_polynomial({3, {0, q}}, cache)) == 2, "oracle p=0 q=" + std::to_string(q));
    }
    for (int q = 1; q <= 4; ++q) {
      auto d = basic_class_span({3, {1, q}}, cache);
      o.expect(d && *d >= 3, "p=1 q=" + std::to_string(q));
      o.expect(oracle::float_support_rank(sw_polynomial({3, {1, q}}, cache)) >= 3, "oracle p=1 q=" + std::to_string(q));
    }
    auto d01 = basic_class_span({3, {0, 1}}, cache);
    o.expect(d01 && *d01 <= 2, "p=0 q=1");
    o.note << " d(p=0,q=1)=" << (d01 ? std::to_string(*d01) : "undefined");
  });

  criterion(11, "pipeline self-consistency", 60.0, [](Outcome& o) {
    for (int p = 0; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q) {
        BraidWord b = family_braid({p, q});
        o.expect(minor_independent(b), "minor choice " + pq(p, q));
        ClosureComponents c = closure_components(b);
        PolyMatrix m = alexander_matrix(b, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, kXYZT);
        o.expect(fox_fundamental_identity_holds(m, c.label, kXYZT), "Fox identity " + pq(p, q));
        o.expect(inversion_symmetric(multivariable_alexander(b)), "inversion " + pq(p, q));
      }
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> gen(1, 3);
    std::bernoulli_distribution neg(0.5);
    for (int i = 0; i < 20; ++i) {
      std::vector<int> letters;
      for (int k = 0; k < 8; ++k) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
      BraidWord b(4, letters);
      for (int k = 1; k <= 3; ++k) o.expect(conjugation_invariant(b, k), "conjugation " + b.to_string());
      o.expect(stabilization_invariant(b, 1) && stabilization_invariant(b, -1), "Markov II " + b.to_string());
      o.expect(inversion_symmetric(multivariable_alexander(b)), "inversion " + b.to_string());
    }
    for (int k = 1; k <= 3; ++k) o.expect(conjugation_invariant(family_braid({1, 1}), k), "conjugation L_{1,1}");
    o.expect(multivariable_alexander(BraidWord::identity(2)).is_zero(), "split unlink");
    o.expect(multivariable_alexander(BraidWord(4, borromean_braid().letters())).is_zero(), "split Borromean");
  });

  criterion(12, "known values: Hopf, trefoil, Borromean", 1.0, [](Outcome& o) {
    MultiLaurent t = MultiLaurent::variable({"t"}, "t");
    o.expect(multivariable_alexander(BraidWord::parse("1 1")).is_one(), "Hopf");
    o.expect(unit_equivalent(multivariable_alexander(BraidWord::parse("1 1 1")), t * t - t + 1), "trefoil");
    o.expect(unit_equivalent(multivariable_alexander(borromean_braid()), xyz_minus_one()), "Borromean");
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
