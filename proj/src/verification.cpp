#include "lpq/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "lpq/alexander.hpp"
#include "lpq/swtheory.hpp"
#include "lpq/univariate.hpp"

namespace lpq {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

MultiLaurent borromean_axis_polynomial() {
  const std::vector<std::string> v{"x", "y", "z", "t"};
  auto sym = [&](Exponents e) {
    Exponents neg = e;
    for (auto& a : neg) a = -a;
    return MultiLaurent::monomial(v, e) + MultiLaurent::monomial(v, neg);
  };
  return MultiLaurent::constant(v, -4) + sym({0, 0, 0, 1}) + sym({1, 0, 0, 0}) + sym({0, 1, 0, 0}) +
         sym({0, 0, 1, 0}) - sym({1, 1, 0, 0}) - sym({0, 1, 1, 0}) - sym({1, 0, 1, 0}) + sym({1, 1, 1, 0});
}

MultiLaurent random_laurent(std::mt19937_64& rng, int max_terms, int max_span) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> exp(-max_span / 2, max_span - max_span / 2);
  std::uniform_int_distribution<int> coeff(1, 20);
  std::bernoulli_distribution negative(0.5);
  std::vector<Term> terms;
  std::set<int> used;
  const int k = count(rng);
  while (static_cast<int>(used.size()) < k) {
    int e = exp(rng);
    if (!used.insert(e).second) continue;
    int c = coeff(rng);
    terms.push_back({{e}, negative(rng) ? -c : c});
  }
  return MultiLaurent::from_terms({"s"}, std::move(terms));
}

MultiLaurent random_linear_product(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> den(1, 4), num(1, 12);
  std::bernoulli_distribution negative(0.5);
  std::set<std::pair<int, int>> roots;
  MultiLaurent prod = MultiLaurent::constant({"s"}, 1);
  const MultiLaurent s = MultiLaurent::variable({"s"}, "s");
  while (static_cast<int>(roots.size()) < k) {
    int a = den(rng), b = num(rng);
    if (negative(rng)) b = -b;
    int g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (!roots.insert({a, b}).second) continue;
    prod *= s * a - b;
  }
  return prod;
}

namespace {

// names[c] for every component c of b, given names for the components of
// `ref` and a map from strands of b (top positions) to strands of ref.
std::vector<std::string> matched_names(const BraidWord& b, const BraidWord& ref,
                                       const std::vector<int>& to_ref) {
  ClosureComponents cb = closure_components(b), cr = closure_components(ref);
  std::vector<std::string> ref_names = component_names(cr.count);
  std::vector<std::string> names(static_cast<std::size_t>(cb.count));
  for (std::size_t i = 0; i < to_ref.size(); ++i)
    names[static_cast<std::size_t>(cb.label[i])] =
        ref_names[static_cast<std::size_t>(cr.label[static_cast<std::size_t>(to_ref[i])])];
  return names;
}

bool same_after_matching(const BraidWord& b, const BraidWord& ref, const std::vector<int>& to_ref) {
  ClosureComponents cb = closure_components(b), cr = closure_components(ref);
  if (cb.count != cr.count) return false;
  MultiLaurent expected = multivariable_alexander(ref);
  AlexanderOptions opts;
  opts.names = matched_names(b, ref, to_ref);
  MultiLaurent got = reorder_vars(multivariable_alexander(b, opts), expected.vars());
  return unit_equivalent(got, expected);
}

}  // namespace

bool conjugation_invariant(const BraidWord& b, int k) {
  BraidWord s(b.strands(), {k});
  BraidWord c = s.compose(b).compose(s.inverse());
  // A strand entering c at position i enters b at position perm(sigma_k)(i).
  return same_after_matching(c, b, permutation(s));
}

bool stabilization_invariant(const BraidWord& b, int sign) {
  const int n = b.strands();
  std::vector<int> letters = b.letters();
  letters.push_back(sign > 0 ? n : -n);
  BraidWord st(n + 1, letters);
  std::vector<int> to_ref(static_cast<std::size_t>(n));
  std::iota(to_ref.begin(), to_ref.end(), 0);
  // The extra strand joins an existing component, so the first n strands
  // fix every name.
  return same_after_matching(st, b, to_ref);
}

bool minor_independent(const BraidWord& b) {
  ClosureComponents comp = closure_components(b);
  std::vector<std::string> vars = component_names(comp.count);
  std::vector<Exponents> images;
  for (int c = 0; c < comp.count; ++c) {
    Exponents e(vars.size(), 0);
    e[static_cast<std::size_t>(c)] = 1;
    images.push_back(e);
  }
  PolyMatrix m = alexander_matrix(b, images, vars);
  std::optional<MultiLaurent> first;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::optional<MultiLaurent> divisor;
      if (comp.count >= 2)
        divisor = MultiLaurent::variable(vars, vars[static_cast<std::size_t>(comp.label[j])]) - 1;
      MultiLaurent d = canonical(alexander_from_minor(m, i, j, divisor)).poly;
      if (!first)
        first = d;
      else if (d != *first)
        return false;
    }
  return true;
}

bool inversion_symmetric(const MultiLaurent& delta) {
  Assignment inv;
  for (std::size_t i = 0; i < delta.nvars(); ++i) {
    Exponents e(delta.nvars(), 0);
    e[i] = -1;
    inv[delta.vars()[i]] = e;
  }
  return unit_equivalent(substitute(delta, inv, delta.vars()), delta);
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerificationReport& r) : report_(r) {}

  template <class Fn>
  void run(std::string name, std::string params, Fn fn) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.params = std::move(params);
    auto start = std::chrono::steady_clock::now();
    try {
      rec.passed = fn(rec.detail);
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.detail = std::string("error: ") + e.what();
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(rec));
  }

 private:
  VerificationReport& report_;
};

std::string pq(int p, int q) { return "p=" + std::to_string(p) + " q=" + std::to_string(q); }

// Fills the cache for every (p, q) in the grid concurrently; results do not
// depend on the order in which they land.
void prefill(AlexanderCache& cache, int pmax, int qmax) {
  std::vector<LinkFamilySpec> specs;
  for (int p = 0; p <= pmax; ++p)
    for (int q = 1; q <= qmax; ++q) specs.push_back({p, q});
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < std::min(workers, specs.size()); ++w)
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i; (i = next++) < specs.size();) {
        cache.family(specs[i]);
        cache.axis_free(specs[i]);
      }
    }));
  for (auto& j : jobs) j.get();
}

}  // namespace

VerificationReport run_verification(const VerificationOptions& opts) {
  if (opts.pmax < 1 || opts.qmax < 1) throw std::invalid_argument("pmax and qmax must be >= 1");
  VerificationReport report;
  Recorder rec(report);
  AlexanderCache cache;
  const int pmax = opts.pmax, qmax = opts.qmax;
  prefill(cache, pmax, qmax);

  rec.run("golden_poly", "p=1 q=1", [&](std::string& detail) {
    const MultiLaurent& d = cache.family({1, 1});
    detail = std::to_string(d.term_count()) + " terms";
    return unit_equivalent(d, borromean_axis_polynomial());
  });

  for (int p = 0; p <= pmax; ++p)
    for (int q = 1; q <= qmax; ++q)
      rec.run("linking_matrix", pq(p, q), [&](std::string&) {
        return linking_matrix(family_braid({p, q})) == expected_family_linking(q);
      });

  for (int p = 0; p <= pmax; ++p)
    for (int q = 1; q <= qmax; ++q)
      rec.run("torres", pq(p, q), [&](std::string&) {
        bool ok = torres_check({p, q}, cache).passed;
        if (ok && p == 1) {
          const std::vector<std::string> xyz{"x", "y", "z"};
          auto v = [&](const char* n) { return MultiLaurent::variable(xyz, n); };
          MultiLaurent rhs = (MultiLaurent::monomial(xyz, {q, 1, 1}) - 1) * (v("x") - 1) *
                             (v("y") - 1) * (v("z") - 1);
          ok = unit_equivalent(at_axis_one(cache.family({p, q})), rhs);
        }
        return ok;
      });

  for (int p = 1; p <= pmax; ++p)
    for (int q = 1; q <= qmax; ++q)
      rec.run("redpol", pq(p, q), [&](std::string& detail) {
        MultiLaurent r = reduced_poly({p, q}, cache);
        detail = std::to_string(r.term_count()) + " terms";
        return unit_equivalent(r, closed_form_reduced({p, q})) &&
               r == reduced_poly_by_substitution({p, q}, cache);
      });

  for (int p = 1; p <= pmax; ++p)
    rec.run("periodic", "p=" + std::to_string(p),
            [&](std::string&) { return periodic_check(p, cache).passed; });

  for (int q = 1; q <= qmax; ++q)
    rec.run("graph_link", "q=" + std::to_string(q),
            [&](std::string&) { return graph_link_check(q, cache).passed; });

  for (int q = 1; q <= qmax; q += 2)
    for (int p = 1; p <= pmax; ++p)
      rec.run("tau_formula", pq(p, q), [&](std::string& detail) {
        std::size_t t = tau({p, q}, cache);
        detail = "tau=" + std::to_string(t) + " expected " + std::to_string(6 * p + 1);
        return t == static_cast<std::size_t>(6 * p + 1);
      });

  for (int q = 1; q <= qmax; ++q)
    for (int p = 1; p <= 2 * pmax; ++p)
      rec.run("fineq", pq(p, q), [&](std::string& detail) {
        std::size_t r = rho({p, q}, cache);
        detail = "rho=" + std::to_string(r) + " bound " + std::to_string(fineq_bound(p));
        return r >= fineq_bound(p);
      });

  rec.run("root_term_bound", "seed=" + std::to_string(opts.seed), [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed);
    std::size_t worst = 0;
    for (int i = 0; i < opts.random_trials; ++i) {
      RootTermBound b = check_root_term_bound(random_laurent(rng));
      if (!b.holds) return false;
      worst = std::max(worst, b.rho);
    }
    for (int k = 1; k <= 6; ++k)
      for (int i = 0; i < 20; ++i)
        if (!check_root_term_bound(random_linear_product(rng, k)).holds) return false;
    detail = "max rho " + std::to_string(worst);
    return true;
  });

  for (int q = 1; q <= qmax; ++q) {
    rec.run("basic_class_span", "n=3 " + pq(0, q), [&](std::string& detail) {
      auto d = basic_class_span({3, {0, q}}, cache);
      detail = d ? "d=" + std::to_string(*d) : "d undefined";
      return d && (q == 1 ? *d <= 2 : *d == 2);
    });
    rec.run("basic_class_span", "n=3 " + pq(1, q), [&](std::string& detail) {
      auto d = basic_class_span({3, {1, q}}, cache);
      detail = d ? "d=" + std::to_string(*d) : "d undefined";
      return d && *d >= 3;
    });
  }

  for (int p = 0; p <= std::min(pmax, 2); ++p)
    for (int q = 1; q <= std::min(qmax, 2); ++q)
      rec.run("minor_independence", pq(p, q),
              [&](std::string&) { return minor_independent(family_braid({p, q})); });

  rec.run("fox_identity", "p<=" + std::to_string(pmax) + " q<=" + std::to_string(qmax), [&](std::string&) {
    for (int p = 0; p <= pmax; ++p)
      for (int q = 1; q <= qmax; ++q) {
        BraidWord b = family_braid({p, q});
        const std::vector<std::string> v{"x", "y", "z", "t"};
        PolyMatrix m = alexander_matrix(b, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, v);
        if (!fox_fundamental_identity_holds(m, closure_components(b).label, v)) return false;
      }
    return true;
  });

  rec.run("markov_invariance", "trefoil, borromean, L_{1,1}", [&](std::string&) {
    std::vector<BraidWord> braids{BraidWord::parse("1 1 1"), borromean_braid(), family_braid({1, 1})};
    for (const auto& b : braids) {
      for (int k = 1; k < b.strands(); ++k)
        if (!conjugation_invariant(b, k)) return false;
      if (!stabilization_invariant(b, 1) || !stabilization_invariant(b, -1)) return false;
    }
    return true;
  });

  rec.run("split_link_zero", "unlink, borromean + unknot", [&](std::string&) {
    BraidWord borr = borromean_braid();
    return multivariable_alexander(BraidWord::identity(2)).is_zero() &&
           multivariable_alexander(BraidWord(4, borr.letters())).is_zero();
  });

  rec.run("inversion_symmetry", "p<=" + std::to_string(pmax) + " q<=" + std::to_string(qmax), [&](std::string&) {
    for (int p = 0; p <= pmax; ++p)
      for (int q = 1; q <= qmax; ++q)
        if (!inversion_symmetric(cache.family({p, q}))) return false;
    return true;
  });

  rec.run("known_values", "hopf, trefoil, borromean", [&](std::string&) {
    const std::vector<std::string> t{"t"}, xyz{"x", "y", "z"};
    auto v = [&](const char* n) { return MultiLaurent::variable(xyz, n); };
    MultiLaurent tt = MultiLaurent::variable(t, "t");
    return multivariable_alexander(BraidWord::parse("1 1")).is_one() &&
           unit_equivalent(multivariable_alexander(BraidWord::parse("1 1 1")), tt * tt - tt + 1) &&
           unit_equivalent(multivariable_alexander(borromean_braid()), (v("x") - 1) * (v("y") - 1) * (v("z") - 1));
  });

  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["passed"] = report.passed();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["params"] = c.params;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string format_table(const VerificationReport& report) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (!c.passed) ++failed;
    os << std::left << std::setw(6) << (c.passed ? "PASS" : "FAIL") << std::setw(22) << c.name
       << std::setw(30) << c.params << std::right << std::setw(10) << std::fixed << std::setprecision(1)
       << c.elapsed_ms << " ms";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  os << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace lpq
