#include "lpq/swtheory.hpp"

#include <stdexcept>

#include "lpq/linalg.hpp"
#include "lpq/univariate.hpp"

namespace lpq {

namespace {

const std::vector<std::string> kXYZT{"x", "y", "z", "t"};
const std::vector<std::string> kS{"s"};

MultiLaurent s_power(int k) { return MultiLaurent::monomial(kS, {k}); }

}  // namespace

void validate(const SurgerySpec& spec) {
  if (spec.n < 3)
    throw std::invalid_argument("E(L_{p,q}) is only defined here for n >= 3");
  if (spec.family.p < 0 || spec.family.q < 1)
    throw std::invalid_argument("family requires p >= 0 and q >= 1");
}

MultiLaurent square_variables(const MultiLaurent& p) {
  Assignment a;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    Exponents e(p.nvars(), 0);
    e[i] = 2;
    a[p.vars()[i]] = e;
  }
  return substitute(p, a, p.vars());
}

MultiLaurent sw_polynomial(const SurgerySpec& spec, AlexanderCache& cache) {
  validate(spec);
  MultiLaurent sym = symmetrize(square_variables(cache.family(spec.family)));
  MultiLaurent t = MultiLaurent::variable(kXYZT, "t");
  return pow(t - t.inverse_monomial(), static_cast<unsigned>(spec.n - 3)) * sym;
}

MultiLaurent sw_polynomial(const SurgerySpec& spec) {
  AlexanderCache cache;
  return sw_polynomial(spec, cache);
}

std::size_t basic_class_count(const SurgerySpec& spec, AlexanderCache& cache) {
  return sw_polynomial(spec, cache).term_count();
}

std::optional<std::size_t> basic_class_span(const SurgerySpec& spec, AlexanderCache& cache) {
  MultiLaurent sw = sw_polynomial(spec, cache);
  if (sw.is_zero()) return std::nullopt;
  return support_rank(sw);
}

MultiLaurent reduced_poly(const LinkFamilySpec& spec, AlexanderCache& cache) {
  return cache.reduced(spec);
}

MultiLaurent reduced_poly_by_substitution(const LinkFamilySpec& spec, AlexanderCache& cache) {
  Assignment a{{"x", {1}}, {"y", {1}}, {"z", {1}}, {"t", {0}}};
  return canonical(substitute(cache.family(spec), a, kS)).poly;
}

MultiLaurent closed_form_reduced(const LinkFamilySpec& spec) {
  if (spec.p < 1 || spec.q < 1) throw std::invalid_argument("closed form needs p, q >= 1");
  const MultiLaurent s = s_power(1);
  const MultiLaurent cube = pow(s - 1, 3);
  // Y = (1 - s^-3)(s - 1)^3.  Each bracket is Y - (1 - w^j)(1 - w^-j), which
  // is w^-j * g(w^j) with g(u) = u^2 + (Y - 2) u + 1, and g(1) = Y.
  const MultiLaurent y = (1 - s_power(-3)) * cube;
  const std::vector<std::string> su{"s", "u"};
  Assignment lift{{"s", {1, 0}}};
  const MultiLaurent u = MultiLaurent::variable(su, "u");
  MultiLaurent g = u * u + substitute(y - 2, lift, su) * u + 1;
  MultiLaurent brackets = exact_div(roots_of_unity_product(g, "u", spec.p), y);
  return canonical((s_power(spec.q + 2) - 1) * cube * brackets).poly;
}

GraphLinkReport graph_link_check(int q, AlexanderCache& cache) {
  if (q < 1) throw std::invalid_argument("graph_link_check requires q >= 1");
  GraphLinkReport r;
  r.computed = cache.family({0, q});
  const MultiLaurent x = MultiLaurent::variable(kXYZT, "x");
  const MultiLaurent t = MultiLaurent::variable(kXYZT, "t");
  MultiLaurent cable = exact_div(pow(x * t, static_cast<unsigned>(q)) - 1, x * t - 1);
  r.expected = canonical(pow(t - 1, 2) * cable).poly;
  r.passed = unit_equivalent(r.computed, r.expected);
  return r;
}

std::size_t tau(const LinkFamilySpec& spec, AlexanderCache& cache) {
  return reduced_poly(spec, cache).term_count();
}

std::size_t rho(const LinkFamilySpec& spec, AlexanderCache& cache) {
  return count_real_roots(reduced_poly(spec, cache));
}

std::size_t fineq_bound(int p) { return 1 + 2 * static_cast<std::size_t>((p - 1) / 2); }

bool fineq_check(const LinkFamilySpec& spec, AlexanderCache& cache) {
  if (spec.p < 1) throw std::invalid_argument("fineq_check requires p >= 1");
  return rho(spec, cache) >= fineq_bound(spec.p);
}

std::optional<bool> tau_formula_check(const LinkFamilySpec& spec, AlexanderCache& cache) {
  if (spec.p < 1) throw std::invalid_argument("tau_formula_check requires p >= 1");
  if (spec.q % 2 == 0) return std::nullopt;
  return tau(spec, cache) == static_cast<std::size_t>(6 * spec.p + 1);
}

TauTildeReport tau_tilde(const SurgerySpec& spec, AlexanderCache& cache) {
  validate(spec);
  TauTildeReport r;
  const std::vector<std::string> st{"s", "t"};
  Assignment diag{{"x", {1, 0}}, {"y", {1, 0}}, {"z", {1, 0}}, {"t", {0, 1}}};
  MultiLaurent two_var = substitute(sw_polynomial(spec, cache), diag, st);
  CoefficientSplit by_s = split_by_variable(two_var, "s");
  for (const auto& c : by_s.coeffs)
    if (!c.is_zero()) ++r.tau_tilde;

  MultiLaurent reduced = reduced_poly(spec.family, cache);
  r.tau = reduced.term_count();
  MultiLaurent sym = symmetrize(square_variables(cache.family(spec.family)));
  Assignment at_one{{"x", {1}}, {"y", {1}}, {"z", {1}}, {"t", {0}}};
  MultiLaurent a_at_one = substitute(sym, at_one, kS);
  MultiLaurent reduced_squared = substitute(reduced, {{"s", {2}}}, kS);
  r.coefficients_recovered = unit_equivalent(a_at_one, reduced_squared);
  return r;
}

InvariantReport invariant_report(const SurgerySpec& spec, AlexanderCache& cache) {
  validate(spec);
  InvariantReport r;
  r.spec = spec;
  r.delta = cache.family(spec.family);
  r.sw = sw_polynomial(spec, cache);
  r.beta = r.sw.term_count();
  if (!r.sw.is_zero()) r.d = support_rank(r.sw);
  r.reduced = reduced_poly(spec.family, cache);
  const auto& fam = spec.family;
  r.checks.emplace_back("sw_symmetric", has_symmetric_support(r.sw));
  r.checks.emplace_back("torres", torres_check(fam, cache).passed);
  if (fam.p == 0) r.checks.emplace_back("graph_link", graph_link_check(fam.q, cache).passed);
  if (fam.p >= 1) {
    r.tau = r.reduced.term_count();
    r.rho = count_real_roots(r.reduced);
    TauTildeReport tt = tau_tilde(spec, cache);
    r.tau_tilde = tt.tau_tilde;
    r.checks.emplace_back("redpol", unit_equivalent(r.reduced, closed_form_reduced(fam)));
    r.checks.emplace_back("fineq", *r.rho >= fineq_bound(fam.p));
    r.checks.emplace_back("root_term_bound", *r.rho + 2 <= 2 * *r.tau);
    r.checks.emplace_back("tau_tilde", tt.tau_tilde >= tt.tau && tt.coefficients_recovered);
    if (auto tf = tau_formula_check(fam, cache)) r.checks.emplace_back("tau_formula", *tf);
  }
  if (spec.n == 3) r.checks.emplace_back("beta_equals_delta_terms", r.beta == r.delta.term_count());
  return r;
}

nlohmann::ordered_json to_json(const InvariantReport& report, bool with_polynomials) {
  nlohmann::ordered_json j;
  auto opt = [](const std::optional<std::size_t>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  j["p"] = report.spec.family.p;
  j["q"] = report.spec.family.q;
  j["n"] = report.spec.n;
  j["beta"] = report.beta;
  j["d"] = opt(report.d);
  j["tau"] = opt(report.tau);
  j["rho"] = opt(report.rho);
  j["tau_tilde"] = opt(report.tau_tilde);
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : report.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
  if (with_polynomials) {
    j["alexander"] = lpq::to_json(report.delta);
    j["sw"] = lpq::to_json(report.sw);
    j["reduced"] = lpq::to_json(report.reduced);
  }
  return j;
}

DistinguishReport distinguish(const SurgerySpec& a, const SurgerySpec& b, AlexanderCache& cache) {
  if (a.n != b.n || a.family.q != b.family.q)
    throw std::invalid_argument("distinguish compares members with equal n and q");
  DistinguishReport r;
  r.a = invariant_report(a, cache);
  r.b = invariant_report(b, cache);
  if (r.a.d != r.b.d) r.differing.push_back("d");
  if (r.a.beta != r.b.beta) r.differing.push_back("beta");
  if (r.a.tau && r.b.tau && r.a.tau != r.b.tau) r.differing.push_back("tau");
  // tau alone separates the reduced polynomials, which are only specializations;
  // d and beta are smooth invariants of the manifolds.
  r.distinguished = r.a.d != r.b.d || r.a.beta != r.b.beta;
  r.verdict = r.distinguished ? "pairs (E(n),T) distinguished" : "inconclusive";
  return r;
}

}  // namespace lpq
