#include "lpq/alexander.hpp"

#include <algorithm>

namespace lpq {

LinkPresentation presentation_from_braid(const BraidWord& b) {
  LinkPresentation pres;
  pres.generators = b.strands();
  std::vector<FreeWord> images = artin_images(b);
  for (int i = 0; i < pres.generators; ++i)
    pres.relators.push_back(images[static_cast<std::size_t>(i)] * FreeWord::generator(i + 1, -1));
  ClosureComponents comp = closure_components(b);
  pres.abelianization = comp.label;
  pres.components = comp.count;
  return pres;
}

std::vector<std::string> component_names(int components) {
  switch (components) {
    case 1:
      return {"t"};
    case 2:
      return {"x", "y"};
    case 3:
      return {"x", "y", "z"};
    case 4:
      return {"x", "y", "z", "t"};
    default: {
      std::vector<std::string> names;
      for (int i = 1; i <= components; ++i) names.push_back("t" + std::to_string(i));
      return names;
    }
  }
}

MultiLaurent fox_derivative(const FreeWord& w, int gen, const std::vector<int>& abelianization,
                            const std::vector<std::string>& vars) {
  std::map<Exponents, Integer> acc;
  Exponents prefix(vars.size(), 0);
  for (const auto& l : w.letters()) {
    if (l.gen < 1 || static_cast<std::size_t>(l.gen) > abelianization.size())
      throw std::out_of_range("generator index out of range in Fox derivative");
    std::size_t var = static_cast<std::size_t>(abelianization[static_cast<std::size_t>(l.gen - 1)]);
    if (l.exp > 0) {
      if (l.gen == gen) acc[prefix] += 1;
      prefix[var] += 1;
    } else {
      prefix[var] -= 1;
      if (l.gen == gen) acc[prefix] -= 1;
    }
  }
  std::vector<Term> terms;
  for (auto& [e, c] : acc) terms.push_back({e, std::move(c)});
  return MultiLaurent::from_terms(vars, std::move(terms));
}

PolyMatrix alexander_matrix(const LinkPresentation& pres, const std::vector<std::string>& vars) {
  PolyMatrix m;
  for (const auto& r : pres.relators) {
    std::vector<MultiLaurent> row;
    for (int j = 1; j <= pres.generators; ++j) row.push_back(fox_derivative(r, j, pres.abelianization, vars));
    m.push_back(std::move(row));
  }
  return m;
}

PolyMatrix alexander_matrix(const BraidWord& b, const std::vector<Exponents>& component_images,
                            const std::vector<std::string>& vars) {
  ClosureComponents comp = closure_components(b);
  if (component_images.size() != static_cast<std::size_t>(comp.count))
    throw std::invalid_argument("need one meridian image per closure component");
  const std::size_t n = static_cast<std::size_t>(b.strands());
  auto unit = [&](const Exponents& e) { return MultiLaurent::monomial(vars, e); };
  auto inverse = [](Exponents e) {
    for (auto& v : e) v = -v;
    return e;
  };

  // Rows hold the abelianized derivatives of the images of x_i under the
  // automorphism applied so far; letters are folded in from the end.
  PolyMatrix jac(n, std::vector<MultiLaurent>(n, MultiLaurent(vars)));
  for (std::size_t i = 0; i < n; ++i) jac[i][i] = MultiLaurent::constant(vars, 1);
  // colour[m]: component whose meridian the image of x_m abelianizes to.
  std::vector<int> colour = comp.label;

  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const std::size_t k = static_cast<std::size_t>(std::abs(*it) - 1);
    const Exponents& tk = component_images[static_cast<std::size_t>(colour[k])];
    const Exponents& tk1 = component_images[static_cast<std::size_t>(colour[k + 1])];
    std::vector<MultiLaurent> row_k = jac[k], row_k1 = jac[k + 1];
    if (*it > 0) {
      // x_k -> x_k x_{k+1} x_k^-1,  x_{k+1} -> x_k
      MultiLaurent a = 1 - unit(tk1), c = unit(tk);
      for (std::size_t l = 0; l < n; ++l) {
        jac[k][l] = a * row_k[l] + c * row_k1[l];
        jac[k + 1][l] = row_k[l];
      }
    } else {
      // x_k -> x_{k+1},  x_{k+1} -> x_{k+1}^-1 x_k x_{k+1}
      MultiLaurent inv = unit(inverse(tk1));
      MultiLaurent a = inv, c = unit(tk) * inv - inv;
      for (std::size_t l = 0; l < n; ++l) {
        jac[k][l] = row_k1[l];
        jac[k + 1][l] = a * row_k[l] + c * row_k1[l];
      }
    }
    std::swap(colour[k], colour[k + 1]);
  }
  for (std::size_t i = 0; i < n; ++i) jac[i][i] -= MultiLaurent::constant(vars, 1);
  return jac;
}

namespace {

MultiLaurent meridian_minus_one(const std::vector<std::string>& vars, int component) {
  return MultiLaurent::variable(vars, vars[static_cast<std::size_t>(component)]) - 1;
}

std::vector<Exponents> identity_images(std::size_t components) {
  std::vector<Exponents> images;
  for (std::size_t c = 0; c < components; ++c) {
    Exponents e(components, 0);
    e[c] = 1;
    images.push_back(std::move(e));
  }
  return images;
}

}  // namespace

bool fox_fundamental_identity_holds(const PolyMatrix& m, const std::vector<int>& abelianization,
                                    const std::vector<std::string>& vars) {
  for (const auto& row : m) {
    MultiLaurent sum(vars);
    for (std::size_t j = 0; j < row.size(); ++j)
      sum += row[j] * meridian_minus_one(vars, abelianization[j]);
    if (!sum.is_zero()) return false;
  }
  return true;
}

MultiLaurent alexander_from_minor(const PolyMatrix& m, std::size_t row, std::size_t col,
                                  const std::optional<MultiLaurent>& divisor) {
  if (m.empty()) throw std::invalid_argument("empty Alexander matrix");
  const std::vector<std::string>& vars = m[0][0].vars();
  MultiLaurent det = determinant(minor_matrix(m, row, col), vars);
  return divisor ? exact_div(det, *divisor) : det;
}

CrossCheckMismatch::CrossCheckMismatch(MultiLaurent first, MultiLaurent second)
    : std::runtime_error("Alexander polynomial differs between minors: " + first.to_string() +
                         " vs " + second.to_string()),
      first_(std::move(first)),
      second_(std::move(second)) {}

MultiLaurent multivariable_alexander(const BraidWord& b, const AlexanderOptions& opts) {
  ClosureComponents comp = closure_components(b);
  std::vector<std::string> vars = opts.names.value_or(component_names(comp.count));
  if (static_cast<int>(vars.size()) != comp.count)
    throw std::invalid_argument("need one variable name per closure component");
  PolyMatrix m = alexander_matrix(b, identity_images(vars.size()), vars);
  if (!fox_fundamental_identity_holds(m, comp.label, vars))
    throw std::logic_error("Alexander matrix violates the fundamental Fox identity");
  const std::size_t n = m.size();
  auto divisor = [&](std::size_t col) -> std::optional<MultiLaurent> {
    if (comp.count < 2) return std::nullopt;
    return meridian_minus_one(vars, comp.label[col]);
  };
  MultiLaurent delta = canonical(alexander_from_minor(m, 0, 0, divisor(0))).poly;
  if (opts.cross_check && n > 1) {
    // Second minor: last row, and a column from another component when possible.
    std::size_t col = n - 1;
    for (std::size_t j = n; j-- > 1;)
      if (comp.label[j] != comp.label[0]) {
        col = j;
        break;
      }
    MultiLaurent other = canonical(alexander_from_minor(m, n - 1, col, divisor(col))).poly;
    if (other != delta) throw CrossCheckMismatch(delta, other);
  }
  return delta;
}

MultiLaurent specialized_alexander(const BraidWord& b, const std::vector<Exponents>& component_images,
                                   const std::vector<std::string>& vars) {
  ClosureComponents comp = closure_components(b);
  PolyMatrix m = alexander_matrix(b, component_images, vars);
  const Exponents one(vars.size(), 0);
  std::size_t col = 0;
  if (comp.count >= 2) {
    while (col < m.size() && component_images[static_cast<std::size_t>(comp.label[col])] == one) ++col;
    if (col == m.size()) throw std::invalid_argument("every meridian is sent to 1");
  }
  std::optional<MultiLaurent> divisor;
  if (comp.count >= 2)
    divisor = MultiLaurent::monomial(vars, component_images[static_cast<std::size_t>(comp.label[col])]) - 1;
  return canonical(alexander_from_minor(m, col, col, divisor)).poly;
}

template <class Compute>
const MultiLaurent& AlexanderCache::lookup(std::map<LinkFamilySpec, MultiLaurent>& table,
                                           const LinkFamilySpec& spec, Compute compute) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = table.find(spec); it != table.end()) return it->second;
  }
  MultiLaurent value = compute();
  std::lock_guard lock(mutex_);
  return table.try_emplace(spec, std::move(value)).first->second;
}

const MultiLaurent& AlexanderCache::family(const LinkFamilySpec& spec) {
  return lookup(family_, spec, [&] { return multivariable_alexander(family_braid(spec)); });
}

const MultiLaurent& AlexanderCache::axis_free(const LinkFamilySpec& spec) {
  return lookup(axis_free_, spec, [&] { return multivariable_alexander(axis_free_braid(spec)); });
}

const MultiLaurent& AlexanderCache::reduced(const LinkFamilySpec& spec) {
  return lookup(reduced_, spec, [&] {
    return specialized_alexander(family_braid(spec), {{1}, {1}, {1}, {0}}, {"s"});
  });
}

MultiLaurent at_axis_one(const MultiLaurent& delta) {
  const std::vector<std::string> xyz{"x", "y", "z"};
  Assignment a{{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"z", {0, 0, 1}}, {"t", {0, 0, 0}}};
  return substitute(delta, a, xyz);
}

TorresReport torres_check(const LinkFamilySpec& spec, AlexanderCache& cache) {
  TorresReport r;
  r.left = at_axis_one(cache.family(spec));
  LinkingMatrix lk = linking_matrix(family_braid(spec));
  const std::vector<std::string> xyz{"x", "y", "z"};
  MultiLaurent factor = MultiLaurent::monomial(xyz, {lk[0][3], lk[1][3], lk[2][3]}) - 1;
  r.right = factor * cache.axis_free(spec);
  r.passed = unit_equivalent(r.left, r.right);
  return r;
}

TorresReport torres_check(const LinkFamilySpec& spec) {
  AlexanderCache cache;
  return torres_check(spec, cache);
}

PeriodicReport periodic_check(int p, AlexanderCache& cache) {
  if (p < 1) throw std::invalid_argument("periodic_check requires p >= 1");
  const MultiLaurent& l11 = cache.family({1, 1});
  PeriodicReport r;
  r.left = cache.axis_free({p, 1}) * at_axis_one(l11);
  r.right = cache.axis_free({1, 1}) * roots_of_unity_product(l11, "t", p);
  r.passed = unit_equivalent(r.left, r.right);
  return r;
}

PeriodicReport periodic_check(int p) {
  AlexanderCache cache;
  return periodic_check(p, cache);
}

}  // namespace lpq
