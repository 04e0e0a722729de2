#pragma once

// Seiberg-Witten polynomials of the link surgery manifolds E(L_{p,q}) and the
// invariants used to tell them apart: basic-class counts, the dimension of
// their span, and term / real-root counts of the reduced polynomial.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpq/alexander.hpp"
#include "lpq/braid.hpp"
#include "lpq/polyring.hpp"

namespace lpq {

/// E(L_{p,q}) built from the elliptic surface E(n); n >= 3.
struct SurgerySpec {
  int n = 3;
  LinkFamilySpec family;
};

void validate(const SurgerySpec& spec);

/// P(x^2, y^2, z^2, t^2).
MultiLaurent square_variables(const MultiLaurent& p);

/// (t - t^-1)^(n-3) * Delta^s(x^2, y^2, z^2, t^2), fully expanded.
MultiLaurent sw_polynomial(const SurgerySpec& spec, AlexanderCache& cache);
MultiLaurent sw_polynomial(const SurgerySpec& spec);

/// Number of basic classes (terms of the SW polynomial).
std::size_t basic_class_count(const SurgerySpec& spec, AlexanderCache& cache);
/// Dimension of the span of basic classes; nullopt if the SW polynomial is 0.
std::optional<std::size_t> basic_class_span(const SurgerySpec& spec, AlexanderCache& cache);

/// Delta_{L_{p,q}}(s, s, s, 1) in canonical form, from the Fox matrix
/// specialized before the determinant.
MultiLaurent reduced_poly(const LinkFamilySpec& spec, AlexanderCache& cache);
/// The same value by substituting into the full four-variable polynomial.
MultiLaurent reduced_poly_by_substitution(const LinkFamilySpec& spec, AlexanderCache& cache);

/// (s^{q+2} - 1)(s - 1)^3 * prod_{j=1}^{p-1} [(1 - s^-3)(s - 1)^3 - 2(1 - cos(2 pi j / p))],
/// evaluated exactly through a resultant; p, q >= 1.
MultiLaurent closed_form_reduced(const LinkFamilySpec& spec);

struct GraphLinkReport {
  bool passed = false;
  MultiLaurent computed;
  MultiLaurent expected;  // (t - 1)^2 (x^q t^q - 1) / (x t - 1)
};

GraphLinkReport graph_link_check(int q, AlexanderCache& cache);

std::size_t tau(const LinkFamilySpec& spec, AlexanderCache& cache);
std::size_t rho(const LinkFamilySpec& spec, AlexanderCache& cache);
/// 1 + 2 floor((p - 1) / 2).
std::size_t fineq_bound(int p);
bool fineq_check(const LinkFamilySpec& spec, AlexanderCache& cache);
/// tau == 6p + 1; nullopt for even q where no claim is made.
std::optional<bool> tau_formula_check(const LinkFamilySpec& spec, AlexanderCache& cache);

struct TauTildeReport {
  std::size_t tau_tilde = 0;  // s-degrees with a nonzero t-coefficient
  std::size_t tau = 0;
  /// The t = 1 coefficients, read along s^(2k + c), equal those of the
  /// reduced polynomial up to one global sign.
  bool coefficients_recovered = false;
};

TauTildeReport tau_tilde(const SurgerySpec& spec, AlexanderCache& cache);

struct InvariantReport {
  SurgerySpec spec;
  std::size_t beta = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> tau;
  std::optional<std::size_t> rho;
  std::optional<std::size_t> tau_tilde;
  std::vector<std::pair<std::string, bool>> checks;
  MultiLaurent delta;
  MultiLaurent sw;
  MultiLaurent reduced;
};

InvariantReport invariant_report(const SurgerySpec& spec, AlexanderCache& cache);
nlohmann::ordered_json to_json(const InvariantReport& report, bool with_polynomials = false);

struct DistinguishReport {
  bool distinguished = false;
  std::vector<std::string> differing;  // names of invariants that differ
  InvariantReport a, b;
  std::string verdict;
};

/// Compares two members with the same n and q; never claims diffeomorphism.
DistinguishReport distinguish(const SurgerySpec& a, const SurgerySpec& b, AlexanderCache& cache);

}  // namespace lpq
