#pragma once

// One-shot verification of the closed-form identities and counting claims
// about the family L_{p,q}, as run by `lpq verify-paper`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpq/braid.hpp"
#include "lpq/polyring.hpp"

namespace lpq {

struct CheckRecord {
  std::string name;
  std::string params;
  bool passed = false;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool passed() const;
};

struct VerificationOptions {
  int pmax = 4;
  int qmax = 3;
  std::uint64_t seed = 20010611;
  int random_trials = 1000;
};

/// The Laurent polynomial of the Borromean rings plus axis, as displayed:
/// -4 + (t + 1/t) + sum(x + 1/x) - sum(xy + 1/(xy)) + (xyz + 1/(xyz)).
MultiLaurent borromean_axis_polynomial();

/// Random one-variable Laurent polynomial in s with 1..max_terms terms,
/// exponents within a window of width max_span and small nonzero coefficients.
MultiLaurent random_laurent(std::mt19937_64& rng, int max_terms = 8, int max_span = 30);

/// prod (a_i s - b_i) over k distinct nonzero rational roots b_i / a_i.
MultiLaurent random_linear_product(std::mt19937_64& rng, int k);

/// Delta of the closure of sigma_k b sigma_k^-1 equals Delta of the closure
/// of b once components are matched through the strands.
bool conjugation_invariant(const BraidWord& b, int k);
/// Same for the stabilization b sigma_n^(+-1) on one more strand.
bool stabilization_invariant(const BraidWord& b, int sign);
/// Every (row, col) minor, divided by the meridian of col minus one, gives
/// the same canonical polynomial.
bool minor_independent(const BraidWord& b);
/// Delta(t_1^-1, ..., t_mu^-1) is unit equivalent to Delta.
bool inversion_symmetric(const MultiLaurent& delta);

VerificationReport run_verification(const VerificationOptions& opts);

nlohmann::ordered_json to_json(const VerificationReport& report);
std::string format_table(const VerificationReport& report);

}  // namespace lpq
