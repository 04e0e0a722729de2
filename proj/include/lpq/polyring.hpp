#pragma once

// Exact multivariate Laurent polynomials over the integers.
//
// A MultiLaurent carries its ordered variable names together with a sorted
// list of (exponent vector, coefficient) terms.  Exponents may be negative;
// coefficients are GMP integers and never zero.  Terms are kept in strictly
// increasing lexicographic order of exponent vectors, so two polynomials over
// the same variables are equal iff their term lists are equal.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <json.hpp>

namespace lpq {

using Integer = mpz_class;
using Exponents = boost::container::small_vector<int, 4>;

struct Term {
  Exponents exp;
  Integer coeff;

  bool operator==(const Term&) const = default;
};

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSymmetrizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MultiLaurent {
 public:
  MultiLaurent() = default;
  explicit MultiLaurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
  /// drops zero coefficients.
  static MultiLaurent from_terms(std::vector<std::string> vars, std::vector<Term> terms);
  static MultiLaurent constant(std::vector<std::string> vars, const Integer& c);
  static MultiLaurent monomial(std::vector<std::string> vars, Exponents exp,
                               const Integer& c = 1);
  static MultiLaurent variable(std::vector<std::string> vars, const std::string& name,
                               int power = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  /// Index of a variable name, or nullopt.
  std::optional<std::size_t> var_index(const std::string& name) const;

  Integer coeff(const Exponents& e) const;
  const Term& leading_term() const { return terms_.back(); }   // lex maximal
  const Term& trailing_term() const { return terms_.front(); }  // lex minimal

  /// Per-variable minimum / maximum exponent over the support; requires P != 0.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  bool is_monomial() const { return terms_.size() == 1; }
  /// Inverse of a unit monomial c*m with c = +-1; throws NotDivisible otherwise.
  MultiLaurent inverse_monomial() const;

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  MultiLaurent& operator*=(const MultiLaurent& o);

  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);

  friend MultiLaurent operator+(MultiLaurent a, long c);
  friend MultiLaurent operator+(long c, MultiLaurent a) { return std::move(a) + c; }
  friend MultiLaurent operator-(MultiLaurent a, long c) { return std::move(a) + (-c); }
  friend MultiLaurent operator-(long c, const MultiLaurent& a) { return (-a) + c; }
  friend MultiLaurent operator*(MultiLaurent a, const Integer& c);
  friend MultiLaurent operator*(const Integer& c, MultiLaurent a) { return std::move(a) * c; }
  friend MultiLaurent operator*(MultiLaurent a, long c) { return std::move(a) * Integer(c); }
  friend MultiLaurent operator*(long c, MultiLaurent a) { return std::move(a) * Integer(c); }

  /// Multiplies by the monomial x^shift (exponent-wise addition).
  MultiLaurent shifted(const Exponents& shift) const;

  bool operator==(const MultiLaurent& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  void check_same_vars(const MultiLaurent& o) const;

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiLaurent& p);

MultiLaurent pow(const MultiLaurent& p, unsigned k);

/// The unit u = sign * x^monomial with P = u * Q.
struct UnitEquivalenceWitness {
  int sign = 1;
  Exponents monomial;

  MultiLaurent apply(const MultiLaurent& q) const;
};

struct CanonicalForm {
  MultiLaurent poly;
  UnitEquivalenceWitness witness;  // original = witness.apply(poly)
};

/// Minimum exponent 0 in every variable, positive coefficient at the
/// lexicographically smallest exponent.
CanonicalForm canonical(const MultiLaurent& p);
bool unit_equivalent(const MultiLaurent& a, const MultiLaurent& b);

/// Q with P = Q * D exactly, or throws NotDivisible.
MultiLaurent exact_div(const MultiLaurent& p, const MultiLaurent& d);
std::optional<MultiLaurent> try_exact_div(const MultiLaurent& p, const MultiLaurent& d);

/// Image of a variable: a monomial in the output variables (all-zero
/// exponents is the constant 1).
using Assignment = std::map<std::string, Exponents>;

MultiLaurent substitute(const MultiLaurent& p, const Assignment& assignment,
                        const std::vector<std::string>& out_vars);

/// Rank of the lattice spanned by {e - e0 : e in support}.
std::size_t support_rank(const MultiLaurent& p);

/// Returns +-monomial * P with centrally symmetric support and positive
/// coefficient at the lex-maximal exponent.
MultiLaurent symmetrize(const MultiLaurent& p);
/// Support S satisfies S = -S (coefficients are not inspected).
bool has_symmetric_support(const MultiLaurent& p);

/// Same polynomial re-expressed over a different variable list.  Variables of
/// P that are missing from new_vars must not occur in its support.
MultiLaurent reorder_vars(const MultiLaurent& p, const std::vector<std::string>& new_vars);

nlohmann::json to_json(const MultiLaurent& p);
MultiLaurent from_json(const nlohmann::json& j);

}  // namespace lpq
