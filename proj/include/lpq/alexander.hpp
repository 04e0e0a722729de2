#pragma once

// Multivariable Alexander polynomials of closed braids via Fox calculus.

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpq/braid.hpp"
#include "lpq/linalg.hpp"
#include "lpq/polyring.hpp"

namespace lpq {

/// <x_1..x_n | r_i = beta(x_i) x_i^-1> together with the map from generators
/// to closure components.
struct LinkPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  std::vector<int> abelianization;  // generator (0-based) -> component (0-based)
  int components = 0;
};

LinkPresentation presentation_from_braid(const BraidWord& b);

/// t for knots, x,y,z for two or three components, x,y,z,t for four (t is the
/// component through the last strand), t1..tN beyond that.
std::vector<std::string> component_names(int components);

/// Fox derivative d w / d x_gen (gen 1-based) pushed to the Laurent ring
/// along the abelianization.
MultiLaurent fox_derivative(const FreeWord& w, int gen, const std::vector<int>& abelianization,
                            const std::vector<std::string>& vars);

PolyMatrix alexander_matrix(const LinkPresentation& pres, const std::vector<std::string>& vars);

/// The same matrix built letter by letter through the Fox chain rule
/// (abelianized Jacobian of the braid automorphism minus the identity),
/// without expanding the Artin images.  `component_images[c]` is the
/// monomial, over `vars`, that the meridian of component c is sent to; the
/// identity assignment reproduces alexander_matrix.
PolyMatrix alexander_matrix(const BraidWord& b, const std::vector<Exponents>& component_images,
                            const std::vector<std::string>& vars);

/// Sum_j (d r / d x_j)(t_ab(j) - 1) vanishes for every relator (row).
bool fox_fundamental_identity_holds(const PolyMatrix& m, const std::vector<int>& abelianization,
                                    const std::vector<std::string>& vars);

/// Determinant of the minor with `row` and `col` deleted, divided exactly by
/// `divisor` when one is given (t_ab(col) - 1 for links).  Throws
/// NotDivisible when the division fails.
MultiLaurent alexander_from_minor(const PolyMatrix& m, std::size_t row, std::size_t col,
                                  const std::optional<MultiLaurent>& divisor);

/// Delta of the closure with the meridian of component c sent to the monomial
/// component_images[c], computed by specializing the matrix before the
/// determinant.  The deleted column is taken from a component whose image is
/// not 1.  Returns the canonical form; agrees with substituting into
/// multivariable_alexander.
MultiLaurent specialized_alexander(const BraidWord& b, const std::vector<Exponents>& component_images,
                                   const std::vector<std::string>& vars);

class CrossCheckMismatch : public std::runtime_error {
 public:
  CrossCheckMismatch(MultiLaurent first, MultiLaurent second);
  const MultiLaurent& first() const { return first_; }
  const MultiLaurent& second() const { return second_; }

 private:
  MultiLaurent first_, second_;
};

struct AlexanderOptions {
  bool cross_check = true;
  std::optional<std::vector<std::string>> names;
};

/// Canonical multivariable Alexander polynomial of the closure of b.
MultiLaurent multivariable_alexander(const BraidWord& b, const AlexanderOptions& opts = {});

/// Thread-safe memo of family polynomials: L_{p,q} over x,y,z,t, R_p (the
/// axis-free closure with q-1 cabling strands) over x,y,z, and the reduced
/// Delta_{L_{p,q}}(s,s,s,1) over s.
class AlexanderCache {
 public:
  const MultiLaurent& family(const LinkFamilySpec& spec);
  const MultiLaurent& axis_free(const LinkFamilySpec& spec);
  const MultiLaurent& reduced(const LinkFamilySpec& spec);

 private:
  template <class Compute>
  const MultiLaurent& lookup(std::map<LinkFamilySpec, MultiLaurent>& table,
                             const LinkFamilySpec& spec, Compute compute);

  std::mutex mutex_;
  std::map<LinkFamilySpec, MultiLaurent> family_, axis_free_, reduced_;
};

/// Delta(x, y, z, 1) of a polynomial over x,y,z,t.
MultiLaurent at_axis_one(const MultiLaurent& delta);

struct TorresReport {
  bool passed = false;
  MultiLaurent left;   // Delta_{L_{p,q}}(x,y,z,1)
  MultiLaurent right;  // (x^l14 y^l24 z^l34 - 1) * Delta_{R_p}
};

TorresReport torres_check(const LinkFamilySpec& spec, AlexanderCache& cache);
TorresReport torres_check(const LinkFamilySpec& spec);

struct PeriodicReport {
  bool passed = false;
  MultiLaurent left;   // Delta_{R_p} * Delta_{L_{1,1}}(x,y,z,1)
  MultiLaurent right;  // Delta_{R_1} * prod_j Delta_{L_{1,1}}(x,y,z,w^j)
};

PeriodicReport periodic_check(int p, AlexanderCache& cache);
PeriodicReport periodic_check(int p);

}  // namespace lpq
