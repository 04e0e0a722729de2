#pragma once

// Braid words, the Artin action on free groups, closure combinatorics and the
// constructors for the family L_{p,q}.
//
// Conventions: strands and generators are numbered from 1 in the public text
// form, letters are read left to right (top of the braid to bottom), and a
// positive letter k stands for sigma_k.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpq {

class BraidWord {
 public:
  /// Throws std::invalid_argument when a letter is 0 or |k| >= strands.
  BraidWord(int strands, std::vector<int> letters = {});

  /// Whitespace separated nonzero integers; the strand count defaults to
  /// max|k| + 1 (and at least 1).
  static BraidWord parse(std::string_view text, std::optional<int> strands = std::nullopt);
  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord compose(const BraidWord& other) const;
  BraidWord power(int k) const;
  /// Reindexes every generator by +offset on a braid with `new_strands` strands.
  BraidWord shift(int offset, int new_strands) const;
  /// Reversed word with flipped signs.
  BraidWord inverse() const;

  std::string to_string() const;
  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// perm[i] = bottom position (0-based) of the strand starting at top position i.
std::vector<int> permutation(const BraidWord& b);

struct ClosureComponents {
  int count = 0;
  /// label[i] = component (0-based) of the strand starting at position i;
  /// components are numbered by their smallest strand.
  std::vector<int> label;
};

ClosureComponents closure_components(const BraidWord& b);

using LinkingMatrix = std::vector<std::vector<int>>;

/// Pairwise linking numbers of the closure; the diagonal is zero.
LinkingMatrix linking_matrix(const BraidWord& b);

struct FreeLetter {
  int gen;  // 1-based generator index
  int exp;  // +1 or -1

  bool operator==(const FreeLetter&) const = default;
};

/// Freely reduced word in the free group on generators x_1, x_2, ...
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<FreeLetter> letters);
  static FreeWord generator(int gen, int exp = 1) { return FreeWord({{gen, exp}}); }

  const std::vector<FreeLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  /// Sum of exponents of each generator (index 0 is generator 1).
  std::vector<int> exponent_sums(int generators) const;

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

  std::string to_string() const;
  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<FreeLetter> letters_;
};

/// Images of x_1..x_n under the braid automorphism, applying letters in order.
std::vector<FreeWord> artin_images(const BraidWord& b);
FreeWord artin_action(const BraidWord& b, const FreeWord& w);

/// Appends sigma_n ... sigma_1 sigma_1 ... sigma_n on n + 1 strands: the new
/// last strand is a braid axis with linking number +1 to every strand.
BraidWord axis_augment(const BraidWord& b);

struct LinkFamilySpec {
  int p = 0;
  int q = 1;

  bool operator==(const LinkFamilySpec&) const = default;
  auto operator<=>(const LinkFamilySpec&) const = default;
};

/// (sigma_1 sigma_2^-1)^3, whose closure is the Borromean rings.
BraidWord borromean_braid();

/// C_q * shift(B_1^p) on q + 2 strands; its closure is R_p.
BraidWord axis_free_braid(const LinkFamilySpec& spec);

/// axis_augment(axis_free_braid(spec)) on q + 3 strands; closure L_{p,q}.
/// Validates four components, the cabled first component and the expected
/// linking matrix; throws std::logic_error if any check fails.
BraidWord family_braid(const LinkFamilySpec& spec);

/// The linking matrix every L_{p,q} must have.
LinkingMatrix expected_family_linking(int q);

}  // namespace lpq
