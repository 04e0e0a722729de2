#include "lpq/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lpq {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (int k : letters_)
    if (k == 0 || std::abs(k) >= strands_)
      throw std::invalid_argument("braid letter " + std::to_string(k) + " out of range for " +
                                  std::to_string(strands_) + " strands");
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string tok;
  int widest = 0;
  while (in >> tok) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed braid letter '" + tok + "'");
    }
    if (used != tok.size() || k == 0)
      throw std::invalid_argument("malformed braid letter '" + tok + "'");
    widest = std::max(widest, std::abs(k));
    letters.push_back(k);
  }
  return BraidWord(strands.value_or(widest + 1), std::move(letters));
}

BraidWord BraidWord::compose(const BraidWord& other) const {
  if (other.strands_ != strands_) throw std::invalid_argument("composing braids with different strand counts");
  std::vector<int> l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(l));
}

BraidWord BraidWord::power(int k) const {
  if (k < 0) throw std::invalid_argument("braid power must be nonnegative");
  std::vector<int> l;
  l.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) l.insert(l.end(), letters_.begin(), letters_.end());
  return BraidWord(strands_, std::move(l));
}

BraidWord BraidWord::shift(int offset, int new_strands) const {
  std::vector<int> l;
  l.reserve(letters_.size());
  for (int k : letters_) l.push_back(k > 0 ? k + offset : k - offset);
  return BraidWord(new_strands, std::move(l));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> l(letters_.rbegin(), letters_.rend());
  for (int& k : l) k = -k;
  return BraidWord(strands_, std::move(l));
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

std::vector<int> permutation(const BraidWord& b) {
  // at[pos] = strand currently at position pos
  std::vector<int> at(static_cast<std::size_t>(b.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (int k : b.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

ClosureComponents closure_components(const BraidWord& b) {
  std::vector<int> perm = permutation(b);
  ClosureComponents c;
  c.label.assign(perm.size(), -1);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (c.label[start] >= 0) continue;
    for (std::size_t s = start; c.label[s] < 0; s = static_cast<std::size_t>(perm[s])) c.label[s] = c.count;
    ++c.count;
  }
  return c;
}

LinkingMatrix linking_matrix(const BraidWord& b) {
  ClosureComponents comp = closure_components(b);
  const std::size_t mu = static_cast<std::size_t>(comp.count);
  LinkingMatrix twice(mu, std::vector<int>(mu, 0));
  std::vector<int> at(static_cast<std::size_t>(b.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (int k : b.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(k) - 1);
    int c1 = comp.label[static_cast<std::size_t>(at[i])];
    int c2 = comp.label[static_cast<std::size_t>(at[i + 1])];
    if (c1 != c2) {
      int s = k > 0 ? 1 : -1;
      twice[c1][c2] += s;
      twice[c2][c1] += s;
    }
    std::swap(at[i], at[i + 1]);
  }
  for (auto& row : twice)
    for (int& v : row) {
      if (v % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
      v /= 2;
    }
  return twice;
}

FreeWord::FreeWord(std::vector<FreeLetter> letters) {
  for (const auto& l : letters) {
    if (l.gen < 1 || (l.exp != 1 && l.exp != -1)) throw std::invalid_argument("bad free-group letter");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

std::vector<int> FreeWord::exponent_sums(int generators) const {
  std::vector<int> sums(static_cast<std::size_t>(generators), 0);
  for (const auto& l : letters_) {
    if (l.gen > generators) throw std::out_of_range("generator index out of range");
    sums[static_cast<std::size_t>(l.gen - 1)] += l.exp;
  }
  return sums;
}

FreeWord FreeWord::inverse() const {
  std::vector<FreeLetter> l(letters_.rbegin(), letters_.rend());
  for (auto& x : l) x.exp = -x.exp;
  return FreeWord(std::move(l));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<FreeLetter> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(l));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    os << (i ? " " : "") << "x" << letters_[i].gen;
    if (letters_[i].exp < 0) os << "^-1";
  }
  return os.str();
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
  const std::size_t n = static_cast<std::size_t>(b.strands());
  std::vector<FreeWord> img;
  img.reserve(n);
  for (std::size_t i = 0; i < n; ++i) img.push_back(FreeWord::generator(static_cast<int>(i) + 1));
  // The composite applies the first letter first, so images are built by
  // precomposing with letters taken from the end of the word.
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    std::size_t k = static_cast<std::size_t>(std::abs(*it) - 1);
    FreeWord a = img[k], c = img[k + 1];
    if (*it > 0) {
      img[k] = a * c * a.inverse();
      img[k + 1] = a;
    } else {
      img[k] = c;
      img[k + 1] = c.inverse() * a * c;
    }
  }
  return img;
}

FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
  std::vector<FreeWord> img = artin_images(b);
  FreeWord out;
  for (const auto& l : w.letters()) {
    if (l.gen > b.strands()) throw std::out_of_range("generator index exceeds strand count");
    const FreeWord& x = img[static_cast<std::size_t>(l.gen - 1)];
    out = out * (l.exp > 0 ? x : x.inverse());
  }
  return out;
}

BraidWord axis_augment(const BraidWord& b) {
  const int n = b.strands();
  std::vector<int> l = b.letters();
  for (int k = n; k >= 1; --k) l.push_back(k);
  for (int k = 1; k <= n; ++k) l.push_back(k);
  return BraidWord(n + 1, std::move(l));
}

BraidWord borromean_braid() { return BraidWord(3, {1, -2, 1, -2, 1, -2}); }

BraidWord axis_free_braid(const LinkFamilySpec& spec) {
  if (spec.p < 0 || spec.q < 1) throw std::invalid_argument("family requires p >= 0 and q >= 1");
  const int strands = spec.q + 2;
  std::vector<int> cable;
  for (int k = 1; k < spec.q; ++k) cable.push_back(k);
  BraidWord c(strands, std::move(cable));
  return c.compose(borromean_braid().power(spec.p).shift(spec.q - 1, strands));
}

LinkingMatrix expected_family_linking(int q) {
  return {{0, 0, 0, q}, {0, 0, 0, 1}, {0, 0, 0, 1}, {q, 1, 1, 0}};
}

BraidWord family_braid(const LinkFamilySpec& spec) {
  BraidWord b = axis_augment(axis_free_braid(spec));
  ClosureComponents comp = closure_components(b);
  if (comp.count != 4) throw std::logic_error("family braid closure does not have 4 components");
  for (int s = 0; s < spec.q; ++s)
    if (comp.label[static_cast<std::size_t>(s)] != 0)
      throw std::logic_error("first component does not comprise strands 1..q");
  if (linking_matrix(b) != expected_family_linking(spec.q))
    throw std::logic_error("family braid has an unexpected linking matrix");
  return b;
}

}  // namespace lpq
