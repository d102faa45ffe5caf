#pragma once

// Braid groups on n strands: permutation image, Garside left normal form as
// an exact equality test, strand deletion, and embedding into more strands.
// Generators are written s1 .. s(n-1); si crosses the strands in positions
// i and i+1.

#include <string>
#include <string_view>
#include <vector>

#include "parabolic/errors.hpp"

namespace braid {

// Permutation of {0,..,n-1}; composition reads left to right, matching
// concatenation of braid words.
class Permutation {
public:
  explicit Permutation(int n); // identity
  static Permutation from_one_line(std::vector<int> images);
  static Permutation adjacent_transposition(int n, int i); // swaps i, i+1 (0-based)
  static Permutation half_twist(int n);                    // i -> n-1-i

  int degree() const { return static_cast<int>(map_.size()); }
  int operator[](int i) const { return map_[static_cast<std::size_t>(i)]; }
  bool is_identity() const;
  Permutation inverse() const;

  friend Permutation compose(const Permutation& p, const Permutation& q); // p then q
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.map_ < b.map_; }

private:
  std::vector<int> map_;
};

struct Letter {
  int index; // 1-based: si
  int sign;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.index == b.index && a.sign == b.sign;
  }
};

class BraidWord {
public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});
  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

private:
  int strands_;
  std::vector<Letter> letters_;
};

// Image in the symmetric group; signs are ignored.
Permutation perm_of(const BraidWord& w);

// Left normal form Delta^k x1 .. xr: each xi a permutation braid, none
// trivial, none the half twist, consecutive pairs left-weighted.  Two words
// are equal in the braid group iff their normal forms coincide.
struct GarsideNormalForm {
  int strands = 1;
  long long delta_power = 0;
  std::vector<Permutation> factors;
  friend bool operator==(const GarsideNormalForm& a, const GarsideNormalForm& b) {
    return a.strands == b.strands && a.delta_power == b.delta_power && a.factors == b.factors;
  }
};

GarsideNormalForm garside_nf(const BraidWord& w);
bool words_equal(const BraidWord& a, const BraidWord& b);

// Remove all strands outside `keep` (1-based strand labels, strictly
// increasing).  Each surviving crossing is re-indexed by the rank of its
// position among the kept strands' current positions.  Requires that the
// permutation image maps kept starting positions into kept positions.
BraidWord delete_strands(const BraidWord& w, const std::vector<int>& keep);

// The same word viewed in a braid group on more strands.
BraidWord embed(const BraidWord& w, int strands);

// Canonical positive word for a permutation braid, smallest generator first.
std::vector<int> simple_word(const Permutation& p);

// Tokens s<k> or s<k>^-1, whitespace-separated; "1" is the empty word.
BraidWord parse_braid_word(int strands, std::string_view text);
std::string format_braid_word(const BraidWord& w); // "1" if empty
std::string format_garside(const GarsideNormalForm& nf);

} // namespace braid
