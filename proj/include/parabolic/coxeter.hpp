#pragma once

// Coxeter systems presented by a labelled graph.  The word problem is solved
// exactly: braid-move orbit search on words, plus a one-time breadth-first
// enumeration for graphs recognized as finite type.  Everything downstream
// (length, descents, coset decompositions) is built on canonical normal forms.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parabolic/errors.hpp"

namespace coxeter {

using Generator = int;               // index into the graph's generator list
using Word = std::vector<Generator>; // the empty word is the identity

// Label value standing for m(s,t) = infinity ("inf" in graph files).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Subset of the generating set, at most 64 generators.
class GenSet {
public:
  GenSet() = default;

  static GenSet from_bits(std::uint64_t bits) {
    GenSet g;
    g.bits_ = bits;
    return g;
  }
  static GenSet of(std::initializer_list<Generator> gens) {
    GenSet g;
    for (Generator s : gens) g.add(s);
    return g;
  }
  static GenSet full(int rank) {
    return from_bits(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(Generator s) const { return (bits_ >> s) & 1; }
  GenSet& add(Generator s) {
    bits_ |= std::uint64_t{1} << s;
    return *this;
  }
  GenSet& remove(Generator s) {
    bits_ &= ~(std::uint64_t{1} << s);
    return *this;
  }
  bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<Generator> elements() const;

  friend GenSet operator|(GenSet a, GenSet b) { return from_bits(a.bits_ | b.bits_); }
  friend GenSet operator&(GenSet a, GenSet b) { return from_bits(a.bits_ & b.bits_); }
  friend bool operator==(GenSet a, GenSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(GenSet a, GenSet b) { return a.bits_ != b.bits_; }
  friend bool operator<(GenSet a, GenSet b) { return a.bits_ < b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

namespace detail {
struct EngineState;
struct Engine;
} // namespace detail

struct GraphEdge {
  int a = 0;
  int b = 0;
  int label = 2; // finite value >= 2, or kInfinity
};

class CoxeterGraph {
public:
  explicit CoxeterGraph(std::vector<std::string> names,
                        const std::vector<GraphEdge>& edges = {});

  // Text format, one directive per line, '#' starts a comment:
  //   gens: s t u
  //   edge: s t 3
  //   edge: t u inf
  // Unlisted pairs have label 2.
  static CoxeterGraph parse(std::string_view text);

  CoxeterGraph(CoxeterGraph&&) noexcept;
  CoxeterGraph& operator=(CoxeterGraph&&) noexcept;
  CoxeterGraph(const CoxeterGraph&) = delete;
  CoxeterGraph& operator=(const CoxeterGraph&) = delete;
  ~CoxeterGraph();

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(Generator s) const;
  std::optional<Generator> find(std::string_view name) const;
  int label(Generator s, Generator t) const; // m(s,t); 1 on the diagonal
  GenSet all() const { return GenSet::full(rank()); }

  // Induced subgraph on T, generators renumbered in induced order.
  CoxeterGraph restriction(GenSet t) const;

  // Search bounds.  Finite-type graphs are enumerated once on first use of
  // the word engine; groups larger than max_elements raise BoundError, so
  // large finite groups need this raised before use.
  std::size_t max_elements = 200000;
  std::size_t max_orbit = 1000000;

private:
  std::vector<std::string> names_;
  std::vector<int> labels_; // row-major rank x rank
  bool finite_type_ = false;
  std::unique_ptr<detail::EngineState> state_;

  friend struct detail::Engine;
};

// Group element, held as its ShortLex-minimal geodesic word.  Elements are
// only comparable when they come from the same graph object.
class Element {
public:
  const CoxeterGraph& graph() const { return *graph_; }
  const Word& word() const { return nf_; }
  int length() const { return static_cast<int>(nf_.size()); }
  bool is_identity() const { return nf_.empty(); }
  std::string key() const; // letters as bytes, usable as a map key

  friend bool operator==(const Element& a, const Element& b) {
    return a.graph_ == b.graph_ && a.nf_ == b.nf_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // ShortLex order on normal forms.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.nf_.size() != b.nf_.size()) return a.nf_.size() < b.nf_.size();
    return a.nf_ < b.nf_;
  }

private:
  Element(const CoxeterGraph* g, Word nf) : graph_(g), nf_(std::move(nf)) {}
  const CoxeterGraph* graph_ = nullptr;
  Word nf_;

  friend struct detail::Engine;
};

// The alternating word aba... of the given length; a and b must differ.
Word alternating_word(Generator a, Generator b, int m);

Element normalize(const CoxeterGraph& g, const Word& w);
Element identity_element(const CoxeterGraph& g);
Element generator_element(const CoxeterGraph& g, Generator s);
Element multiply(const Element& a, const Element& b);
Element multiply(const Element& a, Generator s);
Element invert(const Element& e);

GenSet left_descents(const Element& e);
GenSet right_descents(const Element& e);

// e = u0 * u1 with u0 in W_T, u1 of minimal length in W_T * e; lengths add.
std::pair<Element, Element> parabolic_decompose(const Element& e, GenSet t);

bool is_double_coset_minimal(const Element& e, GenSet x, GenSet y);
Element double_coset_minimal_rep(const Element& e, GenSet x, GenSet y);

// u s u^-1 when it is again a generator.
std::optional<Generator> conjugate_into_generators(const Element& u, Generator s);

// Whether W_X is finite, by classification of the induced components.
bool is_finite_type(const CoxeterGraph& g, GenSet x);

// Whether every letter of the normal form lies in T (membership in W_T).
bool in_parabolic(const Element& e, GenSet t);

// All elements of W in breadth-first order from the identity.
// Requires finite type; raises BoundError past max_elements.
std::vector<Element> enumerate(const CoxeterGraph& g);

// All elements of the standard parabolic W_X, breadth-first order.
std::vector<Element> enumerate_parabolic(const CoxeterGraph& g, GenSet x);

// All elements of length <= radius, breadth-first order.  Works on infinite
// groups; still subject to max_elements.
std::vector<Element> ball(const CoxeterGraph& g, int radius);

// All subsets of the given set, by increasing bit pattern.
std::vector<GenSet> subsets(GenSet s);

// Whitespace-separated generator names; the single token "1" is the identity.
Word parse_word(const CoxeterGraph& g, std::string_view text);
// Comma-separated generator names; the empty string is the empty set.
GenSet parse_subset(const CoxeterGraph& g, std::string_view text);

std::string format_word(const CoxeterGraph& g, const Word& w); // "1" if empty
std::string format_subset(const CoxeterGraph& g, GenSet s);

} // namespace coxeter
