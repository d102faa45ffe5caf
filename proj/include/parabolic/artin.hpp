#pragma once

// Artin groups over a Coxeter graph.  Elements are handled as words; exact
// equality is only available through pluggable oracles (free reduction when
// every label is infinite, Garside normal form when the graph is a type A
// path).  The central operation is the letter-by-letter projection of a word
// onto the standard parabolic subgroup on a target set T.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parabolic/coxeter.hpp"

namespace artin {

struct Letter {
  coxeter::Generator generator;
  int sign; // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.generator == b.generator && a.sign == b.sign;
  }
};

using ArtinWord = std::vector<Letter>;

ArtinWord inverse(const ArtinWord& w);

// Image in the Coxeter group (signs are dropped).
coxeter::Element theta(const coxeter::CoxeterGraph& g, const ArtinWord& w);

// One row per input letter: the Coxeter prefix u_i, its decomposition
// u_i = v_i w_i over T, the conjugate w s w^-1 when it is a generator, and
// the letter the projection emitted, if any.
struct TraceStep {
  Letter input;
  coxeter::Element u;
  coxeter::Element v;
  coxeter::Element w;
  std::optional<coxeter::Generator> conjugate;
  std::optional<Letter> emitted;
};

struct ProjectionTrace {
  std::vector<TraceStep> steps;
};

// Retraction of words onto the standard parabolic on T.  Fixes words over T
// letter for letter and never increases length.
std::pair<ArtinWord, ProjectionTrace> project_word(const coxeter::CoxeterGraph& g,
                                                   const ArtinWord& w, coxeter::GenSet t);

ArtinWord free_reduce(const ArtinWord& w);

// Exponent sums per component of the odd-labelled subgraph, components
// ordered by their smallest generator.
std::vector<int> odd_components(const coxeter::CoxeterGraph& g); // component id per generator
std::vector<long long> abelianized_image(const coxeter::CoxeterGraph& g, const ArtinWord& w);

// Deterministic bounded draws on top of a fixed-sequence engine.
class Rng {
public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  std::size_t below(std::size_t n); // uniform in [0, n)

private:
  std::uint64_t state_[4];
};

// Random walk over element-preserving rewrites: insert a cancelling pair,
// delete a cancelling pair, or replace one side of a braid relation (with
// both orientations and both signs) by the other.  Uniform over all
// applicable moves at each step.
ArtinWord scramble(const coxeter::CoxeterGraph& g, const ArtinWord& w, int steps,
                   std::uint64_t seed);

struct Oracle {
  std::string name;
  std::function<bool(const ArtinWord&, const ArtinWord&)> equal;
};

// Generators in path order when the graph is a type A path (every component
// label 3, simple path covering all generators).
std::optional<std::vector<coxeter::Generator>> type_a_path(const coxeter::CoxeterGraph& g);
bool all_labels_infinite(const coxeter::CoxeterGraph& g);

// The strongest exact equality oracle this graph admits, if any.
std::optional<Oracle> best_oracle(const coxeter::CoxeterGraph& g);

struct ConvexityReport {
  ArtinWord tau;
  std::size_t input_length = 0;
  std::size_t output_length = 0;
  bool lengths_equal = false;
  bool input_all_in_target = false;
  bool length_contract_ok = false;   // |tau| <= |w|, and equality forces letters in T
  bool theta_in_target = false;      // theta(w) lies in W_T
  bool theta_match = false;          // theta(tau) == theta(w)
  bool abelian_match = false;
  std::optional<bool> oracle_equal;  // tau == w in the Artin group, when checkable
  std::string oracle_name;
};

ConvexityReport check_convexity(const coxeter::CoxeterGraph& g, const ArtinWord& w,
                                coxeter::GenSet t, const Oracle* oracle);

// Tokens "name" or "name^-1"; the single token "1" is the empty word.
ArtinWord parse_artin_word(const coxeter::CoxeterGraph& g, std::string_view text);
std::string format_artin_word(const coxeter::CoxeterGraph& g, const ArtinWord& w);

} // namespace artin
