#pragma once

// The poset of cells of the Salvetti complex of a Coxeter graph: pairs
// (u, X) with u in W and W_X finite, ordered by coset containment with a
// minimality constraint.  Includes the cellular retraction onto the
// subcomplex over a standard parabolic subgroup.

#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "parabolic/coxeter.hpp"

namespace salvetti {

// Cell B(u, X); dimension |X|.  W_X must be finite type.
struct PosetNode {
  coxeter::Element u;
  coxeter::GenSet x;
  friend bool operator==(const PosetNode& a, const PosetNode& b) {
    return a.u == b.u && a.x == b.x;
  }
  friend bool operator!=(const PosetNode& a, const PosetNode& b) { return !(a == b); }
  friend bool operator<(const PosetNode& a, const PosetNode& b) {
    if (a.x.size() != b.x.size()) return a.x.size() < b.x.size();
    if (a.x != b.x) return a.x < b.x;
    return a.u < b.u;
  }
};

PosetNode make_node(coxeter::Element u, coxeter::GenSet x);

// (u, X) <= (v, Y) iff X is a subset of Y, v^-1 u lies in W_Y, and v^-1 u
// has no right descent in X.
bool leq(const PosetNode& a, const PosetNode& b);

// All nodes below n, sorted; sizes 1, 3 and 4m+1 in dimensions 0, 1, 2.
std::vector<PosetNode> lower_set(const PosetNode& n);

// Edge of the 1-skeleton from x(u) to x(u s).
struct OrientedEdge {
  coxeter::Element u;
  coxeter::Generator s;
  friend bool operator==(const OrientedEdge& a, const OrientedEdge& b) {
    return a.u == b.u && a.s == b.s;
  }
};

coxeter::Element edge_source(const OrientedEdge& e);
coxeter::Element edge_target(const OrientedEdge& e);

// Closed boundary walk of the 2-cell B(u, {s,t}); each step is an edge
// together with the direction it is traversed in.
struct BoundaryLoop {
  std::vector<std::pair<OrientedEdge, int>> steps;
};

BoundaryLoop two_cell_boundary(const coxeter::Element& u, coxeter::Generator s,
                               coxeter::Generator t);

struct ComplexSummary {
  std::vector<std::size_t> cells_by_dim;
  long long euler() const;
  std::size_t total() const;
};

// Cell census of the full complex (finite W) or of the part with
// lg(u) <= radius.
ComplexSummary build_complex(const coxeter::CoxeterGraph& g);
ComplexSummary build_complex(const coxeter::CoxeterGraph& g, int radius);

// One line per edge: source normal form, generator, target normal form,
// tab-separated; identity prints as "1".
void write_one_skeleton(const coxeter::CoxeterGraph& g, std::ostream& out);
void write_one_skeleton(const coxeter::CoxeterGraph& g, int radius, std::ostream& out);

// Subsets X with W_X finite, by increasing size then bit pattern.
std::vector<coxeter::GenSet> spherical_subsets(const coxeter::CoxeterGraph& g);

// Every node of the full complex (finite W).
std::vector<PosetNode> all_nodes(const coxeter::CoxeterGraph& g);

// View a node of the complex over ambient.restriction(t) as a node of the
// ambient complex.  The i-th generator of the restriction corresponds to the
// i-th member of t.
PosetNode include_node(const coxeter::CoxeterGraph& ambient, coxeter::GenSet t,
                       const PosetNode& node);

// Cellular retraction onto the subcomplex over W_T: write u = u0 u1 with
// u0 in W_T and u1 (T,{})-minimal, and keep the part of X that u1 conjugates
// into T.
PosetNode project_node(const PosetNode& n, coxeter::GenSet t);

// Image of the edge a(u, s): an edge when u1 s u1^-1 lies in T, otherwise
// the vertex x(u0).
std::variant<OrientedEdge, coxeter::Element> project_edge(const coxeter::Element& u,
                                                          coxeter::Generator s,
                                                          coxeter::GenSet t);

} // namespace salvetti
