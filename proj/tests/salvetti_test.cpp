#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>
#include <vector>

#include "parabolic/salvetti.hpp"

using coxeter::CoxeterGraph;
using coxeter::Element;
using coxeter::Generator;
using coxeter::GenSet;
using salvetti::OrientedEdge;
using salvetti::PosetNode;

namespace {

CoxeterGraph dihedral(int m) { return CoxeterGraph({"s", "t"}, {{0, 1, m}}); }

PosetNode node(const CoxeterGraph& g, const coxeter::Word& w, GenSet x) {
  return salvetti::make_node(coxeter::normalize(g, w), x);
}

} // namespace

TEST_CASE("node validation") {
  CoxeterGraph g = CoxeterGraph::parse("gens: x y z\nedge: x y 3\nedge: y z inf\n");
  CHECK_NOTHROW(node(g, {0}, GenSet::of({0, 1})));
  CHECK_THROWS_AS(node(g, {0}, GenSet::of({1, 2})), errors::PreconditionError);
  CHECK_THROWS_AS(node(g, {0}, GenSet::of({3})), errors::PreconditionError);
}

TEST_CASE("order relation on the rank-2 poset") {
  CoxeterGraph g = dihedral(3);
  GenSet xs = GenSet::of({0});
  for (const Element& u : coxeter::enumerate(g)) {
    PosetNode cell = salvetti::make_node(u, xs);
    CHECK(salvetti::leq(salvetti::make_node(u, GenSet{}), cell));
    CHECK(salvetti::leq(salvetti::make_node(coxeter::multiply(u, 0), GenSet{}), cell));
    CHECK_FALSE(salvetti::leq(salvetti::make_node(coxeter::multiply(u, 1), GenSet{}), cell));
    CHECK(salvetti::leq(cell, cell));
  }
}

TEST_CASE("lower sets") {
  CoxeterGraph g = dihedral(3);
  Element u = coxeter::normalize(g, {1, 0});
  CHECK(salvetti::lower_set(salvetti::make_node(u, GenSet{})).size() == 1);

  std::vector<PosetNode> three = salvetti::lower_set(salvetti::make_node(u, GenSet::of({0})));
  REQUIRE(three.size() == 3);
  CHECK(std::count(three.begin(), three.end(), salvetti::make_node(u, GenSet{})) == 1);
  CHECK(std::count(three.begin(), three.end(),
                   salvetti::make_node(coxeter::multiply(u, 0), GenSet{})) == 1);
  CHECK(std::count(three.begin(), three.end(), salvetti::make_node(u, GenSet::of({0}))) == 1);

  CHECK(salvetti::lower_set(node(g, {}, g.all())).size() == 13);
  CHECK(salvetti::lower_set(node(dihedral(5), {}, GenSet::of({0, 1}))).size() == 21);
}

TEST_CASE("two-cell boundary in the hexagon group") {
  CoxeterGraph g = dihedral(3);
  salvetti::BoundaryLoop loop = salvetti::two_cell_boundary(coxeter::identity_element(g), 0, 1);
  REQUIRE(loop.steps.size() == 6);

  const Element one = coxeter::identity_element(g);
  CHECK(loop.steps[0].first.u == one);
  CHECK(loop.steps[0].first.s == 0);
  CHECK(loop.steps[0].second == 1);
  CHECK(loop.steps[1].first.u == coxeter::normalize(g, {0}));
  CHECK(loop.steps[1].first.s == 1);
  CHECK(loop.steps[2].first.u == coxeter::normalize(g, {0, 1}));
  CHECK(loop.steps[2].first.s == 0);
  CHECK(loop.steps[3].first.u == coxeter::normalize(g, {1, 0}));
  CHECK(loop.steps[3].first.s == 1);
  CHECK(loop.steps[3].second == -1);
  CHECK(loop.steps[4].first.u == coxeter::normalize(g, {1}));
  CHECK(loop.steps[4].first.s == 0);
  CHECK(loop.steps[4].second == -1);
  CHECK(loop.steps[5].first.u == one);
  CHECK(loop.steps[5].first.s == 1);
  CHECK(loop.steps[5].second == -1);
}

TEST_CASE("two-cell boundaries close up") {
  for (int m : {2, 3, 4}) {
    CoxeterGraph g = dihedral(m);
    for (const Element& u : coxeter::enumerate(g)) {
      salvetti::BoundaryLoop loop = salvetti::two_cell_boundary(u, 0, 1);
      REQUIRE(loop.steps.size() == 2 * static_cast<std::size_t>(m));
      Element at = u;
      for (const auto& [edge, sign] : loop.steps) {
        if (sign > 0) {
          CHECK(salvetti::edge_source(edge) == at);
          at = salvetti::edge_target(edge);
        } else {
          CHECK(salvetti::edge_target(edge) == at);
          at = salvetti::edge_source(edge);
        }
      }
      CHECK(at == u);

      // Read off the letters: the positive half spells the alternating word
      // starting with s, the negative half (in construction order) the one
      // starting with t.
      coxeter::Word pos, neg;
      for (const auto& [edge, sign] : loop.steps)
        (sign > 0 ? pos : neg).push_back(edge.s);
      std::reverse(neg.begin(), neg.end());
      CHECK(pos == coxeter::alternating_word(0, 1, m));
      CHECK(neg == coxeter::alternating_word(1, 0, m));
    }
  }
  CoxeterGraph inf = CoxeterGraph::parse("gens: s t\nedge: s t inf\n");
  CHECK_THROWS_AS(
      salvetti::two_cell_boundary(coxeter::identity_element(inf), 0, 1),
      errors::PreconditionError);
}

TEST_CASE("cell census") {
  salvetti::ComplexSummary square = salvetti::build_complex(dihedral(2));
  CHECK(square.cells_by_dim == std::vector<std::size_t>{4, 8, 4});
  CHECK(square.euler() == 0);

  salvetti::ComplexSummary octagon = salvetti::build_complex(dihedral(4));
  CHECK(octagon.cells_by_dim == std::vector<std::size_t>{8, 16, 8});
  CHECK(octagon.euler() == 0);
  CHECK(octagon.total() == 32);

  salvetti::ComplexSummary circle = salvetti::build_complex(CoxeterGraph({"s"}));
  CHECK(circle.cells_by_dim == std::vector<std::size_t>{2, 2});
  CHECK(circle.euler() == 0);

  CoxeterGraph a3 = CoxeterGraph({"a", "b", "c"}, {{0, 1, 3}, {1, 2, 3}});
  salvetti::ComplexSummary full = salvetti::build_complex(a3);
  CHECK(full.cells_by_dim == std::vector<std::size_t>{24, 72, 72, 24});
  CHECK(full.euler() == 0);

  CoxeterGraph inf = CoxeterGraph::parse("gens: s t\nedge: s t inf\n");
  CHECK_THROWS_AS(salvetti::build_complex(inf), errors::PreconditionError);
  salvetti::ComplexSummary truncated = salvetti::build_complex(inf, 1);
  CHECK(truncated.cells_by_dim == std::vector<std::size_t>{3, 6});
}

TEST_CASE("spherical subsets") {
  CoxeterGraph g = CoxeterGraph::parse("gens: x y z\nedge: x y 3\nedge: y z inf\n");
  std::vector<GenSet> sph = salvetti::spherical_subsets(g);
  CHECK(sph.size() == 6);
  CHECK(std::count(sph.begin(), sph.end(), GenSet::of({0, 1})) == 1);
  CHECK(std::count(sph.begin(), sph.end(), GenSet::of({1, 2})) == 0);
  CHECK(std::count(sph.begin(), sph.end(), GenSet::of({0, 2})) == 1);
}

TEST_CASE("one-skeleton dump") {
  CoxeterGraph g = dihedral(3);
  std::ostringstream out;
  salvetti::write_one_skeleton(g, out);
  std::istringstream in(out.str());
  std::string line;
  std::size_t lines = 0;
  bool saw_identity_edge = false;
  while (std::getline(in, line)) {
    ++lines;
    if (line == "1\ts\ts") saw_identity_edge = true;
  }
  CHECK(lines == 12);
  CHECK(saw_identity_edge);
}

TEST_CASE("poset axioms hold in small groups") {
  for (int m : {2, 3}) {
    CoxeterGraph g = dihedral(m);
    std::vector<PosetNode> nodes = salvetti::all_nodes(g);
    CHECK(nodes.size() == 2 * static_cast<std::size_t>(m) * 4);
    for (const PosetNode& a : nodes) {
      CHECK(salvetti::leq(a, a));
      for (const PosetNode& b : nodes) {
        if (salvetti::leq(a, b) && salvetti::leq(b, a)) CHECK(a == b);
        for (const PosetNode& c : nodes)
          if (salvetti::leq(a, b) && salvetti::leq(b, c)) CHECK(salvetti::leq(a, c));
      }
    }
  }
}

TEST_CASE("left translation preserves the order") {
  CoxeterGraph g = dihedral(3);
  std::vector<PosetNode> nodes = salvetti::all_nodes(g);
  for (const Element& w : coxeter::enumerate(g))
    for (const PosetNode& a : nodes)
      for (const PosetNode& b : nodes) {
        PosetNode wa = salvetti::make_node(coxeter::multiply(w, a.u), a.x);
        PosetNode wb = salvetti::make_node(coxeter::multiply(w, b.u), b.x);
        CHECK(salvetti::leq(a, b) == salvetti::leq(wa, wb));
      }
}

TEST_CASE("inclusion of a sub-poset") {
  CoxeterGraph g = CoxeterGraph({"a", "b", "c"}, {{0, 1, 3}, {1, 2, 3}});
  GenSet t = GenSet::of({0, 1});
  CoxeterGraph sub = g.restriction(t);

  PosetNode inner = salvetti::make_node(coxeter::normalize(sub, {0, 1}), GenSet::of({1}));
  PosetNode outer = salvetti::include_node(g, t, inner);
  CHECK(outer.u == coxeter::normalize(g, {0, 1}));
  CHECK(outer.x == GenSet::of({1}));

  PosetNode id_node = salvetti::make_node(coxeter::identity_element(sub), GenSet{});
  CHECK(salvetti::include_node(g, t, id_node) ==
        salvetti::make_node(coxeter::identity_element(g), GenSet{}));

  CHECK_THROWS_AS(salvetti::include_node(g, GenSet::of({0}), inner),
                  errors::PreconditionError);
}

TEST_CASE("projecting nodes") {
  CoxeterGraph g = dihedral(3);
  GenSet t = GenSet::of({0});

  PosetNode a = salvetti::project_node(node(g, {1, 0}, GenSet::of({1})), t);
  CHECK(a == node(g, {}, GenSet::of({0})));

  PosetNode b = salvetti::project_node(node(g, {1}, GenSet{}), t);
  CHECK(b == node(g, {}, GenSet{}));

  // Retraction: nodes coming from the sub-poset are fixed.
  CoxeterGraph sub = g.restriction(t);
  for (const Element& u : coxeter::enumerate(sub))
    for (GenSet x : {GenSet{}, GenSet::of({0})}) {
      PosetNode inner = salvetti::make_node(u, x);
      PosetNode outer = salvetti::include_node(g, t, inner);
      CHECK(salvetti::project_node(outer, t) == outer);
    }
}

TEST_CASE("projection preserves the order") {
  CoxeterGraph g = dihedral(3);
  std::vector<PosetNode> nodes = salvetti::all_nodes(g);
  for (GenSet t : coxeter::subsets(g.all()))
    for (const PosetNode& a : nodes)
      for (const PosetNode& b : nodes)
        if (salvetti::leq(a, b))
          CHECK(salvetti::leq(salvetti::project_node(a, t), salvetti::project_node(b, t)));
}

TEST_CASE("projecting edges") {
  CoxeterGraph g = dihedral(3);
  GenSet t = GenSet::of({0});

  auto direct = salvetti::project_edge(coxeter::identity_element(g), 0, t);
  REQUIRE(std::holds_alternative<OrientedEdge>(direct));
  CHECK(std::get<OrientedEdge>(direct).u.is_identity());
  CHECK(std::get<OrientedEdge>(direct).s == 0);

  auto conjugated = salvetti::project_edge(coxeter::normalize(g, {1, 0}), 1, t);
  REQUIRE(std::holds_alternative<OrientedEdge>(conjugated));
  CHECK(std::get<OrientedEdge>(conjugated).u.is_identity());
  CHECK(std::get<OrientedEdge>(conjugated).s == 0);

  auto collapsed = salvetti::project_edge(coxeter::identity_element(g), 1, t);
  REQUIRE(std::holds_alternative<Element>(collapsed));
  CHECK(std::get<Element>(collapsed).is_identity());
}

TEST_CASE("edge projection agrees with node projection") {
  for (int m : {2, 3, 4}) {
    CoxeterGraph g = dihedral(m);
    for (GenSet t : coxeter::subsets(g.all()))
      for (const Element& u : coxeter::enumerate(g))
        for (Generator s = 0; s < g.rank(); ++s) {
          auto image = salvetti::project_edge(u, s, t);
          PosetNode top = salvetti::project_node(salvetti::make_node(u, GenSet::of({s})), t);
          PosetNode v0 = salvetti::project_node(salvetti::make_node(u, GenSet{}), t);
          PosetNode v1 =
              salvetti::project_node(salvetti::make_node(coxeter::multiply(u, s), GenSet{}), t);
          if (std::holds_alternative<OrientedEdge>(image)) {
            OrientedEdge e = std::get<OrientedEdge>(image);
            CHECK(top == salvetti::make_node(e.u, GenSet::of({e.s})));
            CHECK(v0.u == salvetti::edge_source(e));
            CHECK(v1.u == salvetti::edge_target(e));
          } else {
            Element v = std::get<Element>(image);
            CHECK(top == salvetti::make_node(v, GenSet{}));
            CHECK(v0.u == v);
            CHECK(v1.u == v);
          }
        }
  }
}
