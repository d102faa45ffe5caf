#include "parabolic/salvetti.hpp"

#include <algorithm>
#include <ostream>

namespace salvetti {

using coxeter::CoxeterGraph;
using coxeter::Element;
using coxeter::Generator;
using coxeter::GenSet;

PosetNode make_node(Element u, GenSet x) {
  if (!x.subset_of(u.graph().all()))
    throw errors::PreconditionError("cell set is not a subset of the generators");
  if (!coxeter::is_finite_type(u.graph(), x))
    throw errors::PreconditionError("cell set does not span a finite parabolic");
  return PosetNode{std::move(u), x};
}

bool leq(const PosetNode& a, const PosetNode& b) {
  if (&a.u.graph() != &b.u.graph())
    throw errors::PreconditionError("nodes belong to different graphs");
  if (!a.x.subset_of(b.x)) return false;
  Element g = coxeter::multiply(coxeter::invert(b.u), a.u);
  if (!coxeter::in_parabolic(g, b.x)) return false;
  return (coxeter::right_descents(g) & a.x).empty();
}

std::vector<PosetNode> lower_set(const PosetNode& n) {
  const CoxeterGraph& graph = n.u.graph();
  std::vector<Element> group = coxeter::enumerate_parabolic(graph, n.x);
  std::vector<PosetNode> out;
  for (GenSet y : coxeter::subsets(n.x)) {
    for (const Element& g : group) {
      if (!(coxeter::right_descents(g) & y).empty()) continue;
      out.push_back(make_node(coxeter::multiply(n.u, g), y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element edge_source(const OrientedEdge& e) { return e.u; }

Element edge_target(const OrientedEdge& e) { return coxeter::multiply(e.u, e.s); }

BoundaryLoop two_cell_boundary(const Element& u, Generator s, Generator t) {
  const CoxeterGraph& g = u.graph();
  if (s == t) throw errors::PreconditionError("a 2-cell needs two distinct generators");
  const int m = g.label(s, t);
  if (m == coxeter::kInfinity)
    throw errors::PreconditionError("no 2-cell for an infinite label");

  BoundaryLoop loop;
  loop.steps.reserve(static_cast<std::size_t>(2 * m));
  Element e = u;
  for (int i = 0; i < m; ++i) {
    const Generator c = (i % 2 == 0) ? s : t;
    loop.steps.push_back({OrientedEdge{e, c}, +1});
    e = coxeter::multiply(e, c);
  }
  std::vector<std::pair<OrientedEdge, int>> reversed;
  reversed.reserve(static_cast<std::size_t>(m));
  Element f = u;
  for (int j = 0; j < m; ++j) {
    const Generator d = (j % 2 == 0) ? t : s;
    reversed.push_back({OrientedEdge{f, d}, -1});
    f = coxeter::multiply(f, d);
  }
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) loop.steps.push_back(*it);
  return loop;
}

long long ComplexSummary::euler() const {
  long long chi = 0;
  long long sign = 1;
  for (std::size_t c : cells_by_dim) {
    chi += sign * static_cast<long long>(c);
    sign = -sign;
  }
  return chi;
}

std::size_t ComplexSummary::total() const {
  std::size_t n = 0;
  for (std::size_t c : cells_by_dim) n += c;
  return n;
}

namespace {

ComplexSummary census(const CoxeterGraph& g, std::size_t element_count) {
  ComplexSummary s;
  for (GenSet x : spherical_subsets(g)) {
    const std::size_t dim = static_cast<std::size_t>(x.size());
    if (s.cells_by_dim.size() <= dim) s.cells_by_dim.resize(dim + 1, 0);
    s.cells_by_dim[dim] += element_count;
  }
  return s;
}

void write_edges(const CoxeterGraph& g, const std::vector<Element>& elements,
                 std::ostream& out) {
  for (const Element& u : elements)
    for (Generator s = 0; s < g.rank(); ++s)
      out << coxeter::format_word(g, u.word()) << '\t' << g.name(s) << '\t'
          << coxeter::format_word(g, coxeter::multiply(u, s).word()) << '\n';
}

} // namespace

ComplexSummary build_complex(const CoxeterGraph& g) {
  return census(g, coxeter::enumerate(g).size());
}

ComplexSummary build_complex(const CoxeterGraph& g, int radius) {
  return census(g, coxeter::ball(g, radius).size());
}

void write_one_skeleton(const CoxeterGraph& g, std::ostream& out) {
  write_edges(g, coxeter::enumerate(g), out);
}

void write_one_skeleton(const CoxeterGraph& g, int radius, std::ostream& out) {
  write_edges(g, coxeter::ball(g, radius), out);
}

std::vector<GenSet> spherical_subsets(const CoxeterGraph& g) {
  std::vector<GenSet> out;
  for (GenSet x : coxeter::subsets(g.all()))
    if (coxeter::is_finite_type(g, x)) out.push_back(x);
  std::sort(out.begin(), out.end(), [](GenSet a, GenSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<PosetNode> all_nodes(const CoxeterGraph& g) {
  std::vector<PosetNode> out;
  std::vector<GenSet> sph = spherical_subsets(g);
  for (const Element& u : coxeter::enumerate(g))
    for (GenSet x : sph) out.push_back(make_node(u, x));
  std::sort(out.begin(), out.end());
  return out;
}

PosetNode include_node(const CoxeterGraph& ambient, GenSet t, const PosetNode& node) {
  if (!t.subset_of(ambient.all()))
    throw errors::PreconditionError("target is not a subset of the generators");
  const CoxeterGraph& sub = node.u.graph();
  std::vector<Generator> map = t.elements();
  if (sub.rank() != static_cast<int>(map.size()))
    throw errors::PreconditionError("node does not live over the restriction to the target");
  for (int i = 0; i < sub.rank(); ++i) {
    if (sub.name(i) != ambient.name(map[static_cast<std::size_t>(i)]))
      throw errors::PreconditionError("node does not live over the restriction to the target");
    for (int j = i + 1; j < sub.rank(); ++j)
      if (sub.label(i, j) != ambient.label(map[static_cast<std::size_t>(i)],
                                           map[static_cast<std::size_t>(j)]))
        throw errors::PreconditionError("node does not live over the restriction to the target");
  }
  coxeter::Word w;
  w.reserve(node.u.word().size());
  for (Generator s : node.u.word()) w.push_back(map[static_cast<std::size_t>(s)]);
  GenSet x;
  for (Generator s : node.x.elements()) x.add(map[static_cast<std::size_t>(s)]);
  return make_node(coxeter::normalize(ambient, w), x);
}

PosetNode project_node(const PosetNode& n, GenSet t) {
  auto [u0, u1] = coxeter::parabolic_decompose(n.u, t);
  // u1 splits further as d * b with b in W_X and d minimal in its double
  // coset, so conjugating X through d keeps the image cell over u0.
  Element d = coxeter::double_coset_minimal_rep(u1, t, n.x);
  GenSet x0;
  for (Generator s : n.x.elements()) {
    std::optional<Generator> c = coxeter::conjugate_into_generators(d, s);
    if (c && t.contains(*c)) x0.add(*c);
  }
  return make_node(u0, x0);
}

std::variant<OrientedEdge, Element> project_edge(const Element& u, Generator s, GenSet t) {
  if (s < 0 || s >= u.graph().rank())
    throw errors::PreconditionError("generator index out of range");
  auto [u0, u1] = coxeter::parabolic_decompose(u, t);
  std::optional<Generator> c = coxeter::conjugate_into_generators(u1, s);
  if (c && t.contains(*c)) return OrientedEdge{u0, *c};
  return u0;
}

} // namespace salvetti
