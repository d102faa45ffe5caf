#include "parabolic/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace coxeter {

namespace {

// Words are keyed as byte strings, one generator index per byte.  Generator
// declaration order is byte order, so lexicographic comparison of keys of
// equal length is exactly the ShortLex tie-break.
using Key = std::string;

Key key_of(const Word& w) {
  Key k;
  k.reserve(w.size());
  for (Generator s : w) k.push_back(static_cast<char>(s));
  return k;
}

Word word_of(const Key& k) {
  Word w;
  w.reserve(k.size());
  for (char c : k) w.push_back(static_cast<Generator>(static_cast<unsigned char>(c)));
  return w;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

} // namespace

namespace detail {

struct Enumeration {
  std::vector<Key> nf;                    // by element id, BFS order
  std::vector<std::vector<int>> right;    // right[id][s] = id of element*s
  std::unordered_map<Key, int> index;
};

struct EngineState {
  std::mutex memo_mu;
  std::unordered_map<Key, Key> memo; // word -> normal form (braid-move search)

  std::mutex enum_mu;
  std::unique_ptr<Enumeration> enum_store;
  std::atomic<const Enumeration*> enum_ptr{nullptr};
};

struct Engine {
  static EngineState& state(const CoxeterGraph& g) { return *g.state_; }
  static bool finite_type(const CoxeterGraph& g) { return g.finite_type_; }
  static void set_finite_type(CoxeterGraph& g, bool v) { g.finite_type_ = v; }

  static Element make(const CoxeterGraph& g, Word nf) { return Element(&g, std::move(nf)); }

  // Braid-move orbit search.  Repeatedly: explore the orbit of the current
  // word under braid moves; on the first word with two equal adjacent
  // letters, delete them and start over with the shorter word.  When the
  // whole orbit carries no deletion, the word is reduced and the orbit is the
  // full set of its geodesic words, so the lexicographic minimum is the
  // ShortLex normal form.
  static Key braid_search(const CoxeterGraph& g, Key start) {
    EngineState& st = state(g);
    std::vector<Key> chain;
    Key cur = std::move(start);
    Key result;
    bool have_result = false;
    while (!have_result) {
      {
        std::lock_guard<std::mutex> lk(st.memo_mu);
        auto it = st.memo.find(cur);
        if (it != st.memo.end()) {
          result = it->second;
          have_result = true;
          break;
        }
      }
      chain.push_back(cur);

      std::unordered_set<Key> seen;
      std::vector<Key> stack;
      seen.insert(cur);
      stack.push_back(cur);
      Key best = cur;
      std::optional<Key> shorter;
      while (!stack.empty()) {
        Key w = std::move(stack.back());
        stack.pop_back();
        const std::size_t len = w.size();

        bool deleted = false;
        for (std::size_t i = 0; i + 1 < len; ++i) {
          if (w[i] == w[i + 1]) {
            Key next = w;
            next.erase(i, 2);
            shorter = std::move(next);
            deleted = true;
            break;
          }
        }
        if (deleted) break;

        if (w < best) best = w;

        for (std::size_t p = 0; p + 1 < len; ++p) {
          const Generator a = static_cast<unsigned char>(w[p]);
          const Generator b = static_cast<unsigned char>(w[p + 1]);
          const int m = g.label(a, b);
          if (m == kInfinity || p + static_cast<std::size_t>(m) > len) continue;
          bool alternating = true;
          for (int q = 2; q < m; ++q) {
            const Generator expect = (q % 2 == 0) ? a : b;
            if (static_cast<unsigned char>(w[p + q]) != expect) {
              alternating = false;
              break;
            }
          }
          if (!alternating) continue;
          Key v = w;
          for (int q = 0; q < m; ++q) v[p + q] = static_cast<char>((q % 2 == 0) ? b : a);
          if (seen.insert(v).second) {
            if (seen.size() > g.max_orbit)
              throw errors::BoundError("braid-move orbit exceeds max_orbit = " +
                                       std::to_string(g.max_orbit));
            stack.push_back(std::move(v));
          }
        }
      }

      if (shorter) {
        cur = std::move(*shorter);
      } else {
        result = best;
        have_result = true;
      }
    }

    {
      std::lock_guard<std::mutex> lk(st.memo_mu);
      for (const Key& c : chain) st.memo.emplace(c, result);
    }
    return result;
  }

  static const Enumeration& ensure_enumeration(const CoxeterGraph& g) {
    EngineState& st = state(g);
    if (const Enumeration* e = st.enum_ptr.load(std::memory_order_acquire)) return *e;
    std::lock_guard<std::mutex> lk(st.enum_mu);
    if (const Enumeration* e = st.enum_ptr.load(std::memory_order_relaxed)) return *e;

    auto built = std::make_unique<Enumeration>();
    built->nf.push_back(Key{});
    built->index.emplace(Key{}, 0);
    const int rank = g.rank();
    for (std::size_t i = 0; i < built->nf.size(); ++i) {
      built->right.emplace_back(rank, -1);
      for (Generator s = 0; s < rank; ++s) {
        Key cand = built->nf[i];
        cand.push_back(static_cast<char>(s));
        Key nf = braid_search(g, std::move(cand));
        auto it = built->index.find(nf);
        int id;
        if (it == built->index.end()) {
          if (built->nf.size() >= g.max_elements)
            throw errors::BoundError("group enumeration exceeds max_elements = " +
                                     std::to_string(g.max_elements));
          id = static_cast<int>(built->nf.size());
          built->index.emplace(nf, id);
          built->nf.push_back(std::move(nf));
        } else {
          id = it->second;
        }
        built->right[i][s] = id;
      }
    }

    st.enum_store = std::move(built);
    st.enum_ptr.store(st.enum_store.get(), std::memory_order_release);
    return *st.enum_store;
  }

  static int walk(const Enumeration& e, int id, const Key& k) {
    for (char c : k) id = e.right[id][static_cast<unsigned char>(c)];
    return id;
  }

  // Canonical form of an arbitrary word, by multiplication table when the
  // graph is finite type, by orbit search otherwise.
  static Key normal_key(const CoxeterGraph& g, const Key& k) {
    if (finite_type(g)) {
      const Enumeration& e = ensure_enumeration(g);
      return e.nf[walk(e, 0, k)];
    }
    return braid_search(g, k);
  }

  static void check_letters(const CoxeterGraph& g, const Word& w) {
    for (Generator s : w)
      if (s < 0 || s >= g.rank())
        throw errors::PreconditionError("word letter out of range");
  }

  static void check_same_graph(const Element& a, const Element& b) {
    if (&a.graph() != &b.graph())
      throw errors::PreconditionError("elements belong to different graphs");
  }

  static void check_subset(const CoxeterGraph& g, GenSet x, const char* what) {
    if (!x.subset_of(g.all()))
      throw errors::PreconditionError(std::string(what) + " is not a subset of the generators");
  }
};

} // namespace detail

using detail::Engine;

int GenSet::size() const { return std::popcount(bits_); }

std::vector<Generator> GenSet::elements() const {
  std::vector<Generator> out;
  std::uint64_t b = bits_;
  while (b) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> names, const std::vector<GraphEdge>& edges)
    : names_(std::move(names)), state_(std::make_unique<detail::EngineState>()) {
  const int n = rank();
  if (n > 64) throw errors::ParseError("at most 64 generators are supported");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw errors::ParseError("duplicate generator name: " + names_[i]);
  labels_.assign(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) labels_[static_cast<std::size_t>(i) * n + i] = 1;
  for (const GraphEdge& e : edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw errors::ParseError("edge endpoint out of range");
    if (e.a == e.b) throw errors::ParseError("edge endpoints must differ");
    if (e.label != kInfinity && e.label < 2)
      throw errors::ParseError("edge label must be at least 2 or inf");
    std::size_t ij = static_cast<std::size_t>(e.a) * n + e.b;
    std::size_t ji = static_cast<std::size_t>(e.b) * n + e.a;
    if (labels_[ij] != 2) throw errors::ParseError("duplicate edge");
    labels_[ij] = labels_[ji] = e.label;
  }
  finite_type_ = is_finite_type(*this, all());
}

CoxeterGraph::CoxeterGraph(CoxeterGraph&&) noexcept = default;
CoxeterGraph& CoxeterGraph::operator=(CoxeterGraph&&) noexcept = default;
CoxeterGraph::~CoxeterGraph() = default;

CoxeterGraph CoxeterGraph::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<GraphEdge> edges;
  std::vector<std::tuple<std::string, std::string, std::string>> edge_names;
  bool have_gens = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                          : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> tok = split_tokens(line);
    if (tok.empty()) continue;

    if (tok[0] == "gens:") {
      if (have_gens) throw errors::ParseError("more than one gens: line");
      have_gens = true;
      names.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "edge:") {
      if (!have_gens) throw errors::ParseError("edge: line before gens: line");
      if (tok.size() != 4) throw errors::ParseError("malformed edge: line");
      edge_names.emplace_back(tok[1], tok[2], tok[3]);
    } else {
      throw errors::ParseError("malformed line: " + tok[0]);
    }
  }
  if (!have_gens) throw errors::ParseError("missing gens: line");

  auto find_name = [&](const std::string& s) -> int {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw errors::ParseError("edge references undeclared generator: " + s);
  };
  for (const auto& [a, b, lab] : edge_names) {
    GraphEdge e;
    e.a = find_name(a);
    e.b = find_name(b);
    if (lab == "inf") {
      e.label = kInfinity;
    } else {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(lab, &used);
      } catch (const std::exception&) {
        throw errors::ParseError("malformed edge label: " + lab);
      }
      if (used != lab.size()) throw errors::ParseError("malformed edge label: " + lab);
      if (value < 2) throw errors::ParseError("edge label must be at least 2 or inf");
      e.label = value;
    }
    edges.push_back(e);
  }
  return CoxeterGraph(std::move(names), edges);
}

const std::string& CoxeterGraph::name(Generator s) const {
  if (s < 0 || s >= rank()) throw errors::PreconditionError("generator index out of range");
  return names_[static_cast<std::size_t>(s)];
}

std::optional<Generator> CoxeterGraph::find(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

int CoxeterGraph::label(Generator s, Generator t) const {
  if (s < 0 || s >= rank() || t < 0 || t >= rank())
    throw errors::PreconditionError("generator index out of range");
  return labels_[static_cast<std::size_t>(s) * rank() + t];
}

CoxeterGraph CoxeterGraph::restriction(GenSet t) const {
  Engine::check_subset(*this, t, "restriction set");
  std::vector<Generator> gens = t.elements();
  std::vector<std::string> names;
  names.reserve(gens.size());
  for (Generator s : gens) names.push_back(name(s));
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      int m = label(gens[i], gens[j]);
      if (m != 2) edges.push_back({static_cast<int>(i), static_cast<int>(j), m});
    }
  CoxeterGraph sub(std::move(names), edges);
  sub.max_elements = max_elements;
  sub.max_orbit = max_orbit;
  return sub;
}

std::string Element::key() const { return key_of(nf_); }

Word alternating_word(Generator a, Generator b, int m) {
  if (a == b) throw errors::PreconditionError("alternating word needs distinct generators");
  if (m < 1) throw errors::PreconditionError("alternating word needs positive length");
  Word w;
  w.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

Element normalize(const CoxeterGraph& g, const Word& w) {
  Engine::check_letters(g, w);
  return Engine::make(g, word_of(Engine::normal_key(g, key_of(w))));
}

Element identity_element(const CoxeterGraph& g) { return Engine::make(g, Word{}); }

Element generator_element(const CoxeterGraph& g, Generator s) {
  if (s < 0 || s >= g.rank()) throw errors::PreconditionError("generator index out of range");
  return Engine::make(g, Word{s});
}

Element multiply(const Element& a, const Element& b) {
  Engine::check_same_graph(a, b);
  Key k = key_of(a.word());
  k += key_of(b.word());
  return Engine::make(a.graph(), word_of(Engine::normal_key(a.graph(), k)));
}

Element multiply(const Element& a, Generator s) {
  if (s < 0 || s >= a.graph().rank())
    throw errors::PreconditionError("generator index out of range");
  Key k = key_of(a.word());
  k.push_back(static_cast<char>(s));
  return Engine::make(a.graph(), word_of(Engine::normal_key(a.graph(), k)));
}

Element invert(const Element& e) {
  Word w(e.word().rbegin(), e.word().rend());
  return normalize(e.graph(), w);
}

GenSet left_descents(const Element& e) {
  GenSet r;
  for (Generator s = 0; s < e.graph().rank(); ++s)
    if (multiply(generator_element(e.graph(), s), e).length() < e.length()) r.add(s);
  return r;
}

GenSet right_descents(const Element& e) {
  GenSet r;
  for (Generator s = 0; s < e.graph().rank(); ++s)
    if (multiply(e, s).length() < e.length()) r.add(s);
  return r;
}

std::pair<Element, Element> parabolic_decompose(const Element& e, GenSet t) {
  Engine::check_subset(e.graph(), t, "target");
  Element u1 = e;
  Word prefix;
  for (;;) {
    std::optional<Generator> strip;
    for (Generator s : t.elements()) {
      if (multiply(generator_element(e.graph(), s), u1).length() < u1.length()) {
        strip = s;
        break;
      }
    }
    if (!strip) break;
    u1 = multiply(generator_element(e.graph(), *strip), u1);
    prefix.push_back(*strip);
  }
  Element u0 = normalize(e.graph(), prefix);
  assert(u0.length() + u1.length() == e.length());
  return {u0, u1};
}

bool is_double_coset_minimal(const Element& e, GenSet x, GenSet y) {
  Engine::check_subset(e.graph(), x, "left set");
  Engine::check_subset(e.graph(), y, "right set");
  return (left_descents(e) & x).empty() && (right_descents(e) & y).empty();
}

Element double_coset_minimal_rep(const Element& e, GenSet x, GenSet y) {
  Engine::check_subset(e.graph(), x, "left set");
  Engine::check_subset(e.graph(), y, "right set");
  Element cur = e;
  for (;;) {
    GenSet ld = left_descents(cur) & x;
    if (!ld.empty()) {
      cur = multiply(generator_element(e.graph(), ld.elements().front()), cur);
      continue;
    }
    GenSet rd = right_descents(cur) & y;
    if (!rd.empty()) {
      cur = multiply(cur, rd.elements().front());
      continue;
    }
    return cur;
  }
}

std::optional<Generator> conjugate_into_generators(const Element& u, Generator s) {
  if (s < 0 || s >= u.graph().rank())
    throw errors::PreconditionError("generator index out of range");
  Element c = multiply(multiply(u, s), invert(u));
  if (c.length() == 1) return c.word().front();
  return std::nullopt;
}

namespace {

// Connected components of the induced graph, edges where m(s,t) != 2.
std::vector<std::vector<Generator>> components_of(const CoxeterGraph& g, GenSet x) {
  std::vector<Generator> gens = x.elements();
  std::vector<std::vector<Generator>> comps;
  std::uint64_t unvisited = x.bits();
  while (unvisited) {
    Generator seed = std::countr_zero(unvisited);
    std::vector<Generator> comp{seed};
    unvisited &= ~(std::uint64_t{1} << seed);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Generator t : gens) {
        if (!((unvisited >> t) & 1)) continue;
        if (g.label(comp[i], t) != 2) {
          comp.push_back(t);
          unvisited &= ~(std::uint64_t{1} << t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool component_is_finite_type(const CoxeterGraph& g, const std::vector<Generator>& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.label(c[i], c[j]) == kInfinity) return false;
  if (n <= 2) return true; // a point, or I2(m) with m finite

  // Edges of the diagram restricted to the component.
  std::vector<std::pair<int, int>> edges; // indices into c
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.label(c[i], c[j]) >= 3) {
        edges.emplace_back(i, j);
        ++degree[i];
        ++degree[j];
      }
  if (static_cast<int>(edges.size()) != n - 1) return false; // has a cycle

  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    if (degree[i] >= 4) return false;
    if (degree[i] == 3) branch.push_back(i);
  }
  if (branch.size() >= 2) return false;

  auto lab = [&](int i, int j) { return g.label(c[i], c[j]); };
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  if (branch.size() == 1) {
    // One degree-3 vertex: all labels must be 3 and the arm lengths must be
    // (1,1,*) or (1,2,c) with c <= 4.
    for (auto [i, j] : edges)
      if (lab(i, j) != 3) return false;
    std::vector<int> arms;
    for (int start : adj[branch[0]]) {
      int len = 1, prev = branch[0], cur = start;
      for (;;) {
        int next = -1;
        for (int nb : adj[cur])
          if (nb != prev) next = nb;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return false;
    if (arms[1] == 1) return true;          // D_n
    return arms[1] == 2 && arms[2] <= 4;    // E6, E7, E8
  }

  // A path: read the labels along it.
  int start = 0;
  for (int i = 0; i < n; ++i)
    if (degree[i] == 1) start = i;
  std::vector<int> path{start};
  int prev = -1, cur = start;
  while (static_cast<int>(path.size()) < n) {
    int next = -1;
    for (int nb : adj[cur])
      if (nb != prev) next = nb;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  std::vector<int> labels;
  for (int i = 0; i + 1 < n; ++i) labels.push_back(lab(path[i], path[i + 1]));

  int big = -1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 3) continue;
    if (big >= 0) return false; // two labels above 3
    big = static_cast<int>(i);
  }
  if (big < 0) return true; // A_n
  const int value = labels[big];
  const bool at_end = big == 0 || big == n - 2;
  if (value == 4) return at_end || n == 4; // B_n, or F4
  if (value == 5) return at_end && n <= 4; // H3, H4
  return false;                            // label >= 6 needs rank 2
}

} // namespace

bool is_finite_type(const CoxeterGraph& g, GenSet x) {
  Engine::check_subset(g, x, "subset");
  for (const auto& comp : components_of(g, x))
    if (!component_is_finite_type(g, comp)) return false;
  return true;
}

bool in_parabolic(const Element& e, GenSet t) {
  Engine::check_subset(e.graph(), t, "target");
  for (Generator s : e.word())
    if (!t.contains(s)) return false;
  return true;
}

std::vector<Element> enumerate(const CoxeterGraph& g) {
  if (!Engine::finite_type(g))
    throw errors::PreconditionError("group is not finite type; cannot enumerate");
  const detail::Enumeration& e = Engine::ensure_enumeration(g);
  std::vector<Element> out;
  out.reserve(e.nf.size());
  for (const Key& k : e.nf) out.push_back(Engine::make(g, word_of(k)));
  return out;
}

std::vector<Element> enumerate_parabolic(const CoxeterGraph& g, GenSet x) {
  Engine::check_subset(g, x, "subset");
  if (!is_finite_type(g, x))
    throw errors::PreconditionError("parabolic subgroup is not finite type; cannot enumerate");
  std::vector<Key> nfs{Key{}};
  std::unordered_map<Key, int> index{{Key{}, 0}};
  std::vector<Generator> gens = x.elements();
  for (std::size_t i = 0; i < nfs.size(); ++i) {
    for (Generator s : gens) {
      Key cand = nfs[i];
      cand.push_back(static_cast<char>(s));
      Key nf = Engine::normal_key(g, cand);
      if (index.emplace(nf, static_cast<int>(nfs.size())).second) {
        if (nfs.size() >= g.max_elements)
          throw errors::BoundError("parabolic enumeration exceeds max_elements = " +
                                   std::to_string(g.max_elements));
        nfs.push_back(std::move(nf));
      }
    }
  }
  std::vector<Element> out;
  out.reserve(nfs.size());
  for (const Key& k : nfs) out.push_back(Engine::make(g, word_of(k)));
  return out;
}

std::vector<Element> ball(const CoxeterGraph& g, int radius) {
  if (radius < 0) throw errors::PreconditionError("radius must be nonnegative");
  std::vector<Key> nfs{Key{}};
  std::unordered_set<Key> seen{Key{}};
  for (std::size_t i = 0; i < nfs.size(); ++i) {
    if (static_cast<int>(nfs[i].size()) >= radius) continue;
    for (Generator s = 0; s < g.rank(); ++s) {
      Key cand = nfs[i];
      cand.push_back(static_cast<char>(s));
      Key nf = Engine::normal_key(g, cand);
      if (seen.insert(nf).second) {
        if (nfs.size() >= g.max_elements)
          throw errors::BoundError("ball enumeration exceeds max_elements = " +
                                   std::to_string(g.max_elements));
        nfs.push_back(std::move(nf));
      }
    }
  }
  std::vector<Element> out;
  out.reserve(nfs.size());
  for (const Key& k : nfs) out.push_back(Engine::make(g, word_of(k)));
  return out;
}

std::vector<GenSet> subsets(GenSet s) {
  if (s.size() > 20) throw errors::BoundError("too many generators for subset enumeration");
  std::vector<Generator> gens = s.elements();
  std::vector<GenSet> out;
  out.reserve(std::size_t{1} << gens.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    GenSet sub;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((mask >> i) & 1) sub.add(gens[i]);
    out.push_back(sub);
  }
  return out;
}

Word parse_word(const CoxeterGraph& g, std::string_view text) {
  Word w;
  for (const std::string& tok : split_tokens(text)) {
    if (tok == "1" && !g.find("1")) continue;
    std::optional<Generator> s = g.find(tok);
    if (!s) throw errors::ParseError("unknown generator: " + tok);
    w.push_back(*s);
  }
  return w;
}

GenSet parse_subset(const CoxeterGraph& g, std::string_view text) {
  GenSet out;
  std::string cur;
  auto flush = [&] {
    // strip surrounding blanks
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw errors::ParseError("empty name in subset list");
    std::string name = cur.substr(a, b - a + 1);
    std::optional<Generator> s = g.find(name);
    if (!s) throw errors::ParseError("unknown generator: " + name);
    out.add(*s);
    cur.clear();
  };
  bool any = false;
  for (char c : text) {
    if (c == ',') {
      flush();
      any = true;
    } else {
      cur.push_back(c);
      if (c != ' ' && c != '\t') any = true;
    }
  }
  if (any) flush();
  return out;
}

std::string format_word(const CoxeterGraph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += g.name(w[i]);
  }
  return out;
}

std::string format_subset(const CoxeterGraph& g, GenSet s) {
  std::string out;
  bool first = true;
  for (Generator x : s.elements()) {
    if (!first) out.push_back(',');
    out += g.name(x);
    first = false;
  }
  return out;
}

} // namespace coxeter
