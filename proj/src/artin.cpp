#include "parabolic/artin.hpp"

#include <algorithm>

#include "parabolic/braid.hpp"

namespace artin {

using coxeter::CoxeterGraph;
using coxeter::Element;
using coxeter::Generator;
using coxeter::GenSet;

namespace {

void check_word(const CoxeterGraph& g, const ArtinWord& w) {
  for (const Letter& l : w) {
    if (l.generator < 0 || l.generator >= g.rank())
      throw errors::PreconditionError("word letter out of range");
    if (l.sign != 1 && l.sign != -1)
      throw errors::PreconditionError("letter sign must be +-1");
  }
}

} // namespace

ArtinWord inverse(const ArtinWord& w) {
  ArtinWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->sign});
  return out;
}

Element theta(const CoxeterGraph& g, const ArtinWord& w) {
  check_word(g, w);
  Element e = coxeter::identity_element(g);
  for (const Letter& l : w) e = coxeter::multiply(e, l.generator);
  return e;
}

std::pair<ArtinWord, ProjectionTrace> project_word(const CoxeterGraph& g, const ArtinWord& w,
                                                   GenSet t) {
  check_word(g, w);
  if (!t.subset_of(g.all()))
    throw errors::PreconditionError("target is not a subset of the generators");

  ArtinWord out;
  ProjectionTrace trace;
  trace.steps.reserve(w.size());

  Element u = coxeter::identity_element(g);
  Element w_prev = u; // minimal part of the decomposition of the previous prefix
  for (const Letter& l : w) {
    u = coxeter::multiply(u, l.generator);
    auto [v_cur, w_cur] = coxeter::parabolic_decompose(u, t);

    const Element& base = (l.sign > 0) ? w_prev : w_cur;
    std::optional<Generator> conj = coxeter::conjugate_into_generators(base, l.generator);

    std::optional<Letter> emitted;
    if (conj && t.contains(*conj)) {
      emitted = Letter{*conj, l.sign};
      out.push_back(*emitted);
    }
    trace.steps.push_back({l, u, v_cur, w_cur, conj, emitted});
    w_prev = w_cur;
  }
  return {std::move(out), std::move(trace)};
}

ArtinWord free_reduce(const ArtinWord& w) {
  ArtinWord out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<int> odd_components(const CoxeterGraph& g) {
  const int n = g.rank();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = g.label(i, j);
      if (m != coxeter::kInfinity && m % 2 == 1) {
        int a = root(i), b = root(j);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int r = root(i);
    if (comp[static_cast<std::size_t>(r)] < 0) comp[static_cast<std::size_t>(r)] = next++;
    comp[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(r)];
  }
  return comp;
}

std::vector<long long> abelianized_image(const CoxeterGraph& g, const ArtinWord& w) {
  check_word(g, w);
  std::vector<int> comp = odd_components(g);
  int k = 0;
  for (int c : comp) k = std::max(k, c + 1);
  std::vector<long long> image(static_cast<std::size_t>(k), 0);
  for (const Letter& l : w) image[static_cast<std::size_t>(comp[static_cast<std::size_t>(l.generator)])] += l.sign;
  return image;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next() {
  // xoshiro256**
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw errors::PreconditionError("empty draw");
  const std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    std::uint64_t v = next();
    if (v < bound) return static_cast<std::size_t>(v % n);
  }
}

namespace {

struct BraidSegment {
  std::size_t pos;
  Generator a;
  Generator b;
  int m;
  int sign;
};

// All positions where one side of a braid relation, uniformly signed, occurs.
std::vector<BraidSegment> braid_segments(const CoxeterGraph& g, const ArtinWord& w) {
  std::vector<BraidSegment> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const Generator a = w[p].generator;
    const Generator b = w[p + 1].generator;
    if (a == b) continue;
    const int sign = w[p].sign;
    if (w[p + 1].sign != sign) continue;
    const int m = g.label(a, b);
    if (m == coxeter::kInfinity || p + static_cast<std::size_t>(m) > w.size()) continue;
    bool ok = true;
    for (int i = 2; i < m; ++i) {
      const Letter& l = w[p + static_cast<std::size_t>(i)];
      if (l.generator != (i % 2 == 0 ? a : b) || l.sign != sign) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back({p, a, b, m, sign});
  }
  return out;
}

} // namespace

ArtinWord scramble(const CoxeterGraph& g, const ArtinWord& w, int steps, std::uint64_t seed) {
  check_word(g, w);
  if (steps < 0) throw errors::PreconditionError("step count must be nonnegative");
  Rng rng(seed);
  ArtinWord cur = w;
  const std::size_t rank = static_cast<std::size_t>(g.rank());
  for (int step = 0; step < steps; ++step) {
    std::vector<std::size_t> deletions;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i].generator == cur[i + 1].generator && cur[i].sign == -cur[i + 1].sign)
        deletions.push_back(i);
    std::vector<BraidSegment> segments = braid_segments(g, cur);
    const std::size_t insertions = (cur.size() + 1) * rank * 2;

    const std::size_t total = deletions.size() + segments.size() + insertions;
    if (total == 0) break; // rank 0 graph, nothing to do
    std::size_t pick = rng.below(total);

    if (pick < deletions.size()) {
      std::size_t at = deletions[pick];
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(at),
                cur.begin() + static_cast<std::ptrdiff_t>(at) + 2);
      continue;
    }
    pick -= deletions.size();
    if (pick < segments.size()) {
      const BraidSegment& seg = segments[pick];
      for (int i = 0; i < seg.m; ++i) {
        Letter& l = cur[seg.pos + static_cast<std::size_t>(i)];
        l.generator = (i % 2 == 0) ? seg.b : seg.a;
        l.sign = seg.sign;
      }
      continue;
    }
    pick -= segments.size();
    const std::size_t at = pick / (rank * 2);
    const std::size_t rest = pick % (rank * 2);
    const Generator s = static_cast<Generator>(rest / 2);
    const int first_sign = (rest % 2 == 0) ? 1 : -1;
    Letter pair[2] = {{s, first_sign}, {s, -first_sign}};
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(at), pair, pair + 2);
  }
  return cur;
}

bool all_labels_infinite(const CoxeterGraph& g) {
  for (int i = 0; i < g.rank(); ++i)
    for (int j = i + 1; j < g.rank(); ++j)
      if (g.label(i, j) != coxeter::kInfinity) return false;
  return true;
}

std::optional<std::vector<Generator>> type_a_path(const CoxeterGraph& g) {
  const int n = g.rank();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Generator>{0};
  std::vector<std::vector<Generator>> adj(static_cast<std::size_t>(n));
  int edge_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = g.label(i, j);
      if (m == 3) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
        ++edge_count;
      } else if (m != 2) {
        return std::nullopt;
      }
    }
  if (edge_count != n - 1) return std::nullopt;
  int start = -1;
  for (int i = 0; i < n; ++i) {
    const std::size_t d = adj[static_cast<std::size_t>(i)].size();
    if (d > 2) return std::nullopt;
    if (d == 1 && start < 0) start = i;
    if (d == 0) return std::nullopt; // disconnected (n >= 2)
  }
  if (start < 0) return std::nullopt; // cycle
  std::vector<Generator> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int nb : adj[static_cast<std::size_t>(cur)])
      if (nb != prev) next = nb;
    if (next < 0) return std::nullopt; // disconnected
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

std::optional<Oracle> best_oracle(const CoxeterGraph& g) {
  if (all_labels_infinite(g)) {
    Oracle o;
    o.name = "free";
    o.equal = [](const ArtinWord& a, const ArtinWord& b) {
      return free_reduce(a) == free_reduce(b);
    };
    return o;
  }
  if (auto path = type_a_path(g)) {
    const int strands = g.rank() + 1;
    std::vector<int> position(static_cast<std::size_t>(g.rank()), 0);
    for (std::size_t i = 0; i < path->size(); ++i)
      position[static_cast<std::size_t>((*path)[i])] = static_cast<int>(i) + 1;
    Oracle o;
    o.name = "garside";
    o.equal = [strands, position](const ArtinWord& a, const ArtinWord& b) {
      auto to_braid = [&](const ArtinWord& w) {
        std::vector<braid::Letter> letters;
        letters.reserve(w.size());
        for (const Letter& l : w)
          letters.push_back({position[static_cast<std::size_t>(l.generator)], l.sign});
        return braid::BraidWord(strands, std::move(letters));
      };
      return braid::words_equal(to_braid(a), to_braid(b));
    };
    return o;
  }
  return std::nullopt;
}

ConvexityReport check_convexity(const CoxeterGraph& g, const ArtinWord& w, GenSet t,
                                const Oracle* oracle) {
  ConvexityReport r;
  auto [tau, trace] = project_word(g, w, t);
  r.tau = std::move(tau);
  r.input_length = w.size();
  r.output_length = r.tau.size();
  r.lengths_equal = r.input_length == r.output_length;
  r.input_all_in_target = std::all_of(w.begin(), w.end(),
                                      [&](const Letter& l) { return t.contains(l.generator); });
  r.length_contract_ok =
      r.output_length <= r.input_length && (!r.lengths_equal || r.input_all_in_target);
  Element theta_w = theta(g, w);
  r.theta_in_target = coxeter::in_parabolic(theta_w, t);
  r.theta_match = theta(g, r.tau) == theta_w;
  r.abelian_match = abelianized_image(g, r.tau) == abelianized_image(g, w);
  if (oracle != nullptr) {
    r.oracle_name = oracle->name;
    if (r.theta_in_target) r.oracle_equal = oracle->equal(r.tau, w);
  }
  return r;
}

ArtinWord parse_artin_word(const CoxeterGraph& g, std::string_view text) {
  ArtinWord w;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok == "1" && !g.find("1")) {
      tok.clear();
      return;
    }
    int sign = 1;
    std::string body = tok;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      sign = -1;
      body = body.substr(0, body.size() - 3);
    }
    std::optional<Generator> s = g.find(body);
    if (!s) throw errors::ParseError("unknown generator: " + tok);
    w.push_back({*s, sign});
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
      flush();
    else
      tok.push_back(c);
  }
  flush();
  return w;
}

std::string format_artin_word(const CoxeterGraph& g, const ArtinWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += g.name(w[i].generator);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

} // namespace artin
