#include "parabolic/braid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace braid {

Permutation::Permutation(int n) {
  if (n < 1) throw errors::PreconditionError("permutation degree must be positive");
  map_.resize(static_cast<std::size_t>(n));
  std::iota(map_.begin(), map_.end(), 0);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || hit[static_cast<std::size_t>(v)])
      throw errors::PreconditionError("not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  p.map_ = std::move(images);
  return p;
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  Permutation p(n);
  if (i < 0 || i + 1 >= n) throw errors::PreconditionError("transposition index out of range");
  std::swap(p.map_[static_cast<std::size_t>(i)], p.map_[static_cast<std::size_t>(i) + 1]);
  return p;
}

Permutation Permutation::half_twist(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.map_[static_cast<std::size_t>(i)] = n - 1 - i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (map_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.map_[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw errors::PreconditionError("permutation degrees differ");
  Permutation r(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    r.map_[static_cast<std::size_t>(i)] = q.map_[static_cast<std::size_t>(p.map_[static_cast<std::size_t>(i)])];
  return r;
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw errors::PreconditionError("strand count must be positive");
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index >= strands)
      throw errors::PreconditionError("generator index out of range for strand count");
    if (l.sign != 1 && l.sign != -1) throw errors::PreconditionError("letter sign must be +-1");
  }
}

Permutation perm_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (const Letter& l : w.letters())
    p = compose(p, Permutation::adjacent_transposition(w.strands(), l.index - 1));
  return p;
}

namespace {

// Positions where the braid can begin with si: descents of p at the start.
std::uint64_t starting_mask(const Permutation& p) {
  std::uint64_t m = 0;
  for (int i = 0; i + 1 < p.degree(); ++i)
    if (p[i] > p[i + 1]) m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t finishing_mask(const Permutation& p) { return starting_mask(p.inverse()); }

// Flip automorphism: conjugation by the half twist, si -> s(n-i).
Permutation tau(const Permutation& p) {
  Permutation d = Permutation::half_twist(p.degree());
  return compose(d, compose(p, d));
}

// Make the pair (a, b) left-weighted by moving crossings from b into a.
bool slide_pair(Permutation& a, Permutation& b) {
  const int n = a.degree();
  bool changed = false;
  for (;;) {
    std::uint64_t need = starting_mask(b) & ~finishing_mask(a);
    if (!need) return changed;
    int i = std::countr_zero(need);
    Permutation t = Permutation::adjacent_transposition(n, i);
    a = compose(a, t);
    b = compose(t, b);
    changed = true;
  }
}

} // namespace

GarsideNormalForm garside_nf(const BraidWord& w) {
  const int n = w.strands();
  const Permutation delta = Permutation::half_twist(n);

  GarsideNormalForm nf;
  nf.strands = n;
  std::vector<Permutation>& fs = nf.factors;

  for (const Letter& l : w.letters()) {
    Permutation t = Permutation::adjacent_transposition(n, l.index - 1);
    if (l.sign > 0) {
      fs.push_back(t);
    } else {
      // si^-1 = Delta^-1 (Delta si^-1); push the Delta^-1 to the front.
      nf.delta_power -= 1;
      for (Permutation& f : fs) f = tau(f);
      fs.push_back(compose(delta, t));
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < fs.size(); ++j)
      if (slide_pair(fs[j], fs[j + 1])) changed = true;
  }

  // After the sweep, half twists sit at the front and identities at the back.
  std::size_t lead = 0;
  while (lead < fs.size() && fs[lead] == delta) ++lead;
  nf.delta_power += static_cast<long long>(lead);
  std::size_t tail = fs.size();
  while (tail > lead && fs[tail - 1].is_identity()) --tail;
  fs.assign(fs.begin() + static_cast<std::ptrdiff_t>(lead),
            fs.begin() + static_cast<std::ptrdiff_t>(tail));
  return nf;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw errors::PreconditionError("braid words on different strand counts");
  return garside_nf(a) == garside_nf(b);
}

BraidWord delete_strands(const BraidWord& w, const std::vector<int>& keep) {
  const int n = w.strands();
  if (keep.empty()) throw errors::PreconditionError("keep set must be nonempty");
  std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
  int prev = 0;
  for (int s : keep) {
    if (s < 1 || s > n) throw errors::PreconditionError("kept strand out of range");
    if (s <= prev) throw errors::PreconditionError("keep set must be strictly increasing");
    kept[static_cast<std::size_t>(s)] = true;
    prev = s;
  }
  Permutation p = perm_of(w);
  for (int s : keep)
    if (!kept[static_cast<std::size_t>(p[s - 1]) + 1])
      throw errors::PreconditionError("kept strands do not end in kept positions");

  // occ[pos] = strand currently occupying that position (0-based positions,
  // 1-based strand labels).
  std::vector<int> occ(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) occ[static_cast<std::size_t>(i)] = i + 1;

  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const int pos = l.index - 1;
    const int a = occ[static_cast<std::size_t>(pos)];
    const int b = occ[static_cast<std::size_t>(pos) + 1];
    if (kept[static_cast<std::size_t>(a)] && kept[static_cast<std::size_t>(b)]) {
      int rank = 0;
      for (int q = 0; q <= pos; ++q)
        if (kept[static_cast<std::size_t>(occ[static_cast<std::size_t>(q)])]) ++rank;
      out.push_back({rank, l.sign});
    }
    std::swap(occ[static_cast<std::size_t>(pos)], occ[static_cast<std::size_t>(pos) + 1]);
  }
  return BraidWord(static_cast<int>(keep.size()), std::move(out));
}

BraidWord embed(const BraidWord& w, int strands) {
  if (strands < w.strands())
    throw errors::PreconditionError("cannot embed into fewer strands");
  return BraidWord(strands, w.letters());
}

std::vector<int> simple_word(const Permutation& p) {
  std::vector<int> out;
  Permutation cur = p;
  for (;;) {
    std::uint64_t s = starting_mask(cur);
    if (!s) break;
    int i = std::countr_zero(s);
    out.push_back(i + 1);
    cur = compose(Permutation::adjacent_transposition(cur.degree(), i), cur);
  }
  return out;
}

BraidWord parse_braid_word(int strands, std::string_view text) {
  std::vector<Letter> letters;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok == "1") {
      tok.clear();
      return;
    }
    int sign = 1;
    std::string body = tok;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      sign = -1;
      body = body.substr(0, body.size() - 3);
    }
    if (body.size() < 2 || body[0] != 's')
      throw errors::ParseError("malformed braid letter: " + tok);
    int idx = 0;
    for (std::size_t i = 1; i < body.size(); ++i) {
      if (body[i] < '0' || body[i] > '9')
        throw errors::ParseError("malformed braid letter: " + tok);
      idx = idx * 10 + (body[i] - '0');
    }
    if (idx < 1 || idx >= strands)
      throw errors::ParseError("braid generator out of range: " + tok);
    letters.push_back({idx, sign});
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
      flush();
    else
      tok.push_back(c);
  }
  flush();
  return BraidWord(strands, std::move(letters));
}

std::string format_braid_word(const BraidWord& w) {
  if (w.letters().empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out.push_back(' ');
    out += "s" + std::to_string(w.letters()[i].index);
    if (w.letters()[i].sign < 0) out += "^-1";
  }
  return out;
}

std::string format_garside(const GarsideNormalForm& nf) {
  std::string out = "delta^" + std::to_string(nf.delta_power);
  for (const Permutation& f : nf.factors) {
    out += " . (";
    std::vector<int> word = simple_word(f);
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) out.push_back(' ');
      out += "s" + std::to_string(word[i]);
    }
    out.push_back(')');
  }
  return out;
}

} // namespace braid
