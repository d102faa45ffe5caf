#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "parabolic/braid.hpp"

using braid::BraidWord;
using braid::GarsideNormalForm;
using braid::Letter;
using braid::Permutation;

namespace {

BraidWord word(int strands, std::vector<Letter> letters) {
  return BraidWord(strands, std::move(letters));
}

// Descent positions of a permutation, recomputed here so the left-weighted
// invariant is checked without touching library internals.
std::set<int> descents(const Permutation& p) {
  std::set<int> out;
  for (int i = 0; i + 1 < p.degree(); ++i)
    if (p[i] > p[i + 1]) out.insert(i);
  return out;
}

BraidWord random_braid(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> idx_d(1, strands - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  std::vector<Letter> letters(static_cast<std::size_t>(len_d(rng)));
  for (Letter& l : letters) l = {idx_d(rng), sign_d(rng) ? 1 : -1};
  return BraidWord(strands, std::move(letters));
}

} // namespace

TEST_CASE("permutation basics") {
  Permutation id(3);
  CHECK(id.is_identity());
  Permutation t0 = Permutation::adjacent_transposition(3, 0);
  Permutation t1 = Permutation::adjacent_transposition(3, 1);
  Permutation c = compose(t0, t1);
  CHECK(c[0] == 2);
  CHECK(c[1] == 0);
  CHECK(c[2] == 1);
  CHECK(compose(c, c.inverse()).is_identity());

  Permutation d = Permutation::half_twist(4);
  CHECK(d[0] == 3);
  CHECK(d[3] == 0);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 0, 1}), errors::PreconditionError);
}

TEST_CASE("permutation image of a braid word") {
  CHECK(braid::perm_of(word(3, {{1, 1}})) ==
        Permutation::adjacent_transposition(3, 0));
  CHECK(braid::perm_of(word(3, {})).is_identity());
  CHECK(braid::perm_of(word(3, {{1, 1}, {2, 1}, {1, 1}})) ==
        braid::perm_of(word(3, {{2, 1}, {1, 1}, {2, 1}})));
  CHECK(braid::perm_of(word(3, {{1, -1}})) ==
        Permutation::adjacent_transposition(3, 0));
}

TEST_CASE("normal form of the half twist and of cancelling pairs") {
  GarsideNormalForm delta = braid::garside_nf(word(3, {{1, 1}, {2, 1}, {1, 1}}));
  CHECK(delta.delta_power == 1);
  CHECK(delta.factors.empty());
  CHECK(delta == braid::garside_nf(word(3, {{2, 1}, {1, 1}, {2, 1}})));

  GarsideNormalForm trivial = braid::garside_nf(word(3, {{1, 1}, {1, -1}}));
  CHECK(trivial.delta_power == 0);
  CHECK(trivial.factors.empty());
  CHECK(braid::garside_nf(word(4, {})).factors.empty());

  GarsideNormalForm neg = braid::garside_nf(word(3, {{1, -1}}));
  CHECK(neg.delta_power == -1);
  CHECK(neg.factors.size() == 1);
  CHECK_FALSE(neg.factors[0].is_identity());
  CHECK(neg.factors[0] != Permutation::half_twist(3));
}

TEST_CASE("the square of the half twist is central") {
  std::vector<Letter> delta2;
  for (int rep = 0; rep < 2; ++rep)
    for (int i : {1, 2, 1}) delta2.push_back({i, 1});
  for (int i : {1, 2}) {
    std::vector<Letter> left = delta2;
    left.push_back({i, 1});
    std::vector<Letter> right{{i, 1}};
    right.insert(right.end(), delta2.begin(), delta2.end());
    CHECK(braid::garside_nf(word(3, left)) == braid::garside_nf(word(3, right)));
  }
}

TEST_CASE("normal forms are left weighted") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    BraidWord w = random_braid(rng, 4, 14);
    GarsideNormalForm nf = braid::garside_nf(w);
    Permutation delta = Permutation::half_twist(4);
    for (const Permutation& f : nf.factors) {
      CHECK_FALSE(f.is_identity());
      CHECK(f != delta);
    }
    for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
      std::set<int> finishing = descents(nf.factors[i].inverse());
      std::set<int> starting = descents(nf.factors[i + 1]);
      for (int d : starting) CHECK(finishing.count(d) == 1);
    }
  }
}

TEST_CASE("normal form converts back to the same braid") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord w = random_braid(rng, 4, 12);
    GarsideNormalForm nf = braid::garside_nf(w);
    std::vector<Letter> rebuilt;
    long long k = nf.delta_power;
    std::vector<int> twist = braid::simple_word(Permutation::half_twist(4));
    for (long long rep = 0; rep < std::llabs(k); ++rep)
      for (int i : twist) rebuilt.push_back({i, k > 0 ? 1 : -1});
    for (const Permutation& f : nf.factors)
      for (int i : braid::simple_word(f)) rebuilt.push_back({i, 1});
    CHECK(braid::words_equal(w, word(4, rebuilt)));
  }
}

TEST_CASE("word equality") {
  BraidWord w = word(3, {{1, 1}, {2, -1}});
  CHECK(braid::words_equal(w, w));
  CHECK_FALSE(braid::words_equal(word(3, {{1, 1}}), word(3, {{2, 1}})));
  CHECK(braid::words_equal(word(3, {{1, 1}, {2, 1}, {1, 1}}),
                           word(3, {{2, 1}, {1, 1}, {2, 1}})));
  CHECK(braid::words_equal(word(3, {{1, 1}, {2, 1}, {2, -1}}), word(3, {{1, 1}})));
  CHECK_THROWS_AS(braid::words_equal(word(3, {}), word(4, {})),
                  errors::PreconditionError);
}

TEST_CASE("equality survives relation rewrites and free insertions") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord w = random_braid(rng, 4, 10);
    std::vector<Letter> vl = w.letters();
    std::uniform_int_distribution<std::size_t> pos_d(0, vl.size());
    std::size_t at = pos_d(rng);
    std::uniform_int_distribution<int> idx_d(1, 3);
    int idx = idx_d(rng);
    vl.insert(vl.begin() + static_cast<std::ptrdiff_t>(at), {idx, 1});
    vl.insert(vl.begin() + static_cast<std::ptrdiff_t>(at) + 1, {idx, -1});
    CHECK(braid::words_equal(w, word(4, vl)));
  }
}

TEST_CASE("deleting strands") {
  BraidWord w = word(4, {{3, 1}, {1, 1}, {3, -1}});
  BraidWord cut = braid::delete_strands(w, {1, 2});
  CHECK(cut.strands() == 2);
  REQUIRE(cut.size() == 1);
  CHECK(cut.letters()[0] == Letter{1, 1});

  BraidWord inner = word(4, {{1, 1}, {2, -1}, {1, 1}});
  CHECK_THROWS_AS(braid::delete_strands(inner, {1, 2}), errors::PreconditionError);

  BraidWord low = word(4, {{1, 1}, {1, -1}, {1, 1}});
  CHECK(braid::delete_strands(low, {1, 2}) == word(2, {{1, 1}, {1, -1}, {1, 1}}));

  CHECK(braid::delete_strands(word(4, {}), {1, 2, 3}) == word(3, {}));
  CHECK_THROWS_AS(braid::delete_strands(word(3, {}), {0, 1}), errors::PreconditionError);
  CHECK_THROWS_AS(braid::delete_strands(word(3, {{1, 1}}), {1}),
                  errors::PreconditionError);
}

TEST_CASE("deleting keeps crossings between non-adjacent kept strands") {
  // Strands 1 and 3 cross once strand 2 has been braided out of the way.
  BraidWord w = word(3, {{2, 1}, {1, 1}, {2, -1}});
  BraidWord cut = braid::delete_strands(w, {1, 3});
  CHECK(cut.strands() == 2);
  REQUIRE(cut.size() == 1);
  CHECK(cut.letters()[0] == Letter{1, 1});
}

TEST_CASE("embedding in a larger braid group") {
  BraidWord w = word(3, {{1, 1}, {2, -1}, {1, 1}});
  BraidWord big = braid::embed(w, 5);
  CHECK(big.strands() == 5);
  CHECK(braid::delete_strands(big, {1, 2, 3}) == w);
  CHECK(braid::embed(word(3, {}), 6) == word(6, {}));
  CHECK_THROWS_AS(braid::embed(word(4, {{3, 1}}), 3), errors::PreconditionError);
}

TEST_CASE("deletion undoes scrambling inside the larger group") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w = random_braid(rng, 2, 6);
    std::vector<Letter> noisy = braid::embed(w, 4).letters();
    for (int k = 0; k < 6; ++k) {
      std::uniform_int_distribution<std::size_t> at_d(0, noisy.size());
      std::size_t at = at_d(rng);
      noisy.insert(noisy.begin() + static_cast<std::ptrdiff_t>(at), {3, 1});
      noisy.insert(noisy.begin() + static_cast<std::ptrdiff_t>(at) + 1, {3, -1});
    }
    BraidWord cut = braid::delete_strands(BraidWord(4, noisy), {1, 2});
    CHECK(cut.size() <= noisy.size());
    CHECK(braid::words_equal(cut, w));
  }
}

TEST_CASE("distinct permutations give distinct braids") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord a = random_braid(rng, 4, 8);
    BraidWord b = random_braid(rng, 4, 8);
    if (braid::perm_of(a) != braid::perm_of(b)) CHECK_FALSE(braid::words_equal(a, b));
  }
}

TEST_CASE("braid word parsing and formatting") {
  BraidWord w = braid::parse_braid_word(3, "s1 s2^-1 s1");
  CHECK(w == word(3, {{1, 1}, {2, -1}, {1, 1}}));
  CHECK(braid::parse_braid_word(3, "1").size() == 0);
  CHECK(braid::format_braid_word(w) == "s1 s2^-1 s1");
  CHECK(braid::format_braid_word(word(3, {})) == "1");
  CHECK_THROWS_AS(braid::parse_braid_word(3, "s3"), errors::ParseError);
  CHECK_THROWS_AS(braid::parse_braid_word(3, "q1"), errors::ParseError);
  CHECK_THROWS_AS(braid::parse_braid_word(3, "s0"), errors::ParseError);

  GarsideNormalForm nf = braid::garside_nf(braid::parse_braid_word(3, "s1 s1"));
  CHECK(braid::format_garside(nf) == "delta^0 . (s1) . (s1)");
}
