#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "tmcg/freegroup.hpp"

using namespace tmcg;
using tmcg::testing::Rng;

namespace {
const Alphabet abc = Alphabet::letters(3);
Word w(const char* s) { return abc.parse(s); }
}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(w("a a^-1").empty());
  CHECK(w("a b b^-1 a") == w("a^2"));
  CHECK(abc.format(w("a b b^-1 a")) == "a^2");
  CHECK(abc.format(Word{}) == "1");
}

TEST_CASE("reduce: w w^-1 is trivial and reduction is idempotent") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto raw = tmcg::testing::random_letters(rng, 3, rng.uniform(0, 20));
    std::vector<Letter> doubled = raw;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) doubled.push_back(-*it);
    CHECK(Word::reduce(doubled).empty());

    auto longer = tmcg::testing::random_letters(rng, 3, rng.uniform(0, 50));
    Word once = Word::reduce(longer);
    CHECK(Word::reduce(once.letters()) == once);
    for (std::size_t i = 1; i < once.size(); ++i) CHECK(once[i] != -once[i - 1]);
  }
}

TEST_CASE("reduce rejects letter 0") { CHECK_THROWS_AS(Word::reduce(std::vector<Letter>{1, 0}), std::invalid_argument); }

TEST_CASE("apply on identity and conjugation") {
  const Word sample = w("a b^-1 c a");
  CHECK(FreeAutomorphism::identity(3).apply(sample) == sample);
  CHECK(FreeAutomorphism::conjugation(3, w("a")).apply(w("b")) == w("a b a^-1"));
}

TEST_CASE("apply is a homomorphism and lengths are subadditive") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    FreeAutomorphism phi = tmcg::testing::random_short_automorphism(rng, 3, 4);
    Word u = tmcg::testing::random_reduced(rng, 3, 12), v = tmcg::testing::random_reduced(rng, 3, 12);
    CHECK(phi.apply(u * v) == phi.apply(u) * phi.apply(v));
    std::size_t bound = 0;
    for (Letter l : u.letters()) bound += phi.image(generator_of(l)).size();
    CHECK(phi.apply(u).size() <= bound);
  }
}

TEST_CASE("apply rejects letters outside the alphabet") {
  CHECK_THROWS_AS(FreeAutomorphism::identity(2).apply(w("c")), std::invalid_argument);
}

TEST_CASE("construction checks the stored inverse") {
  std::vector<Word> img{w("a b"), w("b")};
  CHECK_NOTHROW(FreeAutomorphism(2, img, {w("a b^-1"), w("b")}));
  CHECK_THROWS_AS(FreeAutomorphism(2, img, {w("a b"), w("b")}), std::invalid_argument);
}

TEST_CASE("compose: identity, inverse, associativity") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    FreeAutomorphism f = tmcg::testing::random_short_automorphism(rng, 3, 4);
    FreeAutomorphism g = tmcg::testing::random_short_automorphism(rng, 3, 4);
    FreeAutomorphism h = tmcg::testing::random_short_automorphism(rng, 3, 4);
    CHECK(compose(f, FreeAutomorphism::identity(3)) == f);
    CHECK(compose(f, f.inverse()) == FreeAutomorphism::identity(3));
    for (int gen = 0; gen < 3; ++gen) CHECK(compose(f, f.inverse()).apply(Word::generator(gen)) == Word::generator(gen));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    // (f o g)(x) = f(g(x))
    Word x = tmcg::testing::random_reduced(rng, 3, 8);
    CHECK(compose(f, g).apply(x) == f.apply(g.apply(x)));
  }
  CHECK_THROWS_AS(compose(FreeAutomorphism::identity(2), FreeAutomorphism::identity(3)), std::invalid_argument);
}

TEST_CASE("conjugacy canonical form") {
  CHECK(CyclicWord(w("a b a^-1")) == CyclicWord(w("b")));
  CHECK(CyclicWord(w("b a")) == CyclicWord(w("a b")));
  CHECK(CyclicWord(w("a b")) != CyclicWord(w("a b^-1")));
  CHECK(is_power_of(w("c a b^3 a^-1 c^-1"), w("c a b a^-1 c^-1")));
  CHECK_FALSE(is_power_of(w("a b a b a"), w("a b")));
  CHECK(w("a b").pow(-2) == w("b^-1 a^-1 b^-1 a^-1"));
}

TEST_CASE("is_inner examples") {
  auto id = is_inner(FreeAutomorphism::identity(3));
  REQUIRE(id);
  CHECK(id->empty());

  auto c = is_inner(FreeAutomorphism::conjugation(3, w("a b")));
  REQUIRE(c);
  CHECK(*c == w("a b"));

  const Alphabet ab = Alphabet::letters(2);
  FreeAutomorphism swap(2, {ab.parse("b"), ab.parse("a")}, {ab.parse("b"), ab.parse("a")});
  CHECK_FALSE(is_inner(swap));
  CHECK_FALSE(tmcg::testing::brute_force_conjugator(swap, tmcg::testing::all_reduced_words(2, 6)));
}

TEST_CASE("is_inner recovers the conjugator of an inner automorphism") {
  Rng rng(14);
  for (int rank : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      Word c = tmcg::testing::random_reduced(rng, rank, 15);
      auto found = is_inner(FreeAutomorphism::conjugation(rank, c));
      REQUIRE(found);
      CHECK(*found == c);
    }
  }
}

TEST_CASE("is_inner agrees with brute-force enumeration on rank <= 3") {
  Rng rng(15);
  for (int rank : {2, 3}) {
    const auto candidates = tmcg::testing::all_reduced_words(rank, 6);
    for (int trial = 0; trial < 100; ++trial) {
      FreeAutomorphism phi = tmcg::testing::random_short_automorphism(rng, rank, 4);
      auto fast = is_inner(phi);
      auto slow = tmcg::testing::brute_force_conjugator(phi, candidates);
      CHECK(fast.has_value() == slow.has_value());
      if (fast && slow) CHECK(*fast == *slow);
    }
  }
}

TEST_CASE("peripheral_check") {
  // Rank-3 stand-in: two "puncture" classes a and b a^-1 b^-1.
  PeripheralStructure p{{CyclicWord(w("a")), CyclicWord(w("b a^-1 b^-1 c"))}};
  auto id = peripheral_check(FreeAutomorphism::identity(3), p);
  REQUIRE(id);
  CHECK(*id == std::vector<int>{0, 1});

  // Sends the first class to c, which is no peripheral class.
  FreeAutomorphism bad(3, {w("c"), w("b"), w("a")}, {w("c"), w("b"), w("a")});
  CHECK_FALSE(peripheral_check(bad, p));

  // Inverse classes are accepted.
  FreeAutomorphism flip(3, {w("a^-1"), w("b"), w("c")}, {w("a^-1"), w("b"), w("c")});
  CHECK_FALSE(peripheral_check(flip, p));  // second class is not preserved
  PeripheralStructure q{{CyclicWord(w("a")), CyclicWord(w("b"))}};
  auto f = peripheral_check(flip, q);
  REQUIRE(f);
  CHECK(*f == std::vector<int>{0, 1});
}

TEST_CASE("alphabet") {
  Alphabet t = Alphabet::torus(3);
  CHECK(t.rank() == 4);
  CHECK(t.format(t.parse("A B3^-2 B1")) == "A B3^-2 B1");
  CHECK_THROWS_AS(t.parse("A B4"), std::invalid_argument);
  CHECK_THROWS_AS(t.parse("A^x"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
}
