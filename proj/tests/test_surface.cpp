#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "tmcg/surface.hpp"

using namespace tmcg;
using tmcg::testing::Rng;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Curve loop_through(std::vector<std::pair<Rational, Rational>> pts) {
  Curve c{CurveKind::Loop, 0, 0, {}};
  for (auto& [x, y] : pts) c.points.push_back({x, y});
  return c;
}

// Small counterclockwise square of half-size r around z.
Curve square_around(const Point& z, const Rational& r) {
  return loop_through({{z.x + r, z.y - r}, {z.x + r, z.y + r}, {z.x - r, z.y + r}, {z.x - r, z.y - r}, {z.x + r, z.y - r}});
}

}  // namespace

TEST_CASE("model rejects fewer than two punctures") { CHECK_THROWS_AS(TorusModel(1), std::invalid_argument); }

TEST_CASE("standard loops trace to their generators") {
  for (int n : {2, 3, 5}) {
    TorusModel m(n);
    const Alphabet al = m.alphabet();
    CHECK(al.format(traced_word(m, m.A())) == "A");
    for (int k = 1; k <= n; ++k) CHECK(traced_word(m, m.B(k)) == Word::generator(k));
    for (int g = 0; g <= n; ++g) CHECK(traced_word(m, m.based_generator(g)) == Word::generator(g));
  }
}

TEST_CASE("loops around cut vertices are trivial") {
  for (int n : {2, 3, 4}) {
    TorusModel m(n);
    const Rational r = q(1, 16 * n);
    CHECK(traced_word(m, square_around({Rational(0), Rational(0)}, r)).empty());
    CHECK(traced_word(m, square_around({Rational(1), Rational(1)}, r)).empty());
    for (int k = 1; k <= n; ++k) {
      CHECK(traced_word(m, square_around({m.puncture_x(k), Rational(1)}, r)).empty());
      // Around a point of a slit, of the horizontal edge, of the vertical edge.
      CHECK(traced_word(m, square_around({m.puncture_x(k), q(3, 4)}, r)).empty());
      CHECK(traced_word(m, square_around({m.b_position(k), Rational(0)}, r)).empty());
    }
    CHECK(traced_word(m, square_around({Rational(0), q(1, 3)}, r)).empty());
  }
}

TEST_CASE("puncture loops and their product") {
  TorusModel m(3);
  const Alphabet al = m.alphabet();
  CHECK(al.format(m.peripheral_word(2)) == "B2 B1^-1");
  CHECK(al.format(m.peripheral_word(1)) == "B1 A^-1 B3^-1 A");
  Word prod;
  for (int k = 3; k >= 1; --k) prod *= m.peripheral_word(k);
  CHECK(al.format(prod) == "B3 A^-1 B3^-1 A");
  // A loop around all punctures is the commutator class.
  Curve around = loop_through({{q(1, 12), q(3, 8)}, {q(11, 12), q(3, 8)}, {q(11, 12), q(5, 8)}, {q(1, 12), q(5, 8)}, {q(1, 12), q(3, 8)}});
  CHECK(word_of_loop(m, around) == CyclicWord(prod));
}

TEST_CASE("tracing is invariant under translating the whole curve") {
  TorusModel m(3);
  Curve c = loop_through({{q(1, 10), q(1, 5)}, {q(17, 10), q(6, 5)}, {q(7, 5), q(11, 5)}, {q(11, 10), q(6, 5)}});
  c.points.back() = c.points.front() + Point{Rational(1), Rational(2)};
  const CyclicWord w = word_of_loop(m, c);
  Curve moved = c;
  for (auto& p : moved.points) p = p + Point{Rational(-3), Rational(5)};
  CHECK(word_of_loop(m, moved) == w);
}

TEST_CASE("validation") {
  TorusModel m(2);
  CHECK_NOTHROW(validate(m, m.A()));
  CHECK_NOTHROW(validate(m, m.base_arc(1)));
  CHECK_NOTHROW(validate(m, m.base_arc(2)));
  Curve through = loop_through({{Rational(0), q(1, 2)}, {Rational(1), q(1, 2)}});
  CHECK_THROWS_AS(validate(m, through), std::invalid_argument);
  Curve open = loop_through({{Rational(0), q(1, 4)}, {q(1, 2), q(1, 4)}});
  CHECK_THROWS_AS(validate(m, open), std::invalid_argument);
}

TEST_CASE("rebuilt curves trace to the same class") {
  Rng rng(21);
  for (int n : {2, 3, 4}) {
    TorusModel m(n);
    for (int trial = 0; trial < 60; ++trial) {
      Word w = tmcg::testing::random_reduced(rng, n + 1, 12);
      if (w.empty()) continue;
      CHECK(traced_word(m, based_loop_from_word(m, w)) == w);
      CyclicWord cw(w);
      if (!cw.empty()) CHECK(word_of_loop(m, loop_from_word(m, cw)) == cw);
      const int s = rng.uniform(1, n), e = rng.uniform(1, n);
      Curve arc = arc_from_word(m, s, e, w);
      CHECK(traced_word(m, arc) == w);
      CHECK_NOTHROW(validate(m, arc));
    }
  }
}

TEST_CASE("minimal representative of standard curves") {
  TorusModel m(3);
  Curve a = minimal_representative(m, m.A());
  CHECK(a.points == m.A().points);
  Curve arc = minimal_representative(m, m.base_arc(1));
  CHECK(same_class(m, arc, m.base_arc(1)));
  CHECK(cut_crossings(m, arc).empty());
  CHECK(arc.segment_count() == 3);
}

TEST_CASE("intersection numbers of standard curves") {
  for (int n : {2, 3, 4}) {
    TorusModel m(n);
    CHECK(intersection_number(m, m.A(), m.B(1)) == 1);
    CHECK(intersection_number(m, m.B(1), m.A()) == 1);
    if (n >= 2) CHECK(intersection_number(m, m.B(1), m.B(2)) == 0);
    for (int k = 1; k <= n; ++k) {
      CHECK(intersection_number(m, m.A(), m.base_arc(k)) == 0);
      for (int j = 1; j <= n; ++j) CHECK(intersection_number(m, m.B(j), m.base_arc(k)) == (j == k ? 1 : 0));
    }
    if (n >= 3) CHECK(intersection_number(m, m.base_arc(1), m.base_arc(2)) == 0);
    CHECK_THROWS_AS(intersection_number(m, m.A(), m.A()), std::invalid_argument);
  }
}

TEST_CASE("intersection removes inessential crossings") {
  TorusModel m(2);
  // A loop isotopic to B1 that zigzags across A three times.
  const Rational x = m.b_position(1);
  Curve zig = loop_through({{x, Rational(0)}, {x, q(3, 8)}, {x + q(1, 10), q(1, 8)}, {x + q(1, 20), q(7, 8)}, {x, Rational(1)}});
  CHECK(word_of_loop(m, zig) == CyclicWord(Word::generator(1)));
  CHECK(intersection_number(m, m.A(), zig) == 1);
  // Homotopic but drawn with a detour around a puncture and back.
  Curve detour = loop_through({{q(1, 8), q(1, 4)}, {q(3, 8), q(1, 4)}, {q(3, 8), q(3, 4)}, {q(1, 8), q(3, 4)},
                               {q(1, 8), q(5, 16)}, {q(9, 8), q(5, 16)}});
  detour.points.back() = detour.points.front() + Point{Rational(1), Rational(0)};
  // Winds around p1 once; its class differs from A, so check against B2 only.
  CHECK(intersection_number(m, detour, m.B(2)) == 1);
}

TEST_CASE("intersection is symmetric and invariant under general position moves") {
  Rng rng(22);
  TorusModel m(3);
  for (int trial = 0; trial < 30; ++trial) {
    Word u = tmcg::testing::random_reduced(rng, 4, 6), v = tmcg::testing::random_reduced(rng, 4, 6);
    if (CyclicWord(u).empty() || CyclicWord(v).empty()) continue;
    Curve a = loop_from_word(m, CyclicWord(u)), b = loop_from_word(m, CyclicWord(v));
    if (same_class(m, a, b)) continue;
    CHECK(intersection_number(m, a, b) == intersection_number(m, b, a));
  }
}

TEST_CASE("iteration cap") {
  TorusModel m(2);
  const Rational x = m.b_position(1);
  Curve zig = loop_through({{x, Rational(0)}, {x, q(3, 8)}, {x + q(1, 10), q(1, 8)}, {x + q(1, 20), q(7, 8)}, {x, Rational(1)}});
  CHECK_THROWS_AS(intersection_number(m, m.A(), zig, {0}), GeometryError);
}

TEST_CASE("general position keeps the class and fixes arc endpoints") {
  TorusModel m(3);
  auto [a, b] = general_position(m, m.base_arc(1), minimal_representative(m, m.base_arc(2)));
  CHECK(in_general_position(m, a, b));
  CHECK(b.points.front() == m.puncture(2));
  CHECK(same_class(m, b, m.base_arc(2)));
  auto [c, d] = general_position(m, m.A(), m.A());
  CHECK(word_of_loop(m, d) == word_of_loop(m, m.A()));
}

TEST_CASE("simplicity") {
  TorusModel m(3);
  CHECK(is_simple(m, m.A()));
  CHECK(is_simple(m, m.B(3)));
  CHECK(is_simple(m, m.base_arc(3)));
  Curve figure8 = loop_through({{q(1, 10), q(1, 10)}, {q(2, 10), q(2, 10)}, {q(1, 10), q(2, 10)}, {q(2, 10), q(1, 10)}, {q(1, 10), q(1, 10)}});
  CHECK_FALSE(is_simple(m, figure8));
}
