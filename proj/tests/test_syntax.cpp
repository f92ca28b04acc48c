#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tmcg/syntax.hpp"

using namespace tmcg;

namespace {

std::size_t error_token(const std::string& text, int n) {
  try {
    parse_word(text, n);
  } catch (const ParseError& e) {
    return e.token();
  }
  return 0;
}

}  // namespace

TEST_CASE("word grammar") {
  const MappingClass w = parse_word("T1 T2^-1", 3);
  CHECK(w.word() == std::vector<TwistGenerator>{{TwistKind::T, 1, 1}, {TwistKind::T, 2, -1}});
  CHECK(parse_word("TY^3 H2", 3).word() == std::vector<TwistGenerator>{{TwistKind::TY, 0, 3}, {TwistKind::H, 2, 1}});
  CHECK(format_word(parse_word("H3[0]", 3)) == "T3^-1 H3 T3");
  CHECK(format_word(parse_word("H3[-1]", 3)) == "H3");
  CHECK(format_word(parse_word("H1[1]^-1", 3)) == "T1^-2 H1^-1 T1^2");
  CHECK(format_word(parse_word("  T1   TY ", 3)) == "T1 TY");
  CHECK(format_word(parse_word("id", 3)) == "id");
}

TEST_CASE("canonical form round trips") {
  for (const std::string s : {"T1 T2^-1", "H3[0]", "TY^-2 H1[2] T3", "H2^5", "id"}) {
    const std::string once = format_word(parse_word(s, 3));
    CHECK(format_word(parse_word(once, 3)) == once);
    CHECK(equal(parse_word(once, 3), parse_word(s, 3)));
  }
}

TEST_CASE("word errors carry positions") {
  CHECK(error_token("T1 X", 3) == 2);
  CHECK(error_token("T4", 3) == 1);
  CHECK(error_token("T1 T2 H1^x", 3) == 3);
  CHECK(error_token("T1^0", 3) == 1);
  CHECK(error_token("H1[a]", 3) == 1);
  CHECK_THROWS_AS(parse_word("", 3), ParseError);
  try {
    parse_word("T1 X", 3);
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
    CHECK(std::string(e.what()).find("token 2") != std::string::npos);
  }
}

TEST_CASE("curve grammar") {
  const TorusModel m(3);
  CHECK(parse_curve("A", m).points == m.A().points);
  CHECK(parse_curve(" B2 ", m).points == m.B(2).points);
  CHECK(same_class(m, parse_curve("G1[-1]", m), m.base_arc(1)));
  CHECK(same_class(m, parse_curve("G2[1]", m), derived_arc(m, 2, 1)));
  CHECK(same_class(m, parse_curve("apply(H1, B1)", m), act(m, twist_H(3, 1), m.B(1))));
  CHECK(same_class(m, parse_curve("apply(T1, apply(H1 T2, A))", m), act(m, twist_H(3, 1) * twist_T(3, 2) * twist_T(3, 1), m.A())));
  CHECK_THROWS_AS(parse_curve("B4", m), ParseError);
  CHECK_THROWS_AS(parse_curve("C1", m), ParseError);
  CHECK_THROWS_AS(parse_curve("apply(T1 X, B1)", m), ParseError);
  CHECK_THROWS_AS(parse_curve("apply(T1, B1", m), ParseError);
  CHECK_THROWS_AS(parse_curve("A B1", m), ParseError);
}

TEST_CASE("object tags") {
  CHECK(parse_tag("OY", 3) == ObjTag::OY());
  CHECK(parse_tag("Ox(2)", 3) == ObjTag::Ox(2));
  CHECK(parse_tag("OG(1, -1)", 3) == ObjTag::OG(1, -1));
  CHECK(parse_tag("PsiOx(3)", 3) == ObjTag::PsiOx(3));
  CHECK_THROWS_AS(parse_tag("Ox(4)", 3), ParseError);
  CHECK_THROWS_AS(parse_tag("Oz", 3), ParseError);
}

TEST_CASE("B-words, divisors and lists") {
  const FiberConfig cfg({3, 4});
  CHECK(parse_bword("g2.4[1]^-2 g1[0]", cfg) == BWord{{2, 4, 1, -1}, {2, 4, 1, -1}, {1, 1, 0, 1}});
  CHECK(parse_bword("Y2", cfg) == fiber_class_word(cfg, 2));
  CHECK_THROWS_AS(parse_bword("g1.4[0]", cfg), ParseError);
  CHECK_THROWS_AS(parse_bword("g3.1[0]", cfg), ParseError);
  CHECK_THROWS_AS(parse_bword("h1[0]", cfg), ParseError);

  const auto d = parse_divisor("G1 - 2x3 + x2", 4);
  REQUIRE(d.size() == 3);
  CHECK(d[1].kind == DivisorTerm::Kind::Point);
  CHECK(d[1].coefficient == -2);
  CHECK(multidegree(4, d) == MultiDegree{-2, 2, -2, 1});
  CHECK_THROWS_AS(parse_divisor("G1 G2", 4), ParseError);
  CHECK_THROWS_AS(parse_divisor("G5", 4), ParseError);

  CHECK(parse_multidegree("1, -2,1") == MultiDegree{1, -2, 1});
  CHECK_THROWS_AS(parse_multidegree("1,,2"), ParseError);
  CHECK(parse_fibers("3,4").counts() == std::vector<int>{3, 4});
  CHECK_THROWS_AS(parse_fibers("3,1"), ParseError);
}
