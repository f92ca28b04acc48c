#include "tmcg/syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <regex>

namespace tmcg {

ParseError::ParseError(const std::string& what, std::size_t token, std::size_t column)
    : std::invalid_argument(token ? "parse error at token " + std::to_string(token) + " (column " + std::to_string(column) + "): " + what
                                  : "parse error at column " + std::to_string(column) + ": " + what),
      token_(token),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<long> to_long(const std::string& s) {
  long v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) return std::nullopt;
  return v;
}

int index_in(const std::string& digits, int n, const std::string& what, std::size_t token, std::size_t column) {
  const auto v = to_long(digits);
  if (!v || *v < 1 || *v > n)
    throw ParseError(what + " index " + digits + " out of range 1.." + std::to_string(n), token, column);
  return static_cast<int>(*v);
}

long power_of(const std::ssub_match& m, std::size_t token, std::size_t column) {
  if (!m.matched) return 1;
  const auto v = to_long(m.str());
  if (!v) throw ParseError("malformed power '^" + m.str() + "'", token, column);
  if (*v == 0) throw ParseError("power must be nonzero", token, column);
  return *v;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

MappingClass parse_word(const std::string& text, int n) {
  static const std::regex term(R"((TY|T(\d+)|H(\d+)(?:\[(-?\d+)\])?)(?:\^(.*))?)");
  const auto tokens = split(text);
  if (tokens.empty()) throw ParseError("empty word", 0, 1);
  std::vector<TwistGenerator> w;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    if (tok.text == "id" && tokens.size() == 1) break;
    std::smatch m;
    if (!std::regex_match(tok.text, m, term)) throw ParseError("unknown token '" + tok.text + "'", t + 1, tok.column);
    const long p = power_of(m[5], t + 1, tok.column);
    if (m[1] == "TY") {
      w.push_back({TwistKind::TY, 0, p});
    } else if (m[2].matched) {
      w.push_back({TwistKind::T, index_in(m[2], n, "twist", t + 1, tok.column), p});
    } else {
      const int k = index_in(m[3], n, "half-twist", t + 1, tok.column);
      long a = -1;
      if (m[4].matched) {
        const auto v = to_long(m[4]);
        if (!v) throw ParseError("malformed arc degree", t + 1, tok.column);
        a = *v;
      }
      const MappingClass h = half_twist_along(n, k, static_cast<int>(a), p);
      w.insert(w.end(), h.word().begin(), h.word().end());
    }
  }
  return MappingClass(n, std::move(w));
}

std::string format_word(const MappingClass& m) {
  if (m.word().empty()) return "id";
  std::string s;
  for (const auto& g : m.word()) {
    if (!s.empty()) s += ' ';
    s += g.kind == TwistKind::TY ? "TY" : (g.kind == TwistKind::T ? "T" : "H") + std::to_string(g.index);
    if (g.power != 1) s += "^" + std::to_string(g.power);
  }
  return s;
}

namespace {

class CurveParser {
 public:
  CurveParser(const std::string& s, const TorusModel& m) : s_(s), m_(m) {}

  Curve run() {
    Curve c = curve();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return c;
  }

 private:
  const std::string& s_;
  const TorusModel& m_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& lit) {
    skip();
    if (s_.compare(pos_, lit.size(), lit) != 0) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(const std::string& lit) {
    if (!eat(lit)) fail("expected '" + lit + "'");
  }
  std::string integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected an integer");
    return s_.substr(start, pos_ - start);
  }
  int index(const std::string& what) {
    const std::size_t col = pos_ + 1;
    return index_in(integer(), m_.n(), what, 0, col);
  }

  Curve curve() {
    skip();
    if (eat("apply")) {
      expect("(");
      const std::size_t start = pos_;
      const std::size_t comma = s_.find(',', start);
      if (comma == std::string::npos) fail("expected ',' after the word");
      MappingClass w = MappingClass::identity(m_.n());
      try {
        w = parse_word(s_.substr(start, comma - start), m_.n());
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), e.token(), start + e.column());
      }
      pos_ = comma + 1;
      Curve inner = curve();
      expect(")");
      return act(m_, w, inner);
    }
    if (eat("A")) return m_.A();
    if (eat("B")) return m_.B(index("loop"));
    if (eat("G")) {
      const int i = index("arc");
      expect("[");
      const std::size_t col = pos_ + 1;
      const auto a = to_long(integer());
      if (!a || *a < -1000 || *a > 1000) throw ParseError("arc degree out of range", 0, col);
      expect("]");
      return derived_arc(m_, i, static_cast<int>(*a));
    }
    fail("expected a curve: A, B<i>, G<i>[a] or apply(word, curve)");
  }
};

}  // namespace

Curve parse_curve(const std::string& text, const TorusModel& model) { return CurveParser(text, model).run(); }

ObjTag parse_tag(const std::string& text, int n) {
  static const std::regex re(R"(\s*(?:(OY)|Ox\((\d+)\)|OG\((\d+),\s*(-?\d+)\)|PsiOx\((\d+)\))\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("unknown object '" + trim(text) + "'; expected OY, Ox(i), OG(i,a) or PsiOx(i)", 0, 1);
  if (m[1].matched) return ObjTag::OY();
  if (m[2].matched) return ObjTag::Ox(index_in(m[2], n, "point", 0, 1));
  if (m[5].matched) return ObjTag::PsiOx(index_in(m[5], n, "point", 0, 1));
  const auto a = to_long(m[4]);
  if (!a || *a < -1000 || *a > 1000) throw ParseError("twist degree out of range", 0, 1);
  return ObjTag::OG(index_in(m[3], n, "component", 0, 1), static_cast<int>(*a));
}

BWord parse_bword(const std::string& text, const FiberConfig& cfg) {
  static const std::regex term(R"(g(\d+)(?:\.(\d+))?\[(-?\d+)\](?:\^(.*))?|Y(\d+)(?:\^(.*))?)");
  const auto tokens = split(text);
  if (tokens.empty()) throw ParseError("empty word", 0, 1);
  const int fibers = static_cast<int>(cfg.size());
  BWord out;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    if (tok.text == "id" && tokens.size() == 1) break;
    std::smatch m;
    if (!std::regex_match(tok.text, m, term)) throw ParseError("unknown token '" + tok.text + "'", t + 1, tok.column);
    if (m[5].matched) {
      const BWord y = fiber_class_word(cfg, index_in(m[5], fibers, "fiber", t + 1, tok.column));
      const long p = power_of(m[6], t + 1, tok.column);
      const BWord step = p < 0 ? inverse(y) : y;
      for (long r = 0; r < (p < 0 ? -p : p); ++r) out.insert(out.end(), step.begin(), step.end());
      continue;
    }
    const int j = m[2].matched ? index_in(m[1], fibers, "fiber", t + 1, tok.column) : 1;
    const int i = index_in(m[2].matched ? m[2].str() : m[1].str(), cfg.components(j), "component", t + 1, tok.column);
    const auto a = to_long(m[3]);
    if (!a || *a < -1000 || *a > 1000) throw ParseError("twist degree out of range", t + 1, tok.column);
    const long p = power_of(m[4], t + 1, tok.column);
    for (long r = 0; r < (p < 0 ? -p : p); ++r) out.push_back({j, i, static_cast<int>(*a), p < 0 ? -1 : 1});
  }
  return out;
}

std::vector<DivisorTerm> parse_divisor(const std::string& text, int n) {
  static const std::regex term(R"(\s*([+-]?)\s*(\d*)\s*([xG])(\d+)\s*)");
  std::vector<DivisorTerm> out;
  auto it = text.cbegin();
  std::smatch m;
  while (it != text.cend()) {
    const std::size_t col = static_cast<std::size_t>(it - text.cbegin()) + 1;
    if (!std::regex_search(it, text.cend(), m, term, std::regex_constants::match_continuous))
      throw ParseError("expected a divisor term like 2x1 or -G3", 0, col);
    if (!out.empty() && m[1].length() == 0) throw ParseError("expected '+' or '-' between terms", 0, col);
    long c = 1;
    if (m[2].length() > 0) {
      const auto v = to_long(m[2]);
      if (!v) throw ParseError("malformed coefficient", 0, col);
      c = *v;
    }
    if (m[1] == "-") c = -c;
    const auto kind = m[3] == "x" ? DivisorTerm::Kind::Point : DivisorTerm::Kind::Component;
    out.push_back({kind, index_in(m[4], n, m[3] == "x" ? "point" : "component", 0, col), c});
    it = m[0].second;
  }
  if (out.empty()) throw ParseError("empty divisor", 0, 1);
  return out;
}

namespace {

std::vector<long> integer_list(const std::string& text) {
  std::vector<long> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    const auto v = to_long(item);
    if (!v) throw ParseError("expected an integer, got '" + item + "'", 0, start + 1);
    out.push_back(*v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

MultiDegree parse_multidegree(const std::string& text) { return integer_list(text); }

FiberConfig parse_fibers(const std::string& text) {
  std::vector<int> counts;
  for (long v : integer_list(text)) {
    if (v < 2 || v > 64) throw ParseError("fiber component count " + std::to_string(v) + " out of range 2..64", 0, 1);
    counts.push_back(static_cast<int>(v));
  }
  return FiberConfig(counts);
}

}  // namespace tmcg
