#include "tmcg/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "surface_internal.hpp"

namespace tmcg {

using namespace geom;

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

// ---------------------------------------------------------------- model

TorusModel::TorusModel(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("need at least 2 punctures, got " + std::to_string(n));
  for (int k = 1; k <= n; ++k) {
    px_.push_back(ratio(2 * k - 1, 2 * n));
    bx_.push_back(k < n ? ratio(k, n) : ratio(4 * n - 1, 4 * n));
  }
  basepoint_ = {Rational(0), Rational(1, 8)};

  // Cells of the cut system on the closed torus: corner, slit tops and
  // punctures; n+1 horizontal pieces, the vertical edge and n slits; one disk.
  const int vertices = 1 + 2 * n, edges = (n + 1) + 1 + n, faces = 1;
  if (vertices - edges + faces != 0) throw std::logic_error("cut system is not a disk decomposition");

  const Word a = Word::generator(0);
  v_word_ = a;
  h_words_.push_back(a.inverse() * Word::generator(n) * a);
  for (int k = 1; k <= n; ++k) h_words_.push_back(Word::generator(k));
  for (int k = 1; k <= n; ++k) {
    s_words_.push_back(h_words_[static_cast<std::size_t>(k - 1)] * h_words_[static_cast<std::size_t>(k)].inverse());
    c_words_.push_back(s_words_.back().inverse());
  }
  for (int k = 1; k <= n; ++k) {
    CyclicWord traced = word_of_loop(*this, puncture_loop(k));
    if (traced != CyclicWord(c_words_[static_cast<std::size_t>(k - 1)]))
      throw std::logic_error("puncture loop does not trace to its dictionary word");
    peripheral_.classes.push_back(traced);
  }
}

const Rational& TorusModel::puncture_x(int k) const { return px_.at(static_cast<std::size_t>(k - 1)); }
Point TorusModel::puncture(int k) const { return {puncture_x(k), Rational(1, 2)}; }
const Rational& TorusModel::b_position(int k) const { return bx_.at(static_cast<std::size_t>(k - 1)); }

int TorusModel::puncture_index(const Point& p) const {
  if (frac(p.y) != Rational(1, 2)) return 0;
  Rational t = frac(p.x) * (2 * n_) + 1;  // = 2k for puncture k
  if (t.get_den() != 1 || t.get_num() % 2 != 0) return 0;
  return static_cast<int>(t.get_num().get_si() / 2);
}

bool TorusModel::is_puncture_lift(const Point& p) const { return puncture_index(p) != 0; }

Curve TorusModel::A() const {
  return {CurveKind::Loop, 0, 0, {{Rational(0), Rational(1, 4)}, {Rational(1), Rational(1, 4)}}};
}

Curve TorusModel::B(int k) const {
  const Rational& x = b_position(k);
  return {CurveKind::Loop, 0, 0, {{x, Rational(0)}, {x, Rational(1)}}};
}

Curve TorusModel::base_arc(int k) const {
  if (k < 1 || k > n_) throw std::invalid_argument("arc index out of range: " + std::to_string(k));
  Point end = k < n_ ? puncture(k + 1) : puncture(1) + Point{Rational(1), Rational(0)};
  return {CurveKind::Arc, k, k < n_ ? k + 1 : 1, {puncture(k), end}};
}

Curve TorusModel::puncture_loop(int k) const {
  const Point p = puncture(k);
  const Rational r(1, 8 * n_);
  Curve c{CurveKind::Loop, 0, 0, {}};
  constexpr int corners[5][2] = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (const auto& d : corners) c.points.push_back({p.x + r * d[0], p.y + r * d[1]});
  return c;
}

Curve TorusModel::based_generator(int g) const {
  const Point& b = basepoint_;
  if (g == 0) return {CurveKind::BasedLoop, 0, 0, {b, {b.x + 1, b.y}}};
  const Rational& x = b_position(g);
  return {CurveKind::BasedLoop, 0, 0, {b, {x, b.y}, {x, b.y + 1}, {b.x, b.y + 1}}};
}

Point TorusModel::Rect::center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }

TorusModel::Rect TorusModel::twist_rectangle(int k) const {
  if (k < 1 || k > n_) throw std::invalid_argument("half-twist index out of range: " + std::to_string(k));
  const Rational margin(1, 4 * n_);
  const Rational right = k < n_ ? puncture_x(k + 1) : puncture_x(1) + 1;
  return {{puncture_x(k) - margin, Rational(3, 8)}, {right + margin, Rational(5, 8)}};
}

// ---------------------------------------------------------------- validation

void validate(const TorusModel& model, const Curve& c) {
  if (c.points.size() < 2) throw std::invalid_argument("curve needs at least one segment");
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
    if (c.points[i] == c.points[i + 1]) throw std::invalid_argument("zero-length segment at vertex " + std::to_string(i));
  if (c.closed()) {
    Point t = c.translation();
    if (t.x.get_den() != 1 || t.y.get_den() != 1) throw std::invalid_argument("closed curve does not close up on the torus");
  }
  if (c.kind == CurveKind::BasedLoop && !(frac_point(c.points.front()) == model.basepoint()))
    throw std::invalid_argument("based loop must start at the basepoint");
  if (c.kind == CurveKind::Arc) {
    const int s = model.puncture_index(c.points.front()), e = model.puncture_index(c.points.back());
    if (s == 0 || e == 0) throw std::invalid_argument("arc endpoints must be punctures");
    if (s != c.start_puncture || e != c.end_puncture) throw std::invalid_argument("arc endpoint labels do not match its points");
  }
  // Interior must avoid every puncture lift.
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    const Point &p = c.points[i], &q = c.points[i + 1];
    const long x0 = floor_long(min(p.x, q.x)) - 1, x1 = floor_long(max(p.x, q.x)) + 1;
    const long y0 = floor_long(min(p.y, q.y)) - 1, y1 = floor_long(max(p.y, q.y)) + 1;
    for (int k = 1; k <= model.n(); ++k)
      for (long i2 = x0; i2 <= x1; ++i2)
        for (long j2 = y0; j2 <= y1; ++j2) {
          Point z = model.puncture(k) + Point{Rational(i2), Rational(j2)};
          if (!on_segment(p, q, z)) continue;
          const bool endpoint_ok = c.kind == CurveKind::Arc &&
                                   ((i == 0 && z == p) || (i + 2 == c.points.size() && z == q));
          if (!endpoint_ok) throw std::invalid_argument("curve passes through puncture " + std::to_string(k));
        }
  }
}

// ---------------------------------------------------------------- tracing

int compare(const ShiftedParam& p, const ShiftedParam& q) {
  if (int r = cmp(p.a, q.a)) return r;
  if (int r = cmp(p.b, q.b)) return r;
  return cmp(p.c, q.c);
}

namespace {

bool inside_unit_interval(const ShiftedParam& t) {
  return compare(t, {Rational(0), Rational(0), Rational(0)}) > 0 && compare(t, {Rational(1), Rational(0), Rational(0)}) < 0;
}

// y coordinate a + b eps + eps^2 taken mod 1, inside a slit's span [1/2, 1)?
bool on_slit(const Rational& a, const Rational& b) {
  const Rational f = frac(a);
  if (f == 0) return b < 0;
  if (f == Rational(1, 2)) return b >= 0;
  return f > Rational(1, 2);
}

}  // namespace

std::vector<CutCrossing> cut_crossings(const TorusModel& model, const Curve& c) {
  std::vector<CutCrossing> out;
  const int n = model.n();
  for (std::size_t s = 0; s + 1 < c.points.size(); ++s) {
    const Point &p = c.points[s], &q = c.points[s + 1];
    const Point d = q - p;
    std::vector<CutCrossing> here;
    if (d.x != 0) {
      const int sgn = d.x > 0 ? 1 : -1;
      const long lo = floor_long(min(p.x, q.x)) - 1, hi = floor_long(max(p.x, q.x)) + 1;
      for (long m = lo; m <= hi; ++m) {
        // vertical edge, then the slits, in the translate starting at x = m
        for (int k = 0; k <= n; ++k) {
          const Rational line = k == 0 ? Rational(m) : Rational(m) + model.puncture_x(k);
          ShiftedParam t{(line - p.x) / d.x, Rational(-1) / d.x, Rational(0)};
          if (!inside_unit_interval(t)) continue;
          if (k == 0) {
            here.push_back({s, t, sgn > 0 ? model.vertical_edge_word() : model.vertical_edge_word().inverse()});
          } else if (on_slit(p.y + t.a * d.y, -d.y / d.x)) {
            const Word& w = model.slit_word(k);
            here.push_back({s, t, sgn > 0 ? w : w.inverse()});
          }
        }
      }
    }
    if (d.y != 0) {
      const int sgn = d.y > 0 ? 1 : -1;
      const long lo = floor_long(min(p.y, q.y)) - 1, hi = floor_long(max(p.y, q.y)) + 1;
      for (long m = lo; m <= hi; ++m) {
        ShiftedParam t{(Rational(m) - p.y) / d.y, Rational(0), Rational(-1) / d.y};
        if (!inside_unit_interval(t)) continue;
        // x = a + eps + ..., so an exact tie with a puncture column lies right of it
        const Rational f = frac(p.x + t.a * d.x);
        int j = 0;
        while (j < n && model.puncture_x(j + 1) <= f) ++j;
        const Word& w = model.horizontal_edge_word(j);
        here.push_back({s, t, sgn > 0 ? w : w.inverse()});
      }
    }
    std::sort(here.begin(), here.end(), [](const CutCrossing& u, const CutCrossing& v) { return compare(u.t, v.t) < 0; });
    out.insert(out.end(), std::make_move_iterator(here.begin()), std::make_move_iterator(here.end()));
  }
  return out;
}

Word traced_word(const TorusModel& model, const Curve& c) {
  std::vector<Letter> raw;
  for (const auto& x : cut_crossings(model, c)) raw.insert(raw.end(), x.word.letters().begin(), x.word.letters().end());
  return Word::reduce(raw);
}

CyclicWord word_of_loop(const TorusModel& model, const Curve& loop) {
  if (!loop.closed()) throw std::invalid_argument("word_of_loop needs a closed curve");
  return CyclicWord(traced_word(model, loop));
}

Word arc_class_word(const TorusModel& model, const Curve& arc) {
  if (arc.kind != CurveKind::Arc) throw std::invalid_argument("arc_class_word needs an arc");
  return double_coset_representative(model.peripheral_word(arc.start_puncture), traced_word(model, arc),
                                     model.peripheral_word(arc.end_puncture));
}

bool same_class(const TorusModel& model, const Curve& a, const Curve& b) {
  if (a.closed() != b.closed()) return false;
  if (a.closed()) {
    const CyclicWord u = word_of_loop(model, a), v = word_of_loop(model, b);
    return u == v || u == v.inverse();
  }
  const Word wa = traced_word(model, a), wb = traced_word(model, b);
  auto key = [&](int s, const Word& w, int e) {
    return double_coset_representative(model.peripheral_word(s), w, model.peripheral_word(e));
  };
  if (a.start_puncture == b.start_puncture && a.end_puncture == b.end_puncture &&
      key(a.start_puncture, wa, a.end_puncture) == key(b.start_puncture, wb, b.end_puncture))
    return true;
  return a.start_puncture == b.end_puncture && a.end_puncture == b.start_puncture &&
         key(a.start_puncture, wa, a.end_puncture) == key(b.end_puncture, wb.inverse(), b.start_puncture);
}

}  // namespace tmcg
