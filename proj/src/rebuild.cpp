#include "surface_internal.hpp"
#include "tmcg/surface.hpp"

namespace tmcg {

using namespace geom;

namespace {

// Polyline in R^2 assembled square by square: points are given in the
// current square's frame and offset by the integer square position.
class Builder {
 public:
  explicit Builder(const TorusModel& model) : model_(model) {}

  void push(const Point& local) {
    const Point z = local + offset_;
    auto& ps = curve_.points;
    if (!ps.empty() && ps.back() == z) return;
    if (ps.size() >= 2) {
      const Point &z1 = ps[ps.size() - 2], &z2 = ps.back();
      if (orient(z1, z2, z) == 0 && dot(z2 - z1, z - z2) > 0) {
        ps.back() = z;
        return;
      }
    }
    ps.push_back(z);
  }

  // Inside the disk: drop to the route line y = 1/4, run along it, climb back.
  void route_to(const Point& from, const Point& to) {
    const Rational lane(1, 4);
    push({from.x, lane});
    push({to.x, lane});
    push(to);
  }

  // Crosses the cut for letter l; returns the entry point in the new square.
  Point cross(const Point& from, Letter l) {
    const int g = generator_of(l), s = sign_of(l);
    Point before, after, step;
    if (g == 0) {
      before = {Rational(s > 0 ? 1 : 0), Rational(1, 4)};
      after = {Rational(s > 0 ? 0 : 1), Rational(1, 4)};
      step = {Rational(s), Rational(0)};
    } else {
      const Rational& x = model_.b_position(g);
      before = {x, Rational(s > 0 ? 1 : 0)};
      after = {x, Rational(s > 0 ? 0 : 1)};
      step = {Rational(0), Rational(s)};
    }
    route_to(from, before);
    offset_ = offset_ + step;
    return after;
  }

  Point walk(Point from, const std::vector<Letter>& letters) {
    for (Letter l : letters) from = cross(from, l);
    return from;
  }

  Curve take(CurveKind kind) {
    curve_.kind = kind;
    return std::move(curve_);
  }

 private:
  const TorusModel& model_;
  Point offset_{Rational(0), Rational(0)};
  Curve curve_;
};

Point entry_point(const TorusModel& model, Letter l) {
  const int g = generator_of(l), s = sign_of(l);
  if (g == 0) return {Rational(s > 0 ? 0 : 1), Rational(1, 4)};
  return {model.b_position(g), Rational(s > 0 ? 0 : 1)};
}

}  // namespace

Curve loop_from_word(const TorusModel& model, const CyclicWord& w) {
  if (w.empty()) throw GeometryError("null-homotopic loop has no representative");
  Builder b(model);
  const Point start = entry_point(model, w.letters().back());
  b.push(start);
  b.walk(start, w.letters());
  return b.take(CurveKind::Loop);
}

Curve based_loop_from_word(const TorusModel& model, const Word& w) {
  if (w.empty()) throw GeometryError("trivial based loop has no representative");
  Builder b(model);
  const Point& base = model.basepoint();
  b.push(base);
  b.route_to(b.walk(base, w.letters()), base);
  return b.take(CurveKind::BasedLoop);
}

Curve arc_from_word(const TorusModel& model, int start, int end, const Word& w) {
  Builder b(model);
  const Point p = model.puncture(start);
  b.push(p);
  b.route_to(b.walk(p, w.letters()), model.puncture(end));
  Curve c = b.take(CurveKind::Arc);
  c.start_puncture = start;
  c.end_puncture = end;
  if (c.points.size() < 2) throw GeometryError("trivial arc has no representative");
  return c;
}

Curve minimal_representative(const TorusModel& model, const Curve& c) {
  Curve rebuilt;
  switch (c.kind) {
    case CurveKind::Loop:
      rebuilt = loop_from_word(model, word_of_loop(model, c));
      break;
    case CurveKind::BasedLoop:
      rebuilt = based_loop_from_word(model, traced_word(model, c));
      break;
    case CurveKind::Arc:
      rebuilt = arc_from_word(model, c.start_puncture, c.end_puncture, arc_class_word(model, c));
      break;
  }
  const std::size_t old_cuts = cut_crossings(model, c).size(), new_cuts = cut_crossings(model, rebuilt).size();
  if (old_cuts < new_cuts || (old_cuts == new_cuts && c.segment_count() < rebuilt.segment_count())) return c;
  return rebuilt;
}

}  // namespace tmcg
