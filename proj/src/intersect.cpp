#include <algorithm>
#include <cstdint>
#include <map>

#include "surface_internal.hpp"
#include "tmcg/surface.hpp"

namespace tmcg {

using namespace geom;

Contact geom::classify(const Point& p0, const Point& p1, const Point& q0, const Point& q1) {
  const int o1 = orient(p0, p1, q0), o2 = orient(p0, p1, q1);
  const int o3 = orient(q0, q1, p0), o4 = orient(q0, q1, p1);
  if (o1 * o2 > 0 || o3 * o4 > 0) return {};
  if (o1 && o2 && o3 && o4) {
    const Point dp = p1 - p0, dq = q1 - q0;
    const Rational den = cross(dp, dq);
    Contact c{ContactKind::Cross, {}, cross(q0 - p0, dq) / den, cross(q0 - p0, dp) / den, den > 0 ? 1 : -1};
    c.at = lerp(p0, p1, c.ta);
    return c;
  }
  if (o1 == 0 && o2 == 0) {
    const bool use_x = p0.x != p1.x;
    auto coord = [&](const Point& z) -> const Rational& { return use_x ? z.x : z.y; };
    const Rational lo = max(min(coord(p0), coord(p1)), min(coord(q0), coord(q1)));
    const Rational hi = min(max(coord(p0), coord(p1)), max(coord(q0), coord(q1)));
    if (lo > hi) return {};
    if (lo < hi) return {ContactKind::Overlap, {}, {}, {}, 0};
    for (const Point* z : {&p0, &p1, &q0, &q1})
      if (coord(*z) == lo) return {ContactKind::Touch, *z, {}, {}, 0};
    return {};
  }
  if (o1 == 0 && on_segment(p0, p1, q0)) return {ContactKind::Touch, q0, {}, {}, 0};
  if (o2 == 0 && on_segment(p0, p1, q1)) return {ContactKind::Touch, q1, {}, {}, 0};
  if (o3 == 0 && on_segment(q0, q1, p0)) return {ContactKind::Touch, p0, {}, {}, 0};
  if (o4 == 0 && on_segment(q0, q1, p1)) return {ContactKind::Touch, p1, {}, {}, 0};
  return {};
}

namespace {

struct Box {
  long x0, x1, y0, y1;  // integer hull
};

std::vector<Box> boxes(const Curve& c) {
  std::vector<Box> out;
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    const Point &p = c.points[i], &q = c.points[i + 1];
    out.push_back({floor_long(min(p.x, q.x)), floor_long(max(p.x, q.x)) + 1, floor_long(min(p.y, q.y)),
                   floor_long(max(p.y, q.y)) + 1});
  }
  return out;
}

// Visits every pair (segment of a, translated segment of b) whose integer
// hulls meet. The visitor returns false to stop.
template <class F>
void for_each_pair(const Curve& a, const Curve& b, F&& visit) {
  const auto ba = boxes(a), bb = boxes(b);
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t j = 0; j < bb.size(); ++j)
      for (long sx = ba[i].x0 - bb[j].x1; sx <= ba[i].x1 - bb[j].x0; ++sx)
        for (long sy = ba[i].y0 - bb[j].y1; sy <= ba[i].y1 - bb[j].y0; ++sy)
          if (!visit(i, j, sx, sy)) return;
}

// Contacts of a with b; false on anything but transverse crossings and
// shared puncture endpoints.
bool scan(const TorusModel& model, const Curve& a, const Curve& b, std::vector<CurveCrossing>* out) {
  bool ok = true;
  for_each_pair(a, b, [&](std::size_t i, std::size_t j, long sx, long sy) {
    const Point shift{Rational(sx), Rational(sy)};
    const Contact c = classify(a.points[i], a.points[i + 1], b.points[j] + shift, b.points[j + 1] + shift);
    switch (c.kind) {
      case ContactKind::None:
        return true;
      case ContactKind::Cross:
        if (out) out->push_back({i, c.ta, j, c.tb, shift, c.at, c.sign});
        return true;
      case ContactKind::Touch:
        if (model.is_puncture_lift(c.at)) return true;
        [[fallthrough]];
      default:
        ok = false;
        return false;
    }
  });
  return ok;
}

// Deterministic 64-bit LCG; only its high bits are used.
struct Lcg {
  std::uint64_t state;
  int next_in(int span) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(span));
  }
};

Rational squared_distance(const Point& p, const Point& q, const Point& z) {
  const Point d = q - p;
  Rational t = dot(z - p, d) / dot(d, d);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Point e = z - lerp(p, q, t);
  return dot(e, e);
}

// Smallest squared distance from a puncture lift to a segment of c that does
// not end at that lift.
Rational puncture_clearance(const TorusModel& model, const Curve& c) {
  Rational best = 1;
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    const Point &p = c.points[i], &q = c.points[i + 1];
    for (long x = floor_long(min(p.x, q.x)) - 1; x <= floor_long(max(p.x, q.x)) + 1; ++x)
      for (long y = floor_long(min(p.y, q.y)) - 1; y <= floor_long(max(p.y, q.y)) + 1; ++y)
        for (int k = 1; k <= model.n(); ++k) {
          const Point z = model.puncture(k) + Point{Rational(x), Rational(y)};
          if (z == p || z == q) continue;
          best = min(best, squared_distance(p, q, z));
        }
  }
  return best;
}

Curve subdivided(const Curve& c) {
  Curve out = c;
  out.points.clear();
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    out.points.push_back(c.points[i]);
    out.points.push_back(lerp(c.points[i], c.points[i + 1], Rational(1, 2)));
  }
  out.points.push_back(c.points.back());
  return out;
}

}  // namespace

bool in_general_position(const TorusModel& model, const Curve& a, const Curve& b) {
  return scan(model, a, b, nullptr);
}

std::vector<CurveCrossing> transverse_crossings(const TorusModel& model, const Curve& a, const Curve& b) {
  std::vector<CurveCrossing> out;
  if (!scan(model, a, b, &out)) throw GeometryError("curves are not in general position");
  return out;
}

bool is_simple(const TorusModel& model, const Curve& c) {
  const std::size_t m = c.segment_count();
  const Point T = c.closed() ? c.translation() : Point{Rational(0), Rational(0)};
  bool simple = true;
  for_each_pair(c, c, [&](std::size_t i, std::size_t j, long sx, long sy) {
    const Point shift{Rational(sx), Rational(sy)};
    if (i == j && sx == 0 && sy == 0) return true;
    const Contact k = classify(c.points[i], c.points[i + 1], c.points[j] + shift, c.points[j + 1] + shift);
    if (k.kind == ContactKind::None) return true;
    bool adjacent = (j == i + 1 && sx == 0 && sy == 0) || (i == j + 1 && sx == 0 && sy == 0);
    if (c.closed()) {
      adjacent = adjacent || (i + 1 == m && j == 0 && shift == T) || (i == 0 && j + 1 == m && shift + T == Point{});
    }
    if (k.kind == ContactKind::Touch && (adjacent || model.is_puncture_lift(k.at))) return true;
    simple = false;
    return false;
  });
  return simple;
}

std::pair<Curve, Curve> general_position(const TorusModel& model, const Curve& a, const Curve& b) {
  if (in_general_position(model, a, b)) return {a, b};
  const Curve base = subdivided(b);
  const Rational clearance = puncture_clearance(model, base);
  Rational delta(1, 64);
  while (400 * delta * delta >= clearance) delta /= 2;

  const std::size_t m = base.points.size();
  const bool loop = base.kind == CurveKind::Loop;
  for (std::uint64_t attempt = 1; attempt <= 64; ++attempt) {
    Lcg rng{attempt * 0x9E3779B97F4A7C15ULL};
    Curve moved = base;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (!loop && i == 0) continue;
      int u = 0, w = 0;
      while (u == 0 && w == 0) {
        u = rng.next_in(15) - 7;
        w = rng.next_in(15) - 7;
      }
      moved.points[i] = base.points[i] + Point{delta * u, delta * w};
    }
    if (loop) moved.points[m - 1] = moved.points[0] + base.translation();
    if (in_general_position(model, a, moved)) return {a, moved};
    if (attempt % 16 == 0) delta /= 2;
  }
  throw GeometryError("could not put curves in general position");
}

namespace {

// Sheet reached just before each queried point, given as (segment, exact
// parameter); queries are answered in their original order.
std::vector<Word> sheets_at(const std::vector<CutCrossing>& events,
                            const std::vector<std::pair<std::size_t, Rational>>& at) {
  std::vector<Word> prefix{Word{}};
  for (const auto& e : events) prefix.push_back(prefix.back() * e.word);
  std::vector<Word> out;
  out.reserve(at.size());
  for (const auto& [seg, t] : at) {
    const ShiftedParam here{t, Rational(0), Rational(0)};
    auto it = std::partition_point(events.begin(), events.end(), [&](const CutCrossing& e) {
      return e.segment < seg || (e.segment == seg && compare(e.t, here) < 0);
    });
    out.push_back(prefix[static_cast<std::size_t>(it - events.begin())]);
  }
  return out;
}

}  // namespace

int intersection_number(const TorusModel& model, const Curve& a, const Curve& b, IntersectionOptions opts) {
  if (same_class(model, a, b)) throw std::invalid_argument("intersection_number needs two distinct curve classes");
  if ((a.closed() && traced_word(model, a).empty()) || (b.closed() && traced_word(model, b).empty())) return 0;

  const auto [ga, gb] = general_position(model, a, b);
  const auto crossings = transverse_crossings(model, ga, gb);
  if (crossings.empty()) return 0;

  std::vector<std::pair<std::size_t, Rational>> on_a, on_b;
  for (const auto& x : crossings) {
    on_a.emplace_back(x.segment_a, x.t_a);
    on_b.emplace_back(x.segment_b, x.t_b);
  }
  const auto ea = cut_crossings(model, ga), eb = cut_crossings(model, gb);
  const auto sa = sheets_at(ea, on_a), sb = sheets_at(eb, on_b);
  const Word wa = traced_word(model, ga), wb = traced_word(model, gb);
  const Word stab_a = ga.closed() ? wa : Word{}, stab_b = gb.closed() ? wb : Word{};

  // Each crossing lies on the lift of a starting in the base sheet and on the
  // lift of b starting in sheet X; the pair is determined up to the
  // stabilizers of the two lifts.
  std::map<Word, std::pair<Word, long>> classes;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Word x = sa[i] * sb[i].inverse();
    auto& entry = classes[double_coset_representative(stab_a, x, stab_b)];
    if (entry.second == 0) entry.first = x;
    ++entry.second;
  }

  long cancellations = 0, count = 0;
  for (const auto& [key, entry] : classes) {
    cancellations += entry.second / 2;
    if (cancellations > opts.max_iterations)
      throw GeometryError("bigon removal exceeded " + std::to_string(opts.max_iterations) + " iterations");
    if (entry.second % 2 == 0) continue;
    if (!ga.closed() && !gb.closed()) {
      // Lifts sharing an ideal endpoint meet only at that puncture.
      const Word& x = entry.first;
      auto end = [&](int k, const Word& sheet) {
        return std::pair{k, double_coset_representative(Word{}, sheet, model.peripheral_word(k))};
      };
      const auto a0 = end(ga.start_puncture, Word{}), a1 = end(ga.end_puncture, wa);
      const auto b0 = end(gb.start_puncture, x), b1 = end(gb.end_puncture, x * wb);
      if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) continue;
    }
    ++count;
  }
  return static_cast<int>(count);
}

}  // namespace tmcg
