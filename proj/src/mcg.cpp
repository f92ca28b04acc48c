#include "tmcg/mcg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "surface_internal.hpp"

namespace tmcg {

using namespace geom;

// ---------------------------------------------------------------- words

struct MappingClass::Lazy {
  std::once_flag once;
  std::optional<FreeAutomorphism> outer;
  std::vector<int> perm;
};

MappingClass::MappingClass(int n, std::vector<TwistGenerator> word) : n_(n), word_(std::move(word)), lazy_(std::make_shared<Lazy>()) {
  if (n < 2) throw std::invalid_argument("need at least 2 punctures, got " + std::to_string(n));
  for (const auto& g : word_) {
    if (g.power == 0) throw std::invalid_argument("generator power must be nonzero");
    if (g.kind != TwistKind::TY && (g.index < 1 || g.index > n))
      throw std::invalid_argument("generator index " + std::to_string(g.index) + " out of range 1.." + std::to_string(n));
  }
}

MappingClass MappingClass::inverse() const {
  std::vector<TwistGenerator> w(word_.rbegin(), word_.rend());
  for (auto& g : w) g.power = -g.power;
  return MappingClass(n_, std::move(w));
}

MappingClass operator*(const MappingClass& a, const MappingClass& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("mapping classes on different surfaces");
  std::vector<TwistGenerator> w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return MappingClass(a.n_, std::move(w));
}

MappingClass MappingClass::pow(long k) const {
  const MappingClass base = k < 0 ? inverse() : *this;
  std::vector<TwistGenerator> w;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) w.insert(w.end(), base.word_.begin(), base.word_.end());
  return MappingClass(n_, std::move(w));
}

MappingClass twist_T(int n, int k, long power) { return MappingClass(n, {{TwistKind::T, k, power}}); }
MappingClass twist_TY(int n, long power) { return MappingClass(n, {{TwistKind::TY, 0, power}}); }
MappingClass twist_H(int n, int k, long power) { return MappingClass(n, {{TwistKind::H, k, power}}); }

MappingClass half_twist_along(int n, int k, int a, long power) {
  MappingClass h = twist_H(n, k, power);
  if (a == -1) return h;
  const MappingClass t = twist_T(n, k, a + 1);
  return t.inverse() * h * t;
}

// ---------------------------------------------------------------- Dehn twists

Curve twist_core(const TorusModel& model, TwistKind kind, int index) {
  if (kind == TwistKind::TY) {
    const Rational y(5, 16);
    return {CurveKind::Loop, 0, 0, {{Rational(0), y}, {Rational(1), y}}};
  }
  if (kind == TwistKind::T) {
    const Rational x = model.b_position(index) + ratio(1, 8 * model.n());
    return {CurveKind::Loop, 0, 0, {{x, Rational(0)}, {x, Rational(1)}}};
  }
  throw std::invalid_argument("half twists have no core loop");
}

namespace {

void append(std::vector<Point>& out, const Point& p) {
  if (out.empty() || !(out.back() == p)) out.push_back(p);
}

Curve cleaned(Curve c) {
  std::vector<Point> pts;
  for (const auto& p : c.points) append(pts, p);
  c.points = std::move(pts);
  return c;
}

}  // namespace

Curve dehn_twist_action(const TorusModel& model, const Curve& c, const Curve& x, int sign) {
  if (c.kind != CurveKind::Loop || !is_simple(model, c)) throw std::invalid_argument("Dehn twist needs a simple loop");
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
  const auto [core, moved] = general_position(model, c, x);
  auto crossings = transverse_crossings(model, moved, core);
  if (crossings.empty()) return x;
  std::sort(crossings.begin(), crossings.end(), [](const CurveCrossing& u, const CurveCrossing& v) {
    return u.segment_a != v.segment_a ? u.segment_a < v.segment_a : u.t_a < v.t_a;
  });

  const Point T = core.translation();
  const std::size_t m = core.segment_count();
  const int turn = sign * kDehnHandedness;
  Curve out{x.kind, x.start_puncture, x.end_puncture, {}};
  Point offset{Rational(0), Rational(0)};
  std::size_t next = 0;
  for (std::size_t s = 0; s < moved.segment_count(); ++s) {
    append(out.points, moved.points[s] + offset);
    for (; next < crossings.size() && crossings[next].segment_a == s; ++next) {
      const CurveCrossing& cr = crossings[next];
      const Point base = cr.shift + offset;
      append(out.points, cr.where + offset);
      // Turning left means following the core forward when it points left.
      if (cr.sign * turn > 0) {
        for (std::size_t i = cr.segment_b + 1; i <= m; ++i) append(out.points, core.points[i] + base);
        for (std::size_t i = 1; i <= cr.segment_b; ++i) append(out.points, core.points[i] + base + T);
        offset = offset + T;
      } else {
        for (std::size_t i = cr.segment_b + 1; i-- > 0;) append(out.points, core.points[i] + base);
        for (std::size_t i = m; i-- > cr.segment_b + 1;) append(out.points, core.points[i] + base - T);
        offset = offset - T;
      }
      append(out.points, cr.where + offset);
    }
  }
  append(out.points, moved.points.back() + offset);
  return minimal_representative(model, cleaned(std::move(out)));
}

// ---------------------------------------------------------------- half twists

namespace {

struct Frame {
  Point lo, hi, center;
  Point rotate(const Point& p) const { return scale(center, Rational(2)) - p; }
  bool strictly_inside(const Point& p) const { return lo.x < p.x && p.x < hi.x && lo.y < p.y && p.y < hi.y; }
};

// Parameters where [p, q] meets the closed box, if it does.
std::optional<std::pair<Rational, Rational>> clip(const Point& p, const Point& q, const Frame& f) {
  Rational t0 = 0, t1 = 1;
  const Point d = q - p;
  auto axis = [&](const Rational& start, const Rational& delta, const Rational& lo, const Rational& hi) {
    if (delta == 0) return lo <= start && start <= hi;
    Rational a = (lo - start) / delta, b = (hi - start) / delta;
    if (b < a) std::swap(a, b);
    t0 = max(t0, a);
    t1 = min(t1, b);
    return t0 <= t1;
  };
  if (!axis(p.x, d.x, f.lo.x, f.hi.x) || !axis(p.y, d.y, f.lo.y, f.hi.y)) return std::nullopt;
  return std::pair{t0, t1};
}

// Half-turn path from boundary point e of the frame, through the shrunken
// frame, to the rotated point; dir +1 runs counterclockwise.
std::vector<Point> collar_path(const Frame& f, const Point& e, int dir) {
  const Rational s(7, 8);
  const Frame inner{f.center + scale(f.lo - f.center, s), f.center + scale(f.hi - f.center, s), f.center};
  const Point e2 = f.center + scale(e - f.center, s);
  const Rational w = inner.hi.x - inner.lo.x, h = inner.hi.y - inner.lo.y, perim = 2 * (w + h);
  auto position = [&](const Point& q) -> Rational {
    if (q.y == inner.lo.y) return q.x - inner.lo.x;
    if (q.x == inner.hi.x) return w + (q.y - inner.lo.y);
    if (q.y == inner.hi.y) return w + h + (inner.hi.x - q.x);
    return 2 * w + h + (inner.hi.y - q.y);
  };
  const Point corners[4] = {inner.lo, {inner.hi.x, inner.lo.y}, inner.hi, {inner.lo.x, inner.hi.y}};
  const Rational start = position(e2), end = start + Rational(perim / 2 * dir);
  std::vector<std::pair<Rational, Point>> passed;
  for (int lap = -1; lap <= 1; ++lap) {
    const Rational at[4] = {Rational(0), w, w + h, 2 * w + h};
    for (int c = 0; c < 4; ++c) {
      const Rational p = at[c] + perim * lap;
      if ((dir > 0 && start < p && p < end) || (dir < 0 && end < p && p < start)) passed.emplace_back(p, corners[c]);
    }
  }
  std::sort(passed.begin(), passed.end(), [&](const auto& a, const auto& b) { return dir > 0 ? a.first < b.first : b.first < a.first; });
  std::vector<Point> path{e, e2};
  for (const auto& [p, corner] : passed) path.push_back(corner);
  path.push_back(f.rotate(e2));
  path.push_back(f.rotate(e));
  return path;
}

struct Piece {
  std::optional<std::pair<long, long>> cell;  // translate of the support box, if inside
  std::vector<Point> points;
};

}  // namespace

Curve half_twist_action(const TorusModel& model, int k, const Curve& x, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
  const TorusModel::Rect rect = model.twist_rectangle(k);
  auto frame_at = [&](long i, long j) {
    const Point t{Rational(i), Rational(j)};
    return Frame{rect.lo + t, rect.hi + t, rect.center() + t};
  };

  // Split x where it enters and leaves translates of the support box.
  std::vector<Piece> pieces;
  for (std::size_t s = 0; s + 1 < x.points.size(); ++s) {
    const Point &p = x.points[s], &q = x.points[s + 1];
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    const long i0 = floor_long(min(p.x, q.x)) - 2, i1 = floor_long(max(p.x, q.x)) + 1;
    const long j0 = floor_long(min(p.y, q.y)) - 1, j1 = floor_long(max(p.y, q.y)) + 1;
    for (long i = i0; i <= i1; ++i)
      for (long j = j0; j <= j1; ++j)
        if (auto c = clip(p, q, frame_at(i, j))) {
          for (const Rational& t : {c->first, c->second})
            if (0 < t && t < 1) cuts.push_back(t);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Point a = lerp(p, q, cuts[c]), b = lerp(p, q, cuts[c + 1]);
      const Point mid = lerp(p, q, (cuts[c] + cuts[c + 1]) / 2);
      Piece piece{std::nullopt, {a, b}};
      const Frame home = frame_at(0, 0);
      const long i = floor_long(mid.x - home.lo.x), j = floor_long(mid.y - home.lo.y);
      if (frame_at(i, j).strictly_inside(mid)) piece.cell = std::pair{i, j};
      if (!pieces.empty() && pieces.back().cell == piece.cell) {
        pieces.back().points.push_back(b);
      } else {
        pieces.push_back(std::move(piece));
      }
    }
  }

  const bool all_same = std::all_of(pieces.begin(), pieces.end(), [&](const Piece& p) { return p.cell == pieces.front().cell; });
  if (all_same && !pieces.front().cell) return x;
  const int dir = sign * kHalfTwistHandedness;
  if (all_same) {  // a closed curve entirely inside: just rotate it
    const auto [i, j] = *pieces.front().cell;
    Curve out = x;
    for (auto& p : out.points) p = frame_at(i, j).rotate(p);
    if (out.kind == CurveKind::Arc) {
      out.start_puncture = model.puncture_index(out.points.front());
      out.end_puncture = model.puncture_index(out.points.back());
    }
    return minimal_representative(model, out);
  }

  if (x.closed() && pieces.front().cell && pieces.back().cell) {
    // Rotate the loop so the passage through its start point is in one piece.
    const Point T = x.translation();
    Piece last = std::move(pieces.back());
    pieces.pop_back();
    const long ti = T.x.get_num().get_si(), tj = T.y.get_num().get_si();
    for (auto& p : last.points) p = p - T;
    last.cell = std::pair{last.cell->first - ti, last.cell->second - tj};
    if (last.cell == pieces.front().cell) {
      last.points.insert(last.points.end(), pieces.front().points.begin() + 1, pieces.front().points.end());
      pieces.front() = std::move(last);
    } else {
      pieces.insert(pieces.begin(), std::move(last));
    }
  }

  Curve out{x.kind, x.start_puncture, x.end_puncture, {}};
  for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
    const Piece& piece = pieces[idx];
    if (!piece.cell) {
      for (const auto& p : piece.points) append(out.points, p);
      continue;
    }
    const Frame f = frame_at(piece.cell->first, piece.cell->second);
    const bool starts_inside = x.kind == CurveKind::Arc && idx == 0;
    const bool ends_inside = x.kind == CurveKind::Arc && idx + 1 == pieces.size();
    if (starts_inside) {
      append(out.points, f.rotate(piece.points.front()));
    } else {
      for (const auto& p : collar_path(f, piece.points.front(), dir)) append(out.points, p);
    }
    for (std::size_t i = 1; i < piece.points.size(); ++i) append(out.points, f.rotate(piece.points[i]));
    if (!ends_inside) {
      auto back = collar_path(f, piece.points.back(), dir);
      for (auto it = back.rbegin(); it != back.rend(); ++it) append(out.points, *it);
    }
  }
  if (out.kind == CurveKind::Arc) {
    out.start_puncture = model.puncture_index(out.points.front());
    out.end_puncture = model.puncture_index(out.points.back());
  }
  return minimal_representative(model, out);
}

// ---------------------------------------------------------------- actions

Curve act(const TorusModel& model, const TwistGenerator& g, const Curve& x) {
  const int sign = g.power > 0 ? 1 : -1;
  const long reps = g.power > 0 ? g.power : -g.power;
  Curve cur = x;
  if (g.kind == TwistKind::H) {
    for (long r = 0; r < reps; ++r) cur = half_twist_action(model, g.index, cur, sign);
  } else {
    const Curve core = twist_core(model, g.kind, g.index);
    for (long r = 0; r < reps; ++r) cur = dehn_twist_action(model, core, cur, sign);
  }
  return cur;
}

Curve act(const TorusModel& model, const MappingClass& m, const Curve& x) {
  if (m.n() != model.n()) throw std::invalid_argument("mapping class and model disagree on n");
  Curve cur = x;
  for (const auto& g : m.word()) cur = act(model, g, cur);
  return cur;
}

Curve derived_arc(const TorusModel& model, int k, int a) {
  if (a == -1) return model.base_arc(k);
  return act(model, twist_T(model.n(), k, a + 1), model.base_arc(k));
}

// ---------------------------------------------------------------- automorphisms

namespace {

std::vector<Word> based_images(const TorusModel& model, const std::function<Curve(const Curve&)>& f) {
  std::vector<Word> images;
  for (int g = 0; g < model.rank(); ++g) images.push_back(traced_word(model, f(model.based_generator(g))));
  return images;
}

const TorusModel& shared_model(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TorusModel>> models;
  std::lock_guard lock(mu);
  auto& slot = models[n];
  if (!slot) slot = std::make_unique<TorusModel>(n);
  return *slot;
}

// Automorphism of a single generator letter with power +-1, cached.
const FreeAutomorphism& unit_automorphism(int n, TwistKind kind, int index, int sign) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, FreeAutomorphism> cache;
  const auto key = std::tuple{n, static_cast<int>(kind), index, sign};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const TorusModel& model = shared_model(n);
  auto images = [&](int s) {
    return based_images(model, [&](const Curve& c) { return act(model, TwistGenerator{kind, index, s}, c); });
  };
  FreeAutomorphism phi(model.rank(), images(sign), images(-sign));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(phi)).first->second;
}

std::vector<int> swap_of(int n, int k) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::swap(p[static_cast<std::size_t>(k - 1)], p[static_cast<std::size_t>(k % n)]);
  return p;
}

}  // namespace

const FreeAutomorphism& MappingClass::outer() const {
  std::call_once(lazy_->once, [this] {
    FreeAutomorphism phi = FreeAutomorphism::identity(n_ + 1);
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (const auto& g : word_) {
      const int sign = g.power > 0 ? 1 : -1;
      const FreeAutomorphism& step = unit_automorphism(n_, g.kind, g.index, sign);
      for (long r = 0; r < (g.power > 0 ? g.power : -g.power); ++r) {
        phi = compose(step, phi);
        if (g.kind == TwistKind::H) {
          const auto s = swap_of(n_, g.index);
          for (auto& p : perm) p = s[static_cast<std::size_t>(p)];
        }
      }
    }
    lazy_->outer = std::move(phi);
    lazy_->perm = std::move(perm);
  });
  return *lazy_->outer;
}

const std::vector<int>& MappingClass::perm() const {
  outer();
  return lazy_->perm;
}

FreeAutomorphism geometric_outer(const TorusModel& model, const MappingClass& m) {
  const MappingClass inv = m.inverse();
  return FreeAutomorphism(model.rank(), based_images(model, [&](const Curve& c) { return act(model, m, c); }),
                          based_images(model, [&](const Curve& c) { return act(model, inv, c); }));
}

FreeAutomorphism twist_automorphism(const TorusModel& model, const Curve& c, int sign) {
  const Point& b = model.basepoint();
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
    for (long dx = -2; dx <= 2; ++dx)
      for (long dy = -2; dy <= 2; ++dy)
        if (on_segment(c.points[i], c.points[i + 1], b + Point{Rational(dx), Rational(dy)}))
          throw std::invalid_argument("twist core passes through the basepoint");
  auto images = [&](int s) {
    return based_images(model, [&](const Curve& x) { return dehn_twist_action(model, c, x, s); });
  };
  return FreeAutomorphism(model.rank(), images(sign), images(-sign));
}

bool equal(const MappingClass& a, const MappingClass& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mapping classes on different surfaces");
  if (a.perm() != b.perm()) return false;
  return is_inner(compose(a.outer(), b.outer().inverse())).has_value();
}

namespace {

void require_simple_loops(const TorusModel& model, const Curve& g, const Curve& d, int expected) {
  for (const Curve* c : {&g, &d})
    if (c->kind != CurveKind::Loop || !is_simple(model, *c)) throw std::invalid_argument("twist relations need simple loops");
  const int i = intersection_number(model, g, d);
  if (i != expected)
    throw std::invalid_argument("precondition: intersection number " + std::to_string(expected) + " required, found " +
                                std::to_string(i));
}

// Left-to-right product of automorphisms: later factors act after earlier ones.
FreeAutomorphism then(std::initializer_list<const FreeAutomorphism*> steps) {
  FreeAutomorphism phi = FreeAutomorphism::identity((*steps.begin())->rank());
  for (const auto* s : steps) phi = compose(*s, phi);
  return phi;
}

}  // namespace

bool braid_check(const TorusModel& model, const Curve& g, const Curve& d) {
  require_simple_loops(model, g, d, 1);
  const FreeAutomorphism tg = twist_automorphism(model, g, 1), td = twist_automorphism(model, d, 1);
  return is_inner(compose(then({&tg, &td, &tg}), then({&td, &tg, &td}).inverse())).has_value();
}

bool commute_check(const TorusModel& model, const Curve& g, const Curve& d) {
  require_simple_loops(model, g, d, 0);
  const FreeAutomorphism tg = twist_automorphism(model, g, 1), td = twist_automorphism(model, d, 1);
  return is_inner(compose(then({&tg, &td}), then({&td, &tg}).inverse())).has_value();
}

}  // namespace tmcg
