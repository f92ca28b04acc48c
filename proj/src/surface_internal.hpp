// Exact planar helpers shared by the geometric sources.
#pragma once

#include <gmpxx.h>

#include "tmcg/surface.hpp"

namespace tmcg::geom {

inline int cmp(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline mpz_class floor_z(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}
inline long floor_long(const Rational& q) { return floor_z(q).get_si(); }
inline Rational frac(const Rational& q) { return q - Rational(floor_z(q)); }
inline Point frac_point(const Point& p) { return {frac(p.x), frac(p.y)}; }

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline int orient(const Point& a, const Point& b, const Point& c) {
  Rational r = cross(b - a, c - a);
  return r > 0 ? 1 : (r < 0 ? -1 : 0);
}
inline Point scale(const Point& p, const Rational& s) { return {p.x * s, p.y * s}; }
inline Point lerp(const Point& p, const Point& q, const Rational& t) { return p + scale(q - p, t); }

/// z lies on the closed segment [p, q].
inline bool on_segment(const Point& p, const Point& q, const Point& z) {
  if (orient(p, q, z) != 0) return false;
  return min(p.x, q.x) <= z.x && z.x <= max(p.x, q.x) && min(p.y, q.y) <= z.y && z.y <= max(p.y, q.y);
}

}  // namespace tmcg::geom

namespace tmcg::geom {
inline Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}
}  // namespace tmcg::geom

namespace tmcg::geom {

enum class ContactKind { None, Cross, Touch, Overlap };

struct Contact {
  ContactKind kind = ContactKind::None;
  Point at;          // Touch and Cross
  Rational ta, tb;   // Cross
  int sign = 0;      // Cross: sign of cross(q1 - q0 direction after p)
};

/// How the closed segments [p0, p1] and [q0, q1] meet.
Contact classify(const Point& p0, const Point& p1, const Point& q0, const Point& q1);

}  // namespace tmcg::geom
