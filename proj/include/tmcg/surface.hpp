// Flat model of the n-punctured torus: exact-rational polyline curves,
// tracing against a cut system, general position, geometric intersection
// numbers and tight representatives.
//
// Coordinates live in the plane R^2 covering the unit-square torus. A curve
// is stored unwrapped: consecutive points are joined by straight segments in
// R^2, and a closed curve ends at its first point plus an integral
// translation. No floating point is used anywhere in this module.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmcg/freegroup.hpp"

namespace tmcg {

using Rational = mpq_class;

struct Point {
  Rational x, y;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
};

std::string to_string(const Point& p);

/// Raised for degenerate geometric input or exhausted iteration caps.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CurveKind {
  Loop,       ///< free loop avoiding the punctures
  Arc,        ///< puncture-to-puncture arc
  BasedLoop,  ///< loop through the model's basepoint, which stays fixed
};

struct Curve {
  CurveKind kind = CurveKind::Loop;
  int start_puncture = 0;  ///< arcs only, 1-based
  int end_puncture = 0;    ///< arcs only, 1-based
  std::vector<Point> points;

  bool closed() const { return kind != CurveKind::Arc; }
  std::size_t segment_count() const { return points.empty() ? 0 : points.size() - 1; }
  /// back() - front(); integral for closed curves.
  Point translation() const { return points.back() - points.front(); }
};

/// Unit square with opposite sides identified, punctures p_k = ((2k-1)/(2n), 1/2)
/// and a cut system made of the square's edges plus the vertical slits from
/// each puncture up to the top edge. The slit complement is a disk, so a
/// curve's crossing sequence with the cuts spells its homotopy class.
///
/// Generators of pi_1: A (index 0) crosses the vertical edge rightward and
/// B_k (index k) crosses the horizontal edge upward between p_k and p_{k+1}.
class TorusModel {
 public:
  explicit TorusModel(int n);

  int n() const { return n_; }
  int rank() const { return n_ + 1; }
  Alphabet alphabet() const { return Alphabet::torus(n_); }

  /// k = 1..n.
  const Rational& puncture_x(int k) const;
  Point puncture(int k) const;
  /// x coordinate of the vertical loop B_k: k/n for k < n, (4n-1)/(4n) for k = n.
  const Rational& b_position(int k) const;
  const Point& basepoint() const { return basepoint_; }
  /// True iff p is a lift of some puncture.
  bool is_puncture_lift(const Point& p) const;
  /// Index of the puncture p lifts, or 0.
  int puncture_index(const Point& p) const;

  /// Horizontal loop at y = 1/4.
  Curve A() const;
  /// Vertical loop at x = b_position(k).
  Curve B(int k) const;
  /// Straight midline arc p_k -> p_{k+1} (indices mod n; the last wraps).
  Curve base_arc(int k) const;
  /// Small counterclockwise square around p_k.
  Curve puncture_loop(int k) const;
  /// Generator g (0 = A, k = B_k) as a loop through the basepoint.
  Curve based_generator(int g) const;

  /// Dictionary from cut crossings to generator words; c_k are the puncture
  /// loops traced from the right-hand side of slit k.
  const Word& vertical_edge_word() const { return v_word_; }
  const Word& horizontal_edge_word(int j) const { return h_words_.at(static_cast<std::size_t>(j)); }
  const Word& slit_word(int k) const { return s_words_.at(static_cast<std::size_t>(k - 1)); }
  const Word& peripheral_word(int k) const { return c_words_.at(static_cast<std::size_t>(k - 1)); }
  const PeripheralStructure& peripheral() const { return peripheral_; }

  /// Support rectangle of the half twist along base_arc(k), in the base square's frame
  /// (the one for k = n straddles x = 1).
  struct Rect {
    Point lo, hi;
    Point center() const;
  };
  Rect twist_rectangle(int k) const;

 private:
  int n_;
  std::vector<Rational> px_;
  std::vector<Rational> bx_;
  Point basepoint_;
  Word v_word_;
  std::vector<Word> h_words_;
  std::vector<Word> s_words_;
  std::vector<Word> c_words_;
  PeripheralStructure peripheral_;
};

/// Throws std::invalid_argument if the curve is malformed for the model:
/// zero-length segments, non-integral closure, arc endpoints off punctures,
/// interior passing through a puncture, based loop not at the basepoint.
void validate(const TorusModel& model, const Curve& c);

/// Lexicographic a + b*eps + c*eps^2 with 0 < eps^2 << eps. Used to place
/// parameters of a curve shifted by (eps, eps^2), which never meets a cut vertex.
struct ShiftedParam {
  Rational a, b, c;
};
int compare(const ShiftedParam& p, const ShiftedParam& q);

struct CutCrossing {
  std::size_t segment;
  ShiftedParam t;
  Word word;  ///< dictionary word of this crossing, in generators A, B_k
};

/// All crossings with the cut system, in order along the curve.
std::vector<CutCrossing> cut_crossings(const TorusModel& model, const Curve& c);

/// Product of the crossing words: for a based loop its element of pi_1, for
/// an arc the sheet change from start to end.
Word traced_word(const TorusModel& model, const Curve& c);

/// Conjugacy class of a closed curve.
CyclicWord word_of_loop(const TorusModel& model, const Curve& loop);

/// Canonical representative of the double coset <c_start> w <c_end> that
/// classifies an arc up to homotopy rel punctures.
Word arc_class_word(const TorusModel& model, const Curve& arc);

/// True iff the two curves are homotopic (loops freely, possibly reversed;
/// arcs rel endpoints, possibly reversed).
bool same_class(const TorusModel& model, const Curve& a, const Curve& b);

/// A transverse crossing between a and b + shift.
struct CurveCrossing {
  std::size_t segment_a;
  Rational t_a;
  std::size_t segment_b;
  Rational t_b;
  Point shift;  ///< integral translation applied to b
  Point where;
  int sign;  ///< sign of cross(direction a, direction b)
};

/// True iff the only contacts between a and b are proper transverse crossings
/// (plus shared puncture endpoints of arcs).
bool in_general_position(const TorusModel& model, const Curve& a, const Curve& b);

/// True iff c has no self-contacts other than its own consecutive vertices.
bool is_simple(const TorusModel& model, const Curve& c);

/// Crossings of a and b; throws GeometryError if they are not in general position.
std::vector<CurveCrossing> transverse_crossings(const TorusModel& model, const Curve& a, const Curve& b);

/// Returns (a, b') with b' homotopic to b, perturbed by a fixed schedule of
/// small rational vertex moves until the pair is transverse. Endpoints at
/// punctures and the basepoint never move.
std::pair<Curve, Curve> general_position(const TorusModel& model, const Curve& a, const Curve& b);

struct IntersectionOptions {
  long max_iterations = 10000;  ///< cap on bigon cancellations
};

/// Geometric intersection number. Crossings are grouped by the pair of lifts
/// to the universal cover they lie on; two crossings of the same pair bound a
/// bigon and cancel, so each pair contributes its crossing count mod 2. Pairs
/// of arc lifts sharing an ideal endpoint (a common puncture) contribute 0.
/// Throws std::invalid_argument if a and b are homotopic.
int intersection_number(const TorusModel& model, const Curve& a, const Curve& b, IntersectionOptions opts = {});

/// Rebuilds the curve from its reduced crossing word (cyclically reduced for
/// loops, double-coset minimal for arcs), which removes every monogon and
/// bigon against the cut system. The input is kept when it already crosses
/// the cuts no more often and has no more segments.
Curve minimal_representative(const TorusModel& model, const Curve& c);

/// Loop through the cuts spelling the cyclic word w (nonempty).
Curve loop_from_word(const TorusModel& model, const CyclicWord& w);
/// Based loop spelling w.
Curve based_loop_from_word(const TorusModel& model, const Word& w);
/// Arc from p_start to p_end whose sheet change is w.
Curve arc_from_word(const TorusModel& model, int start, int end, const Word& w);

}  // namespace tmcg
