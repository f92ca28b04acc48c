// Mapping classes of the n-punctured torus as words in Dehn twists and half
// twists, acting on curves geometrically and on pi_1 as outer automorphisms.
//
// Words apply left to right: m1 m2 means "do m1, then m2". Consequently
// outer(m1 m2) = outer(m2) o outer(m1) and act(m1 m2, x) = act(m2, act(m1, x)).
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tmcg/freegroup.hpp"
#include "tmcg/surface.hpp"

namespace tmcg {

enum class TwistKind {
  TY,  ///< Dehn twist along A
  T,   ///< Dehn twist along B_k
  H,   ///< half twist along the straight arc p_k -> p_{k+1}
};

struct TwistGenerator {
  TwistKind kind = TwistKind::TY;
  int index = 0;  ///< k for T and H; unused for TY
  long power = 1;

  friend bool operator==(const TwistGenerator&, const TwistGenerator&) = default;
};

/// Orientation constants: +1 turns left into the core at each crossing.
/// The half-twist constant is fixed by calibration (see tests).
inline constexpr int kDehnHandedness = 1;
inline constexpr int kHalfTwistHandedness = -1;

class MappingClass {
 public:
  /// Throws std::invalid_argument for n < 2, indices out of range or zero powers.
  MappingClass(int n, std::vector<TwistGenerator> word);
  static MappingClass identity(int n) { return MappingClass(n, {}); }

  int n() const { return n_; }
  const std::vector<TwistGenerator>& word() const { return word_; }
  MappingClass inverse() const;
  friend MappingClass operator*(const MappingClass& a, const MappingClass& b);
  MappingClass pow(long k) const;

  /// Induced automorphism of pi_1 at the basepoint, a representative of the
  /// outer class. Computed once per value, thread-safe.
  const FreeAutomorphism& outer() const;
  /// perm[i] = j (0-based): puncture i+1 goes to puncture j+1.
  const std::vector<int>& perm() const;

 private:
  struct Lazy;
  int n_;
  std::vector<TwistGenerator> word_;
  std::shared_ptr<Lazy> lazy_;
};

/// Dehn twist T_k, TY and half twist H_k as one-letter classes.
MappingClass twist_T(int n, int k, long power = 1);
MappingClass twist_TY(int n, long power = 1);
MappingClass twist_H(int n, int k, long power = 1);
/// Half twist along ARC_k(a): T_k^-(a+1) H_k T_k^(a+1) as a left-to-right word.
MappingClass half_twist_along(int n, int k, int a, long power = 1);

/// Twist surgery at each crossing of x with the simple loop c; sign -1 gives
/// the inverse twist. Throws std::invalid_argument if c is not a simple loop.
Curve dehn_twist_action(const TorusModel& model, const Curve& c, const Curve& x, int sign);
/// Half twist along the straight arc from p_k to p_{k+1}.
Curve half_twist_action(const TorusModel& model, int k, const Curve& x, int sign);

/// Core loop used for a Dehn-twist generator: a parallel copy of A or B_k.
Curve twist_core(const TorusModel& model, TwistKind kind, int index);

Curve act(const TorusModel& model, const TwistGenerator& g, const Curve& x);
Curve act(const TorusModel& model, const MappingClass& m, const Curve& x);

/// ARC_k(a) = T_k^(a+1)(ARC_k(-1)).
Curve derived_arc(const TorusModel& model, int k, int a);

/// Automorphism read off directly from the images of the based generator
/// loops under the whole word (slower; used to cross-check outer()).
FreeAutomorphism geometric_outer(const TorusModel& model, const MappingClass& m);
/// Automorphism of a Dehn twist along an arbitrary simple loop (sign +-1).
FreeAutomorphism twist_automorphism(const TorusModel& model, const Curve& c, int sign);

/// Same puncture permutation and outer automorphisms differing by an inner one.
bool equal(const MappingClass& a, const MappingClass& b);

/// T_g T_d T_g == T_d T_g T_d for simple loops meeting once.
/// Throws std::invalid_argument unless both are simple loops with i(g, d) = 1.
bool braid_check(const TorusModel& model, const Curve& g, const Curve& d);
/// T_g T_d == T_d T_g for disjoint simple loops. Throws unless i(g, d) = 0.
bool commute_check(const TorusModel& model, const Curve& g, const Curve& d);

}  // namespace tmcg
