// One PASS/FAIL line per acceptance criterion. Counts are exact; the time
// limits below are wall-clock budgets.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "tmcg/bgroup.hpp"
#include "tmcg/dcat.hpp"
#include "tmcg/oracles.hpp"
#include "tmcg/suites.hpp"

using namespace tmcg;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kDictionarySecondsPerN = 5.0;
constexpr double kRelationsSecondsTotal = 30.0;
constexpr double kLatticeSecondsTotal = 1.0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int prev_of(int n, int i) { return i == 1 ? n : i - 1; }
int next_of(int n, int i) { return i == n ? 1 : i + 1; }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Outcome ac1() {
  Outcome o;
  double worst = 0;
  for (int n : {3, 4, 5}) {
    const auto t0 = Clock::now();
    const TorusModel m(n);
    const Curve psi = act(m, twist_H(n, 1), m.B(1));
    const std::string at = " (n=" + std::to_string(n) + ")";
    o.require(intersection_or_zero(m, psi, m.B(1)) == 2, "i(psi, B1) != 2" + at);
    o.require(intersection_or_zero(m, psi, m.A()) == 1, "i(psi, A) != 1" + at);
    for (int j = 1; j <= n; ++j) {
      const int want = (j == 1 || j == 2 || j == n) ? 1 : 0;
      o.require(intersection_or_zero(m, psi, derived_arc(m, j, -1)) == want, "i(psi, ARC_j(-1)) wrong for j=" + std::to_string(j) + at);
      if (j >= 2) o.require(intersection_or_zero(m, psi, m.B(j)) == 0, "i(psi, B_j) != 0 for j=" + std::to_string(j) + at);
    }
    o.require(intersection_or_zero(m, psi, derived_arc(m, 1, 0)) == 3, "i(psi, ARC_1(0)) != 3" + at);
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    o.require(s < kDictionarySecondsPerN, "time limit exceeded" + at);
  }
  o.detail = o.ok ? "n=3,4,5 exact; slowest n " + std::to_string(worst) + " s" : o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  std::string values;
  for (int n : {3, 4, 5}) {
    const TorusModel m(n);
    const int chosen = intersection_or_zero(m, act(m, twist_H(n, 1), m.B(1)), derived_arc(m, 1, 0));
    const int rejected = intersection_or_zero(m, act(m, twist_H(n, 1, -1), m.B(1)), derived_arc(m, 1, 0));
    o.require(chosen == 3 && rejected != 3, "candidates not separated at n=" + std::to_string(n));
    values += (values.empty() ? "" : ", ") + std::to_string(rejected);
  }
  if (o.ok) o.detail = "tau_1: 3, inverse candidate: " + values;
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto t0 = Clock::now();
  long checks = 0;
  for (int n = 3; n <= 6; ++n) {
    const std::string at = " (n=" + std::to_string(n) + ")";
    for (int i = 1; i <= n; ++i) {
      const MappingClass t = twist_T(n, i);
      const MappingClass d = twist_T(n, prev_of(n, i)) * twist_T(n, i, -2) * twist_T(n, next_of(n, i));
      for (int b = -2; b <= 2; ++b) {
        const MappingClass tau = half_twist_along(n, i, b);
        o.require(equal(tau * t * tau * t.inverse(), d), "twist/half-twist relation" + at);
        o.require(equal(t.inverse() * tau * t, half_twist_along(n, i, b + 1)), "conjugation law" + at);
        checks += 2;
      }
      for (int j = i + 1; j <= n; ++j, ++checks) o.require(equal(t * twist_T(n, j), twist_T(n, j) * t), "T_i T_j commute" + at);
      const MappingClass h = twist_H(n, i), h2 = twist_H(n, next_of(n, i));
      o.require(equal(h * h2 * h, h2 * h * h2), "half-twist braid" + at);
      ++checks;
      for (int j = i + 2; j <= n; ++j) {
        if (i == 1 && j == n) continue;
        o.require(equal(h * twist_H(n, j), twist_H(n, j) * h), "half-twist commutation" + at);
        ++checks;
      }
    }
    const MappingClass y = twist_TY(n), b1 = twist_T(n, 1);
    o.require(equal(y * b1 * y, b1 * y * b1), "T_A T_B1 braid" + at);
    ++checks;
  }
  const double s = seconds_since(t0);
  o.require(s < kRelationsSecondsTotal, "time limit exceeded");
  if (o.ok) o.detail = std::to_string(checks) + " identities in " + std::to_string(s) + " s";
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 2; n <= 8; ++n) {
    const std::string at = " (n=" + std::to_string(n) + ")";
    const auto k = form_kernel(n);
    o.require(k.size() == 1, "kernel dimension" + at);
    if (k.size() == 1)
      for (const auto& x : k.front()) o.require(x == k.front().front() && x != 0, "kernel not all-ones" + at);
    for (int i = 1; i <= n; ++i) {
      MultiDegree e(static_cast<std::size_t>(n), 0), row(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i - 1)] = 1;
      row[static_cast<std::size_t>(i - 1)] -= 2;
      row[static_cast<std::size_t>(prev_of(n, i) - 1)] += 1;
      row[static_cast<std::size_t>(next_of(n, i) - 1)] += 1;
      o.require(!in_restriction_lattice(e), "e_i accepted" + at);
      o.require(in_restriction_lattice(row), "row rejected" + at);
    }
    const FiberConfig cfg({n});
    o.require(is_in_kernel(fiber_class_word(cfg, 1), cfg), "fiber-class word rejected" + at);
    for (int i = 1; i <= n; ++i) o.require(!is_in_kernel(component_pair(1, i), cfg), "single pair accepted" + at);
  }
  const double s = seconds_since(t0);
  o.require(s < kLatticeSecondsTotal, "time limit exceeded");
  if (o.ok) o.detail = "n=2..8 in " + std::to_string(s) + " s";
  return o;
}

Outcome ac5() {
  Outcome o;
  oracles::Rng rng(5);
  const auto candidates = oracles::all_reduced_words(3, 6);
  int agree = 0, inner = 0;
  for (int t = 0; t < 200; ++t) {
    const FreeAutomorphism phi = oracles::random_short_automorphism(rng, 3, 4);
    const bool fast = is_inner(phi).has_value(), brute = oracles::brute_force_conjugator(phi, candidates).has_value();
    agree += fast == brute;
    inner += brute;
  }
  o.require(agree == 200, std::to_string(agree) + "/200 agree");
  if (o.ok) o.detail = "200/200 agree (" + std::to_string(inner) + " inner)";
  return o;
}

struct RandomWordRun {
  int identity = 0, trips = 0, trip_total = 0, peripheral = 0;
};

std::vector<int> transpositions(const MappingClass& w) {
  std::vector<int> perm(static_cast<std::size_t>(w.n()));
  for (int i = 0; i < w.n(); ++i) perm[static_cast<std::size_t>(i)] = i;
  for (const auto& g : w.word()) {
    if (g.kind != TwistKind::H || g.power % 2 == 0) continue;
    const int a = g.index - 1, b = g.index % w.n();
    for (auto& x : perm) x = x == a ? b : (x == b ? a : x);
  }
  return perm;
}

const RandomWordRun& random_words() {
  static const RandomWordRun run = [] {
    RandomWordRun r;
    const int n = 3;
    const TorusModel m(n);
    oracles::Rng rng(6);
    for (int t = 0; t < 50; ++t) {
      const MappingClass w = oracles::random_mapping_class(rng, n, 6);
      r.identity += equal(w * w.inverse(), MappingClass::identity(n));
      for (const Curve& x : {m.A(), m.B(1), m.base_arc(1)}) {
        ++r.trip_total;
        const Curve back = act(m, w.inverse(), act(m, w, x));
        bool ok = x.closed() ? word_of_loop(m, back) == word_of_loop(m, x) : arc_class_word(m, back) == arc_class_word(m, x);
        for (const Curve& probe : {m.A(), m.B(1), m.B(2), m.B(3), m.base_arc(1), m.base_arc(2), m.base_arc(3)})
          ok = ok && intersection_or_zero(m, back, probe) == intersection_or_zero(m, x, probe);
        r.trips += ok;
      }
      const auto perm = peripheral_check(w.outer(), m.peripheral());
      r.peripheral += perm && *perm == transpositions(w);
    }
    return r;
  }();
  return run;
}

Outcome ac6() {
  Outcome o;
  const auto& r = random_words();
  o.require(r.identity == 50, "w w^-1 != id in " + std::to_string(50 - r.identity) + " cases");
  o.require(r.trips == r.trip_total, "round trip failed in " + std::to_string(r.trip_total - r.trips) + " cases");
  if (o.ok) o.detail = "50/50 identities, " + std::to_string(r.trips) + "/" + std::to_string(r.trip_total) + " round trips";
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto& r = random_words();
  o.require(r.peripheral == 50, std::to_string(r.peripheral) + "/50 permutations match");
  if (o.ok) o.detail = "50/50 permutations match";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 dictionary counts", ac1},
      {"AC2 candidate disambiguation", ac2},
      {"AC3 relation suite", ac3},
      {"AC4 kernel and lattice", ac4},
      {"AC5 inner-automorphism oracle", ac5},
      {"AC6 round trips", ac6},
      {"AC7 peripheral bookkeeping", ac7},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << '\n';
  }
  return failed ? 1 : 0;
}
