#include "tmcg/suites.hpp"

#include <algorithm>
#include <set>

#include "tmcg/dcat.hpp"
#include "tmcg/oracles.hpp"
#include "tmcg/syntax.hpp"

namespace tmcg {

int intersection_or_zero(const TorusModel& model, const Curve& a, const Curve& b, IntersectionOptions opts) {
  if (same_class(model, a, b)) return 0;
  return intersection_number(model, a, b, opts);
}

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(long v) { return std::to_string(v); }
std::string tally(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

std::string prefix(const std::string& suite, int n) { return suite + "/n=" + std::to_string(n) + "/"; }

std::set<int> range_with(int lo, int hi, const std::optional<int>& extra) {
  std::set<int> out;
  for (int n = lo; n <= hi; ++n) out.insert(n);
  if (extra) out.insert(*extra);
  return out;
}

int prev_of(int n, int i) { return i == 1 ? n : i - 1; }
int next_of(int n, int i) { return i == n ? 1 : i + 1; }

MappingClass fiber_twist(int n, int i) { return twist_T(n, prev_of(n, i)) * twist_T(n, i, -2) * twist_T(n, next_of(n, i)); }

// ---------------------------------------------------------------- dictionary

void dictionary_counts(Report& r, int n, const SuiteOptions& opts) {
  const TorusModel m(n);
  const std::string p = prefix("dictionary", n);
  const Curve psi = act(m, twist_H(n, 1), m.B(1));
  auto count = [&](const std::string& name, const Curve& other, long expected, const std::string& anchor) {
    r.check(p + name, str(expected), str(static_cast<long>(intersection_or_zero(m, psi, other, opts.geometry))), anchor);
  };
  if (n >= 3) {
    count("psi1.B1", m.B(1), 2, "i(tau_1(B_1), B_1) = 2 = dim Hom(Psi O_x1, O_x1)");
    count("psi1.A", m.A(), 1, "i(tau_1(B_1), A) = 1 = dim Hom(Psi O_x1, O_Y)");
    for (int j = 1; j <= n; ++j) {
      const long expected = (j == 1 || j == 2 || j == n) ? 1 : 0;
      count("psi1.ARC" + str(static_cast<long>(j)) + "(-1)", derived_arc(m, j, -1), expected,
            "i(tau_1(B_1), ARC_j(-1)) = 1 for j in {1, 2, n}, else 0");
      if (j >= 2) count("psi1.B" + str(static_cast<long>(j)), m.B(j), 0, "i(tau_1(B_1), B_j) = 0 for j != 1");
    }
    count("psi1.ARC1(0)", derived_arc(m, 1, 0), 3, "i(tau_1(B_1), ARC_1(0)) = 3 = dim Hom(Psi O_x1, O_G1)");
    const Curve rejected = act(m, twist_H(n, 1, -1), m.B(1));
    const int v = intersection_or_zero(m, rejected, derived_arc(m, 1, 0), opts.geometry);
    r.add({p + "candidate.inverse-psi1.ARC1(0)", v != 3 ? Status::Pass : Status::Fail, "!= 3", str(static_cast<long>(v)),
           "the inverse half twist fails i(., ARC_1(0)) = 3, which singles out tau_1"});
  }
  for (const auto& [e, f] : tabulated_pairs(n)) {
    r.check(p + "hom." + to_string(e) + "." + to_string(f), str(static_cast<long>(hom_total(n, e, f))),
            str(static_cast<long>(intersection_or_zero(m, curve_of(m, e), curve_of(m, f), opts.geometry))),
            "dim Hom(E, F) = i(gamma_E, gamma_F)");
  }
}

Report dictionary_suite(const SuiteOptions& opts) {
  Report r("dictionary");
  std::set<int> ns{3, 4, 5};
  if (opts.n) ns.insert(*opts.n);
  for (int n : ns) dictionary_counts(r, n, opts);
  return r;
}

// ---------------------------------------------------------------- relations

Report relations_suite(const SuiteOptions& opts) {
  Report r("relations");
  for (int n : range_with(3, 6, opts.n)) {
    if (n < 3) continue;
    const std::string p = prefix("relations", n);
    const TorusModel m(n);
    for (int i = 1; i <= n; ++i) {
      const std::string si = "i=" + str(static_cast<long>(i));
      const MappingClass t = twist_T(n, i);
      for (int b = -3; b <= 3; ++b) {
        const std::string sb = "b=" + str(static_cast<long>(b));
        const MappingClass tau = half_twist_along(n, i, b);
        if (b >= -2 && b <= 2)
          r.check(p + "twist-half-twist." + si + "." + sb, "true", str(equal(tau * t * tau * t.inverse(), fiber_twist(n, i))),
                  "tau_{i,b} T_i tau_{i,b} T_i^-1 = T_{i-1} T_i^-2 T_{i+1}");
        r.check(p + "conjugation." + si + "." + sb, "true", str(equal(t.inverse() * tau * t, half_twist_along(n, i, b + 1))),
                "conjugating tau_{i,b} by T_i gives tau_{i,b+1}");
      }
      for (int j = i + 1; j <= n; ++j)
        r.check(p + "twist-commute." + si + ".j=" + str(static_cast<long>(j)), "true",
                str(equal(t * twist_T(n, j), twist_T(n, j) * t)), "T_i T_j = T_j T_i");
      const MappingClass y = twist_TY(n);
      r.check(p + "twist-braid.A.B" + str(static_cast<long>(i)), "true", str(equal(y * t * y, t * y * t)),
              "T_A T_B T_A = T_B T_A T_B for loops meeting once");
      const MappingClass h = twist_H(n, i), h2 = twist_H(n, next_of(n, i));
      r.check(p + "half-twist-braid." + si, "true", str(equal(h * h2 * h, h2 * h * h2)),
              "H_i H_{i+1} H_i = H_{i+1} H_i H_{i+1}");
      r.check(p + "half-twist-adjacent." + si, "false", str(equal(h * h2, h2 * h)),
              "adjacent half twists braid and do not commute");
      for (int j = i + 2; j <= n; ++j) {
        if (i == 1 && j == n) continue;
        const MappingClass hj = twist_H(n, j);
        r.check(p + "half-twist-commute." + si + ".j=" + str(static_cast<long>(j)), "true", str(equal(h * hj, hj * h)),
                "H_i H_j = H_j H_i for disjoint arcs");
      }
      if (n == 3) {
        r.check(p + "braid-check.A.B" + str(static_cast<long>(i)), "true", str(braid_check(m, m.A(), m.B(i))),
                "twists along loops meeting once braid");
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- lattice and kernel

Report lattice_suite(const SuiteOptions& opts) {
  Report r("lattice");
  for (int n : range_with(2, 8, opts.n)) {
    const std::string p = prefix("lattice", n);
    const auto k = form_kernel(n);
    r.check(p + "kernel-dimension", "1", str(static_cast<long>(k.size())), "the fiber intersection form has a one-dimensional kernel");
    bool all_equal = k.size() == 1 && k.front().front() != 0 &&
                     std::all_of(k.front().begin(), k.front().end(), [&](const mpq_class& x) { return x == k.front().front(); });
    r.check(p + "kernel-all-ones", "true", str(all_equal), "the kernel is spanned by the fiber class (1, ..., 1)");
    for (int i = 1; i <= n; ++i) {
      MultiDegree e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i - 1)] = 1;
      const std::string si = "i=" + str(static_cast<long>(i));
      r.check(p + "rejects-e." + si, "false", str(in_restriction_lattice(e)), "e_i is not a restriction of a fiber divisor");
      r.check(p + "accepts-row." + si, "true",
              str(in_restriction_lattice(multidegree(n, {{DivisorTerm::Kind::Component, i, 1}}))),
              "e_{i-1} - 2 e_i + e_{i+1} = deg O(G_i)|_Y");
    }
  }
  return r;
}

void kernel_checks(Report& r, const std::string& p, const FiberConfig& cfg) {
  BWord all;
  for (int j = 1; j <= static_cast<int>(cfg.size()); ++j) {
    const BWord y = fiber_class_word(cfg, j);
    all.insert(all.end(), y.begin(), y.end());
    r.check(p + "fiber-class.j=" + str(static_cast<long>(j)), "true", str(is_in_kernel(y, cfg)),
            "tensoring by O_S(Y_j) maps to the identity");
    for (int i = 1; i <= cfg.components(j); ++i)
      r.check(p + "single-pair.j=" + str(static_cast<long>(j)) + ".i=" + str(static_cast<long>(i)), "false",
              str(is_in_kernel(component_pair(j, i), cfg)), "tensoring by O_S(G_i) maps to T_{i-1} T_i^-2 T_{i+1} != id");
  }
  if (cfg.size() > 1)
    r.check(p + "all-fibers", "true", str(is_in_kernel(all, cfg)), "the kernel is a subgroup");
}

Report kernel_suite(const SuiteOptions& opts) {
  Report r("kernel");
  for (int n : range_with(2, 8, opts.n)) kernel_checks(r, prefix("kernel", n), FiberConfig({n}));
  if (opts.fibers) {
    std::string name = "kernel/fibers=";
    for (std::size_t j = 0; j < opts.fibers->size(); ++j) name += (j ? "," : "") + str(static_cast<long>(opts.fibers->counts()[j]));
    kernel_checks(r, name + "/", *opts.fibers);
  }
  for (int n : range_with(3, 4, std::nullopt)) {
    const FiberConfig cfg({n});
    const std::string p = prefix("kernel", n);
    for (int i = 1; i <= n; ++i)
      for (int a = -3; a <= 3; ++a) {
        const std::string tag = "i=" + str(static_cast<long>(i)) + ".a=" + str(static_cast<long>(a));
        r.check(p + "pair-image." + tag, "true", str(equal(image(component_pair(1, i, a), cfg)[0], fiber_twist(n, i))),
                "T_{O_G(a)} T_{O_G(a-1)} maps to T_{i-1} T_i^-2 T_{i+1} for every a");
        r.check(p + "generators." + tag, "true",
                str(equal(image(express_in_generators(1, i, a), cfg)[0], image({{1, i, a, 1}}, cfg)[0])),
                "T_{O_G(a)} lies in the group generated by degrees -1 and 0");
      }
  }
  return r;
}

// ---------------------------------------------------------------- properties

bool same_profile(const TorusModel& m, const Curve& x, const Curve& y) {
  std::vector<Curve> probes{m.A()};
  for (int k = 1; k <= m.n(); ++k) {
    probes.push_back(m.B(k));
    probes.push_back(m.base_arc(k));
  }
  for (const auto& c : probes)
    if (intersection_or_zero(m, x, c) != intersection_or_zero(m, y, c)) return false;
  return true;
}

std::vector<int> composed_transpositions(const MappingClass& w) {
  const int n = w.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (const auto& g : w.word()) {
    if (g.kind != TwistKind::H || g.power % 2 == 0) continue;
    const int a = g.index - 1, b = g.index % n;
    for (auto& x : perm) {
      if (x == a) x = b;
      else if (x == b) x = a;
    }
  }
  return perm;
}

Report properties_suite(const SuiteOptions&) {
  Report r("properties");
  {
    oracles::Rng rng(5);
    const auto candidates = oracles::all_reduced_words(3, 6);
    int agree = 0;
    for (int t = 0; t < 200; ++t) {
      const FreeAutomorphism phi = oracles::random_short_automorphism(rng, 3, 4);
      if (is_inner(phi).has_value() == oracles::brute_force_conjugator(phi, candidates).has_value()) ++agree;
    }
    r.check("properties/inner-vs-brute-force", tally(200, 200), tally(agree, 200),
            "is_inner agrees with conjugator enumeration up to length 6");
  }
  {
    const int n = 3;
    const TorusModel m(n);
    oracles::Rng rng(6);
    int ident = 0, trips = 0, periph = 0, trips_total = 0;
    for (int t = 0; t < 50; ++t) {
      const MappingClass w = oracles::random_mapping_class(rng, n, 6);
      if (equal(w * w.inverse(), MappingClass::identity(n))) ++ident;
      for (const Curve& x : {m.A(), m.B(1), m.base_arc(1)}) {
        ++trips_total;
        const Curve back = act(m, w.inverse(), act(m, w, x));
        const bool words = x.closed() ? word_of_loop(m, back) == word_of_loop(m, x) : arc_class_word(m, back) == arc_class_word(m, x);
        if (words && same_profile(m, back, x)) ++trips;
      }
      const auto perm = peripheral_check(w.outer(), m.peripheral());
      if (perm && *perm == composed_transpositions(w)) ++periph;
    }
    r.check("properties/round-trip-identity", tally(50, 50), tally(ident, 50), "w w^-1 = id");
    r.check("properties/round-trip-act", tally(trips_total, trips_total), tally(trips, trips_total),
            "act(w^-1, act(w, x)) is isotopic to x");
    r.check("properties/peripheral", tally(50, 50), tally(periph, 50),
            "the outer class permutes the puncture classes by the product of the half-twist transpositions");
  }
  {
    oracles::Rng rng(7);
    const FiberConfig cfg({3, 4});
    auto random_bword = [&](int max_len) {
      BWord w;
      const int len = rng.uniform(0, max_len);
      for (int k = 0; k < len; ++k) {
        const int j = rng.uniform(1, 2);
        w.push_back({j, rng.uniform(1, cfg.components(j)), rng.uniform(-2, 1), rng.coin() ? 1 : -1});
      }
      return w;
    };
    int hom = 0, support = 0;
    for (int t = 0; t < 30; ++t) {
      BWord u = random_bword(3), v = random_bword(3), uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const auto iu = image(u, cfg), iv = image(v, cfg), iuv = image(uv, cfg);
      if (equal(iuv[0], iu[0] * iv[0]) && equal(iuv[1], iu[1] * iv[1])) ++hom;
      BWord f1;
      for (const auto& g : u) f1.push_back({1, std::min(g.i, 3), g.a, g.sign});
      if (equal(image(f1, cfg)[1], MappingClass::identity(4))) ++support;
    }
    r.check("properties/b-image-homomorphism", tally(30, 30), tally(hom, 30), "image(w w') = image(w) image(w')");
    r.check("properties/b-image-support", tally(30, 30), tally(support, 30), "a word on fiber 1 is trivial on every other fiber");
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "dictionary", "lattice", "kernel", "properties", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "relations") return relations_suite(opts);
  if (name == "dictionary") return dictionary_suite(opts);
  if (name == "lattice") return lattice_suite(opts);
  if (name == "kernel") return kernel_suite(opts);
  if (name == "properties") return properties_suite(opts);
  if (name == "all") {
    Report r("all");
    for (const auto& s : suite_names())
      if (s != "all") r.merge(run_suite(s, opts));
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace tmcg
