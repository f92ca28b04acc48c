#include "tmcg/bgroup.hpp"

#include <stdexcept>

namespace tmcg {

FiberConfig::FiberConfig(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("fiber configuration needs at least one fiber");
  for (int c : counts_)
    if (c < 2) throw std::invalid_argument("each fiber needs at least 2 components, got " + std::to_string(c));
}

std::string to_string(const BGen& g) {
  std::string s = "g" + std::to_string(g.fiber) + "." + std::to_string(g.i) + "[" + std::to_string(g.a) + "]";
  return g.sign < 0 ? s + "^-1" : s;
}

std::string to_string(const BWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : " ") + to_string(g);
  return s;
}

BWord inverse(const BWord& w) {
  BWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

BWord reduce(const BWord& w) {
  BWord out;
  for (const auto& g : w) {
    if (!out.empty() && out.back() == g.inverse())
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

void check_word(const BWord& w, const FiberConfig& cfg) {
  for (const auto& g : w) {
    if (g.fiber < 1 || g.fiber > static_cast<int>(cfg.size()))
      throw std::invalid_argument("fiber index " + std::to_string(g.fiber) + " out of range 1.." + std::to_string(cfg.size()));
    if (g.i < 1 || g.i > cfg.components(g.fiber))
      throw std::invalid_argument("component index " + std::to_string(g.i) + " out of range 1.." +
                                  std::to_string(cfg.components(g.fiber)) + " on fiber " + std::to_string(g.fiber));
    if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  }
}

std::vector<MappingClass> image(const BWord& w, const FiberConfig& cfg) {
  check_word(w, cfg);
  std::vector<std::vector<TwistGenerator>> words(cfg.size());
  for (const auto& g : w) {
    const MappingClass h = half_twist_along(cfg.components(g.fiber), g.i, g.a, g.sign);
    auto& dst = words[static_cast<std::size_t>(g.fiber - 1)];
    dst.insert(dst.end(), h.word().begin(), h.word().end());
  }
  std::vector<MappingClass> out;
  for (std::size_t j = 0; j < cfg.size(); ++j) out.emplace_back(cfg.counts()[j], std::move(words[j]));
  return out;
}

bool is_in_kernel(const BWord& w, const FiberConfig& cfg) {
  for (const auto& m : image(w, cfg))
    if (!equal(m, MappingClass::identity(m.n()))) return false;
  return true;
}

BWord component_pair(int fiber, int i, int a) { return {{fiber, i, a, 1}, {fiber, i, a - 1, 1}}; }

BWord fiber_class_word(const FiberConfig& cfg, int fiber) {
  BWord out;
  for (int i = 1; i <= cfg.components(fiber); ++i) {
    const BWord p = component_pair(fiber, i);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

BWord express_in_generators(int fiber, int i, int a) {
  if (a == -1 || a == 0) return {{fiber, i, a, 1}};
  // g(a) g(a-1) = D for all a, so g(a) = D g(a-1)^-1 and g(a-1) = g(a)^-1 D.
  const BWord d = component_pair(fiber, i, 0);
  BWord out;
  if (a > 0) {
    out = d;
    const BWord prev = inverse(express_in_generators(fiber, i, a - 1));
    out.insert(out.end(), prev.begin(), prev.end());
  } else {
    out = inverse(express_in_generators(fiber, i, a + 1));
    out.insert(out.end(), d.begin(), d.end());
  }
  return reduce(out);
}

}  // namespace tmcg
