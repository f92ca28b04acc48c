// Deterministic random generation and brute-force oracles, kept independent
// of the library paths they check. Shared by the tests and the verification suites.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tmcg/freegroup.hpp"
#include "tmcg/mcg.hpp"

namespace tmcg::oracles {

/// std::mt19937 is fully specified; only raw draws are used so results are
/// identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng_() % static_cast<std::uint32_t>(hi - lo + 1));
  }
  bool coin() { return (eng_() & 1u) != 0; }

 private:
  std::mt19937 eng_;
};

inline std::vector<Letter> random_letters(Rng& rng, int rank, int length) {
  std::vector<Letter> raw;
  for (int i = 0; i < length; ++i) raw.push_back(make_letter(rng.uniform(0, rank - 1), rng.coin() ? 1 : -1));
  return raw;
}

inline Word random_reduced(Rng& rng, int rank, int max_length) {
  return Word::reduce(random_letters(rng, rank, rng.uniform(0, max_length)));
}

/// One elementary Nielsen move together with its inverse.
inline FreeAutomorphism random_nielsen(Rng& rng, int rank) {
  std::vector<Word> img, inv;
  for (int g = 0; g < rank; ++g) {
    img.push_back(Word::generator(g));
    inv.push_back(Word::generator(g));
  }
  const int i = rng.uniform(0, rank - 1);
  int j = rng.uniform(0, rank - 2);
  if (j >= i) ++j;
  const Word xi = Word::generator(i), xj = Word::generator(j);
  switch (rng.uniform(0, 4)) {
    case 0:  // x_i -> x_i x_j
      img[i] = xi * xj;
      inv[i] = xi * xj.inverse();
      break;
    case 1:  // x_i -> x_j x_i
      img[i] = xj * xi;
      inv[i] = xj.inverse() * xi;
      break;
    case 2:  // x_i -> x_i^-1
      img[i] = xi.inverse();
      inv[i] = xi.inverse();
      break;
    case 3:  // swap x_i, x_j
      img[i] = xj;
      img[j] = xi;
      inv[i] = xj;
      inv[j] = xi;
      break;
    default:  // x_i -> x_i x_j^-1
      img[i] = xi * xj.inverse();
      inv[i] = xi * xj;
      break;
  }
  return FreeAutomorphism(rank, img, inv);
}

/// Random automorphism whose generator images all have length <= max_image.
/// Roughly half the samples are composed with a short inner automorphism so
/// both answers of the inner-automorphism test are exercised.
inline FreeAutomorphism random_short_automorphism(Rng& rng, int rank, std::size_t max_image) {
  for (;;) {
    FreeAutomorphism phi = FreeAutomorphism::identity(rank);
    const int moves = rng.uniform(0, 3);
    for (int k = 0; k < moves; ++k) phi = compose(random_nielsen(rng, rank), phi);
    if (rng.coin()) phi = compose(FreeAutomorphism::conjugation(rank, random_reduced(rng, rank, 2)), phi);
    bool short_enough = true;
    for (int g = 0; g < rank; ++g) short_enough = short_enough && phi.image(g).size() <= max_image;
    if (short_enough) return phi;
  }
}

/// All reduced words of length <= max_length, by explicit enumeration.
inline std::vector<Word> all_reduced_words(int rank, int max_length) {
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<Word> out{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer)
      for (int g = 0; g < rank; ++g)
        for (int s : {1, -1}) {
          Letter l = make_letter(g, s);
          if (!w.empty() && w.back() == -l) continue;
          auto v = w;
          v.push_back(l);
          next.push_back(v);
        }
    for (const auto& v : next) out.push_back(Word::reduce(v));
    layer = std::move(next);
  }
  return out;
}

/// Brute-force inner test: search the given candidate conjugators.
inline std::optional<Word> brute_force_conjugator(const FreeAutomorphism& phi, const std::vector<Word>& candidates) {
  for (const Word& w : candidates) {
    const Word wi = w.inverse();
    bool ok = true;
    for (int g = 0; g < phi.rank() && ok; ++g) ok = phi.image(g) == w * Word::generator(g) * wi;
    if (ok) return w;
  }
  return std::nullopt;
}

/// Word of up to max_length generators TY, T_k, H_k with powers +-1.
inline MappingClass random_mapping_class(Rng& rng, int n, int max_length) {
  std::vector<TwistGenerator> w;
  const int len = rng.uniform(0, max_length);
  for (int i = 0; i < len; ++i) {
    const int kind = rng.uniform(0, 2);
    const long power = rng.coin() ? 1 : -1;
    if (kind == 0)
      w.push_back({TwistKind::TY, 0, power});
    else
      w.push_back({kind == 1 ? TwistKind::T : TwistKind::H, rng.uniform(1, n), power});
  }
  return MappingClass(n, w);
}

}  // namespace tmcg::oracles
