#include "tmcg/freegroup.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace tmcg {

// ---------------------------------------------------------------- Word

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("letter 0 is not a valid generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::generator(int g, long power) {
  if (g < 0) throw std::invalid_argument("negative generator index");
  std::vector<Letter> out(static_cast<std::size_t>(std::labs(power)), make_letter(g, power > 0 ? 1 : -1));
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::pow(long k) const {
  if (k == 0 || empty()) return {};
  if (k < 0) return inverse().pow(-k);
  // w^k = u r^k u^-1 with r cyclically reduced; build it directly.
  auto [u, r] = cyclic_split(*this);
  std::vector<Letter> out;
  out.reserve(2 * u.size() + r.size() * static_cast<std::size_t>(k));
  out.insert(out.end(), u.letters_.begin(), u.letters_.end());
  for (long i = 0; i < k; ++i) out.insert(out.end(), r.letters_.begin(), r.letters_.end());
  Word ui = u.inverse();
  out.insert(out.end(), ui.letters_.begin(), ui.letters_.end());
  return Word(std::move(out));
}

int Word::max_generator() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, generator_of(l));
  return m;
}

Word operator*(const Word& u, const Word& v) {
  Word out = u;
  out *= v;
  return out;
}

Word& Word::operator*=(const Word& v) {
  std::size_t i = 0;
  while (i < v.letters_.size() && !letters_.empty() && letters_.back() == -v.letters_[i]) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(i), v.letters_.end());
  return *this;
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate generator name " + names_[i]);
}

Alphabet Alphabet::torus(int n) {
  std::vector<std::string> names{"A"};
  for (int k = 1; k <= n; ++k) names.push_back("B" + std::to_string(k));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::letters(int rank) {
  if (rank < 1 || rank > 26) throw std::invalid_argument("rank out of range for letter alphabet");
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long power = static_cast<long>(j - i) * sign_of(ls[i]);
    if (!first) os << ' ';
    first = false;
    os << name(generator_of(ls[i]));
    if (power != 1) os << '^' << power;
    i = j;
  }
  return os.str();
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Letter> raw;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    long power = 1;
    std::string_view base = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = std::string_view(tok).substr(0, caret);
      std::string_view ps = std::string_view(tok).substr(caret + 1);
      auto [ptr, ec] = std::from_chars(ps.data(), ps.data() + ps.size(), power);
      if (ec != std::errc() || ptr != ps.data() + ps.size()) throw std::invalid_argument("malformed power in " + tok);
    }
    auto g = index(base);
    if (!g) throw std::invalid_argument("unknown generator " + std::string(base));
    for (long i = 0; i < std::labs(power); ++i) raw.push_back(make_letter(*g, power > 0 ? 1 : -1));
  }
  return Word::reduce(raw);
}

// ---------------------------------------------------------------- conjugacy

CyclicSplit cyclic_split(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == -ls[j - 1]) {
    ++i;
    --j;
  }
  std::vector<Letter> u(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Letter> r(ls.begin() + static_cast<std::ptrdiff_t>(i), ls.begin() + static_cast<std::ptrdiff_t>(j));
  return {Word::reduce(u), Word::reduce(r)};
}

CyclicWord::CyclicWord(const Word& w) {
  std::vector<Letter> r = cyclic_split(w).core.letters();
  const std::size_t L = r.size();
  if (L == 0) return;
  std::size_t best = 0;
  for (std::size_t s = 1; s < L; ++s) {
    for (std::size_t k = 0; k < L; ++k) {
      Letter a = r[(s + k) % L], b = r[(best + k) % L];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  letters_.reserve(L);
  for (std::size_t k = 0; k < L; ++k) letters_.push_back(r[(best + k) % L]);
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(as_word().inverse()); }

bool are_conjugate(const Word& u, const Word& v) { return CyclicWord(u) == CyclicWord(v); }

bool is_power_of(const Word& z, const Word& g) {
  if (g.empty()) throw std::invalid_argument("is_power_of: trivial base");
  if (z.empty()) return true;
  auto [u, r] = cyclic_split(g);
  Word y = u.inverse() * z * u;
  if (y.size() % r.size() != 0) return false;
  long m = static_cast<long>(y.size() / r.size());
  return y == r.pow(m) || y == r.pow(-m);
}

// ---------------------------------------------------------------- automorphisms

namespace {

Word apply_images(const std::vector<Word>& images, const Word& w) {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    const std::size_t g = static_cast<std::size_t>(generator_of(l));
    if (g >= images.size()) throw std::invalid_argument("word uses a generator outside the automorphism's alphabet");
    const Word& img = images[g];
    if (l > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) raw.push_back(-*it);
    }
  }
  return Word::reduce(raw);
}

}  // namespace

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images)
    : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  if (rank_ < 1) throw std::invalid_argument("rank must be positive");
  if (images_.size() != static_cast<std::size_t>(rank_) || inverse_images_.size() != images_.size())
    throw std::invalid_argument("image table size does not match rank");
  for (int g = 0; g < rank_; ++g) {
    Word gen = Word::generator(g);
    if (apply_images(inverse_images_, images_[static_cast<std::size_t>(g)]) != gen ||
        apply_images(images_, inverse_images_[static_cast<std::size_t>(g)]) != gen)
      throw std::invalid_argument("inverse table does not invert the automorphism at generator " +
                                  std::to_string(g));
  }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<Word> id;
  for (int g = 0; g < rank; ++g) id.push_back(Word::generator(g));
  return FreeAutomorphism(Unchecked{}, rank, id, id);
}

FreeAutomorphism FreeAutomorphism::conjugation(int rank, const Word& w) {
  if (w.max_generator() >= rank) throw std::invalid_argument("conjugator outside alphabet");
  std::vector<Word> img, inv;
  Word wi = w.inverse();
  for (int g = 0; g < rank; ++g) {
    Word gen = Word::generator(g);
    img.push_back(w * gen * wi);
    inv.push_back(wi * gen * w);
  }
  return FreeAutomorphism(Unchecked{}, rank, std::move(img), std::move(inv));
}

Word FreeAutomorphism::apply(const Word& w) const { return apply_images(images_, w); }

FreeAutomorphism FreeAutomorphism::inverse() const {
  return FreeAutomorphism(Unchecked{}, rank_, inverse_images_, images_);
}

FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
  if (phi.rank_ != psi.rank_) throw std::invalid_argument("compose: alphabet mismatch");
  std::vector<Word> img, inv;
  img.reserve(static_cast<std::size_t>(phi.rank_));
  inv.reserve(static_cast<std::size_t>(phi.rank_));
  for (int g = 0; g < phi.rank_; ++g) {
    img.push_back(phi.apply(psi.image(g)));
    inv.push_back(apply_images(psi.inverse_images_, phi.inverse_image(g)));
  }
  return FreeAutomorphism(FreeAutomorphism::Unchecked{}, phi.rank_, std::move(img), std::move(inv));
}

std::optional<Word> is_inner(const FreeAutomorphism& phi) {
  const Word g0 = Word::generator(0);
  const Word& y = phi.image(0);
  if (phi.rank() == 1) return y == g0 ? std::optional<Word>(Word{}) : std::nullopt;

  // phi(g0) = w0 g0 w0^-1 in reduced form: odd length, g0 in the middle,
  // prefix inverse to suffix. All conjugators are then w0 g0^k.
  if (y.size() % 2 == 0) return std::nullopt;
  const std::size_t m = y.size() / 2;
  if (y[m] != make_letter(0, 1)) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i)
    if (y[i] != -y[y.size() - 1 - i]) return std::nullopt;
  const Word w0 = Word::reduce(std::span<const Letter>(y.letters().data(), m));

  const Word z = w0.inverse() * phi.image(1) * w0;
  const long bound = static_cast<long>(z.size() + phi.image(1).size());
  for (long k = -bound; k <= bound; ++k) {
    Word w = w0 * g0.pow(k);
    Word wi = w.inverse();
    bool ok = true;
    for (int g = 0; g < phi.rank() && ok; ++g) ok = phi.image(g) == w * Word::generator(g) * wi;
    if (ok) return w;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> peripheral_check(const FreeAutomorphism& phi, const PeripheralStructure& p) {
  const std::size_t n = p.classes.size();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    CyclicWord img(phi.apply(p.classes[i].as_word()));
    CyclicWord img_inv = img.inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (p.classes[j] == img || p.classes[j] == img_inv) {
        perm[i] = static_cast<int>(j);
        break;
      }
    }
    if (perm[i] < 0 || used[static_cast<std::size_t>(perm[i])]) return std::nullopt;
    used[static_cast<std::size_t>(perm[i])] = true;
  }
  return perm;
}

}  // namespace tmcg

// ---------------------------------------------------------------- double cosets

namespace tmcg {

namespace {

bool shorter(const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

// Least element of L<r> (r cyclically reduced, nonempty). The length of L r^k
// is a tree distance from a point to points on the axis of r, hence convex
// in k, so walking each direction until the length grows is exhaustive.
Word least_in_right_coset(const Word& L, const Word& r) {
  Word best = L;
  const Word ri = r.inverse();
  const std::size_t cap = L.size() / r.size() + 3;
  for (const Word* step : {&r, &ri}) {
    Word cur = L;
    std::size_t prev = L.size();
    for (std::size_t k = 0; k < cap; ++k) {
      cur *= *step;
      if (cur.size() > prev) break;
      if (shorter(cur, best)) best = cur;
      prev = cur.size();
    }
  }
  return best;
}

}  // namespace

Word double_coset_representative(const Word& left, const Word& w, const Word& right) {
  const auto [u1, r1] = cyclic_split(left);
  const auto [u2, r2] = cyclic_split(right);
  const Word y = u1.inverse() * w * u2;
  auto inner = [&](const Word& L) { return r2.empty() ? L : least_in_right_coset(L, r2); };
  Word best = inner(y);
  if (!r1.empty()) {
    const long window = static_cast<long>((2 * y.size() + 2 * r1.size() + 2 * r2.size()) / r1.size() + 2);
    const Word r1i = r1.inverse();
    Word up = y, down = y;
    for (long j = 1; j <= window; ++j) {
      up = r1 * up;
      down = r1i * down;
      for (const Word* c : {&up, &down}) {
        Word cand = inner(*c);
        if (shorter(cand, best)) best = std::move(cand);
      }
    }
  }
  return u1 * best * u2.inverse();
}

}  // namespace tmcg
