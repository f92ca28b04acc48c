// Exact computation in a free group F_r and its automorphism group.
//
// Letters are encoded as signed integers: generator g (0-based) is +(g+1),
// its inverse is -(g+1). A Word is always freely reduced.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmcg {

using Letter = int;

constexpr Letter make_letter(int generator, int sign) { return sign > 0 ? generator + 1 : -(generator + 1); }
constexpr int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }
constexpr int sign_of(Letter l) { return l > 0 ? 1 : -1; }

class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word generator(int g, long power = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  Word pow(long k) const;
  /// Largest generator index used, or -1 for the empty word.
  int max_generator() const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

/// Generator names for printing and parsing.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);
  /// "A", "B1", ..., "Bn": the generators of the fundamental group of the n-punctured torus.
  static Alphabet torus(int n);
  /// "a", "b", "c", ... for generic tests.
  static Alphabet letters(int rank);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int g) const { return names_.at(static_cast<std::size_t>(g)); }
  std::optional<int> index(std::string_view name) const;

  /// Space separated, powers written as x^k; the identity prints as "1".
  std::string format(const Word& w) const;
  /// Accepts "a b^-1 a^2", "1" or "" for the identity.
  Word parse(std::string_view text) const;

 private:
  std::vector<std::string> names_;
};

/// A word considered up to cyclic permutation, stored cyclically reduced in
/// its lexicographically least rotation. Two elements are conjugate iff
/// their CyclicWords are equal.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  CyclicWord inverse() const;
  Word as_word() const { return Word::reduce(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Splits w = u r u^-1 with r cyclically reduced.
struct CyclicSplit {
  Word conjugator;
  Word core;
};
CyclicSplit cyclic_split(const Word& w);

bool are_conjugate(const Word& u, const Word& v);
/// True iff z = g^m for some integer m (g nontrivial).
bool is_power_of(const Word& z, const Word& g);

/// Canonical element of the double coset <left> w <right>: equal outputs iff
/// equal double cosets (for fixed left, right). An empty left or right stands
/// for the trivial subgroup. Assumes the two cyclic subgroups are not
/// commensurable through w, which holds for distinct curve classes.
Word double_coset_representative(const Word& left, const Word& w, const Word& right);

class FreeAutomorphism {
 public:
  /// Throws std::invalid_argument unless inverse_images really inverts images.
  FreeAutomorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images);

  static FreeAutomorphism identity(int rank);
  /// x -> w x w^-1.
  static FreeAutomorphism conjugation(int rank, const Word& w);

  int rank() const { return rank_; }
  const Word& image(int g) const { return images_.at(static_cast<std::size_t>(g)); }
  const Word& inverse_image(int g) const { return inverse_images_.at(static_cast<std::size_t>(g)); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;
  FreeAutomorphism inverse() const;

  friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  struct Unchecked {};
  FreeAutomorphism(Unchecked, int rank, std::vector<Word> images, std::vector<Word> inverse_images)
      : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {}
  friend FreeAutomorphism compose(const FreeAutomorphism&, const FreeAutomorphism&);

  int rank_ = 0;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

/// (phi o psi)(g) = phi(psi(g)).
FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi);

/// Returns w with phi(g) = w g w^-1 for every generator g, if one exists.
std::optional<Word> is_inner(const FreeAutomorphism& phi);

/// Conjugacy classes of the puncture loops c_1, ..., c_n.
struct PeripheralStructure {
  std::vector<CyclicWord> classes;
};

/// perm[i] = j iff phi(c_i) is conjugate to c_j or c_j^-1 (0-based), for a
/// permutation of the punctures; nullopt if phi does not permute the classes.
std::optional<std::vector<int>> peripheral_check(const FreeAutomorphism& phi, const PeripheralStructure& p);

}  // namespace tmcg
