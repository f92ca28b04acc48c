// Sheaf-side bookkeeping for a cycle of n rational curves (an I_n fiber):
// object tags and their curves on the punctured torus, the tabulated Hom
// totals, multidegrees and the fiber intersection-form lattice.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tmcg/exact_linalg.hpp"
#include "tmcg/surface.hpp"

namespace tmcg {

struct ObjTag {
  enum class Kind { OY, Ox, OG, PsiOx };
  Kind kind = Kind::OY;
  int i = 0;  ///< component / point index, 1-based
  int a = 0;  ///< twist degree for OG

  static ObjTag OY() { return {Kind::OY, 0, 0}; }
  static ObjTag Ox(int i) { return {Kind::Ox, i, 0}; }
  static ObjTag OG(int i, int a) { return {Kind::OG, i, a}; }
  static ObjTag PsiOx(int i) { return {Kind::PsiOx, i, 0}; }
  friend bool operator==(const ObjTag&, const ObjTag&) = default;
};

std::string to_string(const ObjTag& t);

/// Raised by hom_total for pairs without a tabulated value.
class NotTabulated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument for indices outside 1..n.
void check_tag(int n, const ObjTag& t);

/// OY -> A, Ox(i) -> B_i, OG(i, a) -> ARC_i(a), PsiOx(i) -> image of B_i under the half twist H_i.
Curve curve_of(const TorusModel& model, const ObjTag& t);

/// Total Hom dimension for the tabulated pairs (either order); NotTabulated otherwise.
int hom_total(int n, const ObjTag& e, const ObjTag& f);
bool is_tabulated(int n, const ObjTag& e, const ObjTag& f);
/// Every tabulated unordered pair for this n, with PsiOx in front when present.
std::vector<std::pair<ObjTag, ObjTag>> tabulated_pairs(int n);

/// hom_total(e, f) == intersection number of their curves.
bool check_dictionary(const TorusModel& model, const ObjTag& e, const ObjTag& f, IntersectionOptions opts = {});

/// Component intersection matrix: -2 on the diagonal, 1 between cyclic
/// neighbours; for two components the two nodes give 2.
template <class Scalar>
Matrix<Scalar> in_fiber_form(int n) {
  if (n < 2) throw std::invalid_argument("a cycle needs at least 2 components");
  Matrix<Scalar> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int d = i > j ? i - j : j - i;
      m(i, j) = Scalar(i == j ? -2 : (n == 2 ? 2 : ((d == 1 || d == n - 1) ? 1 : 0)));
    }
  return m;
}

using MultiDegree = std::vector<long>;

/// Basis of the rational kernel of the form.
std::vector<std::vector<mpq_class>> form_kernel(int n);

/// Is v in the integer row lattice of the form (n = v.size())?
bool in_restriction_lattice(const MultiDegree& v);

struct DivisorTerm {
  enum class Kind { Point, Component };
  Kind kind = Kind::Point;
  int index = 1;
  long coefficient = 1;
};

/// Degree on each component of O_Y(sum of terms): a point x_i counts e_i,
/// a component G_i counts the i-th row of the form.
MultiDegree multidegree(int n, const std::vector<DivisorTerm>& terms);

}  // namespace tmcg
