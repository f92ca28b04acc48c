// Dense matrices over exact scalars (machine integers, mpz_class, mpq_class)
// and the elimination routines the lattice code needs.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstddef>
#include <cstdlib>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 6, AddCost = 150, MulCost = 100 };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum { IsInteger = 1, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 6, AddCost = 100, MulCost = 100 };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace tmcg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Reduced row echelon form over a field; returns the pivot columns.
template <class Field>
std::vector<Eigen::Index> rref(Matrix<Field>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    const Field inv = Field(1) / m(row, col);
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = Field(m(row, j) * inv);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Field f = m(r, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = Field(m(r, j) - f * m(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
template <class Field>
std::vector<Vector<Field>> kernel_basis(Matrix<Field> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector<Field>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Field> v(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(j) = Field(0);
    v(free) = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = Field(-m(static_cast<Eigen::Index>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Row-style Hermite normal form over the integers: the nonzero rows of the
/// result generate the same lattice as the rows of m, in echelon form with
/// positive pivots and reduced entries above each pivot.
template <class Integer>
Matrix<Integer> hermite_rows(Matrix<Integer> m) {
  using std::abs;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Euclid on column col among rows >= row until one nonzero entry remains.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index r = row; r < m.rows(); ++r)
        if (m(r, col) != 0 && (best < 0 || abs(m(r, col)) < abs(m(best, col)))) best = r;
      if (best < 0) break;
      m.row(best).swap(m.row(row));
      bool done = true;
      for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
        if (m(r, col) == 0) continue;
        const Integer f = m(r, col) / m(row, col);
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = Integer(m(r, j) - f * m(row, j));
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (row == m.rows() || m(row, col) == 0) continue;
    if (m(row, col) < 0)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = Integer(-m(row, j));
    for (Eigen::Index r = 0; r < row; ++r) {
      Integer f = m(r, col) / m(row, col);
      if (m(r, col) - f * m(row, col) < 0) f -= 1;
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = Integer(m(r, j) - f * m(row, j));
    }
    ++row;
  }
  return m.topRows(row);
}

/// Is v an integer combination of the rows of a Hermite form h?
template <class Integer>
bool in_row_lattice(const Matrix<Integer>& h, Vector<Integer> v) {
  Eigen::Index col = 0;
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    while (h(r, col) == 0) {
      if (v(col) != 0) return false;
      ++col;
    }
    if (v(col) % h(r, col) != 0) return false;
    const Integer f = v(col) / h(r, col);
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = Integer(v(j) - f * h(r, j));
    ++col;
  }
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (v(j) != 0) return false;
  return true;
}

}  // namespace tmcg
