#include "tmcg/dcat.hpp"

#include "tmcg/mcg.hpp"

namespace tmcg {

std::string to_string(const ObjTag& t) {
  switch (t.kind) {
    case ObjTag::Kind::OY:
      return "OY";
    case ObjTag::Kind::Ox:
      return "Ox(" + std::to_string(t.i) + ")";
    case ObjTag::Kind::OG:
      return "OG(" + std::to_string(t.i) + "," + std::to_string(t.a) + ")";
    case ObjTag::Kind::PsiOx:
      return "PsiOx(" + std::to_string(t.i) + ")";
  }
  return {};
}

void check_tag(int n, const ObjTag& t) {
  if (t.kind != ObjTag::Kind::OY && (t.i < 1 || t.i > n))
    throw std::invalid_argument("index " + std::to_string(t.i) + " out of range 1.." + std::to_string(n) + " in " + to_string(t));
}

Curve curve_of(const TorusModel& model, const ObjTag& t) {
  check_tag(model.n(), t);
  switch (t.kind) {
    case ObjTag::Kind::OY:
      return model.A();
    case ObjTag::Kind::Ox:
      return model.B(t.i);
    case ObjTag::Kind::OG:
      return derived_arc(model, t.i, t.a);
    case ObjTag::Kind::PsiOx:
      return act(model, twist_H(model.n(), t.i), model.B(t.i));
  }
  throw std::logic_error("unknown tag");
}

namespace {

using K = ObjTag::Kind;

bool adjacent(int n, int i, int j) {
  const int d = i > j ? i - j : j - i;
  return d == 1 || d == n - 1;
}

// Value for the pair in normalized order, or -1 if absent.
int lookup(int n, const ObjTag& e, const ObjTag& f) {
  if (e.kind == K::PsiOx) {
    const int i = e.i;
    switch (f.kind) {
      case K::Ox:
        return f.i == i ? 2 : 0;
      case K::OY:
        return 1;
      case K::OG:
        if (f.i == i && f.a == -1) return 1;
        if (f.i == i && f.a == 0) return 3;
        if (f.i != i && f.a == -1 && n >= 3) return adjacent(n, i, f.i) ? 1 : 0;
        return -1;
      default:
        return -1;
    }
  }
  if (e.kind == K::OG && e.a == -1) {
    if (f.kind == K::Ox && f.i != e.i) return 0;
    if (f.kind == K::OY) return 0;
  }
  return -1;
}

int find(int n, const ObjTag& e, const ObjTag& f) {
  check_tag(n, e);
  check_tag(n, f);
  const int forward = lookup(n, e, f);
  return forward >= 0 ? forward : lookup(n, f, e);
}

}  // namespace

bool is_tabulated(int n, const ObjTag& e, const ObjTag& f) { return find(n, e, f) >= 0; }

int hom_total(int n, const ObjTag& e, const ObjTag& f) {
  const int v = find(n, e, f);
  if (v < 0) throw NotTabulated("no tabulated Hom total for (" + to_string(e) + ", " + to_string(f) + ")");
  return v;
}

std::vector<std::pair<ObjTag, ObjTag>> tabulated_pairs(int n) {
  std::vector<std::pair<ObjTag, ObjTag>> out;
  for (int i = 1; i <= n; ++i) {
    const ObjTag psi = ObjTag::PsiOx(i);
    out.emplace_back(psi, ObjTag::OY());
    for (int j = 1; j <= n; ++j) out.emplace_back(psi, ObjTag::Ox(j));
    for (int j = 1; j <= n; ++j)
      if (is_tabulated(n, psi, ObjTag::OG(j, -1))) out.emplace_back(psi, ObjTag::OG(j, -1));
    out.emplace_back(psi, ObjTag::OG(i, 0));
  }
  for (int i = 1; i <= n; ++i) {
    out.emplace_back(ObjTag::OG(i, -1), ObjTag::OY());
    for (int j = 1; j <= n; ++j)
      if (j != i) out.emplace_back(ObjTag::OG(i, -1), ObjTag::Ox(j));
  }
  return out;
}

bool check_dictionary(const TorusModel& model, const ObjTag& e, const ObjTag& f, IntersectionOptions opts) {
  const int expected = hom_total(model.n(), e, f);
  return expected == intersection_number(model, curve_of(model, e), curve_of(model, f), opts);
}

std::vector<std::vector<mpq_class>> form_kernel(int n) {
  std::vector<std::vector<mpq_class>> out;
  for (const auto& v : kernel_basis(in_fiber_form<mpq_class>(n))) out.emplace_back(v.data(), v.data() + v.size());
  return out;
}

bool in_restriction_lattice(const MultiDegree& v) {
  const int n = static_cast<int>(v.size());
  const Matrix<mpz_class> h = hermite_rows(in_fiber_form<mpz_class>(n));
  Vector<mpz_class> w(n);
  for (int i = 0; i < n; ++i) w(i) = mpz_class(v[static_cast<std::size_t>(i)]);
  return in_row_lattice(h, w);
}

MultiDegree multidegree(int n, const std::vector<DivisorTerm>& terms) {
  const Matrix<long> form = in_fiber_form<long>(n);
  MultiDegree out(static_cast<std::size_t>(n), 0);
  for (const auto& t : terms) {
    if (t.index < 1 || t.index > n) throw std::invalid_argument("divisor index out of range: " + std::to_string(t.index));
    if (t.kind == DivisorTerm::Kind::Point) {
      out[static_cast<std::size_t>(t.index - 1)] += t.coefficient;
    } else {
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] += t.coefficient * form(t.index - 1, j);
    }
  }
  return out;
}

}  // namespace tmcg
