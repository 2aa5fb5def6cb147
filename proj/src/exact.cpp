#include "mink/exact.hpp"

#include <algorithm>
#include <sstream>

namespace mink {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(mpz_class(s));
  }
  mpz_class num(s.substr(0, slash));
  mpz_class den(s.substr(slash + 1));
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot: vectors of length " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector vadd(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vadd: length mismatch");
  RatVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector vsub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vsub: length mismatch");
  RatVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector vscale(const RatVector& a, const Rational& s) {
  RatVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RatVector vneg(const RatVector& a) {
  RatVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool vzero(const RatVector& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

RatVector cross3(const RatVector& a, const RatVector& b) {
  if (a.size() != 3 || b.size() != 3) throw DimensionMismatch("cross3: need 3-vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

int lex_cmp(const RatVector& a, const RatVector& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

RatVector primitive(const RatVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  mpz_class g = 0;
  std::vector<mpz_class> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (l / v[i].den());
    g = gcd(g, ints[i]);
  }
  if (g == 0) return RatVector(v.size(), Rational(0));
  RatVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(mpz_class(ints[i] / g));
  return r;
}

RatVector sign_canonical(const RatVector& v) {
  RatVector p = primitive(v);
  for (const auto& x : p) {
    if (x.sign() > 0) return p;
    if (x.sign() < 0) return vneg(p);
  }
  return p;
}

std::string vec_str(const RatVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

RatMatrix identity_matrix(int d) {
  RatMatrix m(d, RatVector(d, Rational(0)));
  for (int i = 0; i < d; ++i) m[i][i] = Rational(1);
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMatrix r(n, RatVector(m, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw DimensionMismatch("mat_mul: shape mismatch");
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t c = 0; c < m; ++c) r[i][c] += a[i][j] * b[j][c];
    }
  }
  return r;
}

RatMatrix mat_transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix r(a[0].size(), RatVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

RatVector mat_apply(const RatMatrix& a, const RatVector& x) {
  RatVector r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

std::optional<RatMatrix> mat_inverse(const RatMatrix& a) {
  int n = static_cast<int>(a.size());
  RatMatrix m = a;
  RatMatrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (int c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

int rank(const RatMatrix& m) {
  if (m.empty()) throw Error("rank of empty matrix");
  size_t rows = m.size(), cols = m[0].size();
  // Clear denominators row by row; rank is scale-invariant per row.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw DimensionMismatch("rank: ragged matrix");
    mpz_class l = 1;
    for (size_t j = 0; j < cols; ++j) l = lcm(l, m[i][j].den());
    for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].num() * (l / m[i][j].den());
  }
  // Bareiss fraction-free elimination with column pivoting.
  mpz_class prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[i][j] * a[r][c] - a[r][j] * a[i][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int affine_dim_of(const std::vector<RatVector>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  RatMatrix dirs;
  dirs.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(vsub(pts[i], pts[0]));
  return rank(dirs);
}

int affine_dim_of(const std::vector<RatVector>& pts, const std::vector<int>& subset) {
  std::vector<RatVector> sel;
  sel.reserve(subset.size());
  for (int i : subset) sel.push_back(pts[i]);
  return affine_dim_of(sel);
}

std::optional<Hyperplane> solve_hyperplane(const std::vector<RatVector>& points) {
  if (points.empty()) throw Error("solve_hyperplane: no points");
  int d = static_cast<int>(points[0].size());
  if (static_cast<int>(points.size()) < d)
    throw Error("solve_hyperplane: need at least d points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d)
      throw DimensionMismatch("solve_hyperplane: mixed dimensions");

  // Reduce the direction matrix to row echelon form; the affine span must be
  // a hyperplane.
  RatMatrix rows;
  rows.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) rows.push_back(vsub(points[i], points[0]));
  RatMatrix basis;
  std::vector<int> pivot_col;
  for (auto& row : rows) {
    RatVector v = row;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (v[pivot_col[k]].is_zero()) continue;
      Rational f = v[pivot_col[k]] / basis[k][pivot_col[k]];
      for (int j = 0; j < d; ++j) v[j] -= f * basis[k][j];
    }
    int pc = -1;
    for (int j = 0; j < d; ++j)
      if (!v[j].is_zero()) { pc = j; break; }
    if (pc < 0) continue;
    basis.push_back(v);
    pivot_col.push_back(pc);
    if (static_cast<int>(basis.size()) == d) return std::nullopt;  // spans everything
  }
  if (static_cast<int>(basis.size()) != d - 1) return std::nullopt;  // too flat

  // Kernel of the (d-1) x d echelon system: set the free coordinate to 1 and
  // back-substitute.
  std::vector<bool> is_pivot(d, false);
  for (int pc : pivot_col) is_pivot[pc] = true;
  int free_col = -1;
  for (int j = 0; j < d; ++j)
    if (!is_pivot[j]) { free_col = j; break; }
  RatVector n(d, Rational(0));
  n[free_col] = Rational(1);
  for (int k = static_cast<int>(basis.size()) - 1; k >= 0; --k) {
    Rational s;
    for (int j = pivot_col[k] + 1; j < d; ++j) s += basis[k][j] * n[j];
    n[pivot_col[k]] = -s / basis[k][pivot_col[k]];
  }
  Hyperplane h;
  h.normal = sign_canonical(n);
  h.offset = dot(h.normal, points[0]);
  return h;
}

}  // namespace mink
