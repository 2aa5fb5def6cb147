#ifndef MINK_EXACT_HPP
#define MINK_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mink/errors.hpp"

namespace mink {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over GMP's mpq_class that canonicalizes on
// construction so equality is plain value equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(long long num, long long den);
  Rational(const mpz_class& num, const mpz_class& den);

  // Parses "p/q" or "p".
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  std::string str() const;
  double approx() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { Rational r; r.v_ = ::abs(a.v_); return r; }

 private:
  mpq_class v_;
};

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

// --- vector kit ---

Rational dot(const RatVector& a, const RatVector& b);
RatVector vadd(const RatVector& a, const RatVector& b);
RatVector vsub(const RatVector& a, const RatVector& b);
RatVector vscale(const RatVector& a, const Rational& s);
RatVector vneg(const RatVector& a);
bool vzero(const RatVector& a);
RatVector cross3(const RatVector& a, const RatVector& b);

// Lexicographic order on coordinates; total order used for canonical vertex
// ordering and map keys.
int lex_cmp(const RatVector& a, const RatVector& b);
struct LexLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    return lex_cmp(a, b) < 0;
  }
};

// Scales to coprime integer entries, preserving direction.
RatVector primitive(const RatVector& v);
// primitive() with the first nonzero entry made positive.
RatVector sign_canonical(const RatVector& v);

std::string vec_str(const RatVector& v);

// --- matrix kit ---

RatMatrix identity_matrix(int d);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_transpose(const RatMatrix& a);
RatVector mat_apply(const RatMatrix& a, const RatVector& x);
std::optional<RatMatrix> mat_inverse(const RatMatrix& a);

// Exact rank via fraction-free (Bareiss) elimination on the
// denominator-cleared matrix.
int rank(const RatMatrix& m);

// Affine dimension of a point set (-1 for empty, 0 for a single point, ...).
int affine_dim_of(const std::vector<RatVector>& pts);
int affine_dim_of(const std::vector<RatVector>& pts, const std::vector<int>& subset);

struct Hyperplane {
  RatVector normal;  // sign-canonical primitive integer entries
  Rational offset;   // <normal, x> = offset
};

// Hyperplane through >= d points in dimension d, in canonical form; nullopt
// when the points span an affine space of dimension != d-1.
std::optional<Hyperplane> solve_hyperplane(const std::vector<RatVector>& points);

}  // namespace mink

#endif
