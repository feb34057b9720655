#pragma once

// Exact arithmetic in the Eisenstein integers Z[w] and the field Q(w),
// w = (-1 + i*sqrt(3))/2.

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace picard {

/// a + b*w with arbitrary-precision coefficients.
struct EisensteinInt {
  mpz_class a;  // coefficient of 1
  mpz_class b;  // coefficient of w

  EisensteinInt() = default;
  EisensteinInt(long re, long om = 0) : a(re), b(om) {}
  EisensteinInt(mpz_class re, mpz_class om) : a(std::move(re)), b(std::move(om)) {}
  explicit EisensteinInt(mpz_class re) : a(std::move(re)), b(0) {}

  static EisensteinInt omega() { return {0, 1}; }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a == y.a && x.b == y.b;
  }
  // Lexicographic on (a, b).
  friend bool operator<(const EisensteinInt& x, const EisensteinInt& y) {
    int c = cmp(x.a, y.a);
    return c != 0 ? c < 0 : cmp(x.b, y.b) < 0;
  }
};

EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y);
EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator*(const mpz_class& s, const EisensteinInt& x);

EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt eis_conj(const EisensteinInt& x);
/// a^2 - ab + b^2, which is x * conj(x).
mpz_class eis_norm(const EisensteinInt& x);

/// Image under the embedding into C. For oracles and diagnostics only.
std::complex<double> to_complex(const EisensteinInt& x);

std::string to_string(const EisensteinInt& x);
std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

/// An element of the unit group {+-1, +-w, +-w^2}.
class Unit {
 public:
  Unit() : value_(1) {}
  /// Throws DomainError unless norm(x) == 1.
  explicit Unit(EisensteinInt x);

  static bool is_unit(const EisensteinInt& x);
  /// The six units in the fixed order 1, -w, w^2, -1, w, -w^2 (powers of -w).
  static const std::array<Unit, 6>& all();

  const EisensteinInt& value() const { return value_; }
  Unit inverse() const { return Unit(eis_conj(value_)); }
  Unit operator*(const Unit& o) const { return Unit(value_ * o.value_); }
  friend bool operator==(const Unit&, const Unit&) = default;

 private:
  EisensteinInt value_;
};

/// rational multiple of sqrt(3); imaginary parts of Q(w) live here.
struct SqrtThreeRational {
  mpq_class coeff;

  SqrtThreeRational& operator+=(const SqrtThreeRational& o) {
    coeff += o.coeff;
    return *this;
  }
  SqrtThreeRational& operator-=(const SqrtThreeRational& o) {
    coeff -= o.coeff;
    return *this;
  }
  friend SqrtThreeRational operator+(SqrtThreeRational x, const SqrtThreeRational& y) { return x += y; }
  friend SqrtThreeRational operator-(SqrtThreeRational x, const SqrtThreeRational& y) { return x -= y; }
  friend SqrtThreeRational operator*(const mpq_class& s, const SqrtThreeRational& x) {
    return {mpq_class(s * x.coeff)};
  }
  friend bool operator==(const SqrtThreeRational& x, const SqrtThreeRational& y) {
    return x.coeff == y.coeff;
  }
  /// square as a rational: 3 * coeff^2.
  mpq_class squared() const { return 3 * coeff * coeff; }
};

/// (a + b*w) / den, kept in lowest terms with den >= 1.
class EisensteinFrac {
 public:
  EisensteinFrac() : den_(1) {}
  EisensteinFrac(EisensteinInt x) : num_(std::move(x)), den_(1) {}
  /// Throws DomainError if den == 0. Negative denominators are normalized.
  EisensteinFrac(EisensteinInt num, mpz_class den);

  /// x / y; throws DomainError when y == 0.
  static EisensteinFrac quotient(const EisensteinInt& x, const EisensteinInt& y);

  const EisensteinInt& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_integral() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }

  EisensteinFrac& operator+=(const EisensteinFrac& o);
  EisensteinFrac& operator-=(const EisensteinFrac& o);
  EisensteinFrac& operator*=(const EisensteinFrac& o);

  friend EisensteinFrac operator+(EisensteinFrac x, const EisensteinFrac& y) { return x += y; }
  friend EisensteinFrac operator-(EisensteinFrac x, const EisensteinFrac& y) { return x -= y; }
  friend EisensteinFrac operator*(EisensteinFrac x, const EisensteinFrac& y) { return x *= y; }
  friend EisensteinFrac operator-(const EisensteinFrac& x) { return EisensteinFrac(-x.num_, x.den_); }

  // Canonical form makes structural equality the field equality.
  friend bool operator==(const EisensteinFrac& x, const EisensteinFrac& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  void canonicalize();

  EisensteinInt num_;
  mpz_class den_;
};

EisensteinFrac eis_conj(const EisensteinFrac& z);
/// |z|^2 as an exact rational.
mpq_class eis_norm(const EisensteinFrac& z);

/// Real part and imaginary part (as a multiple of sqrt(3)) of z.
std::pair<mpq_class, SqrtThreeRational> re_im(const EisensteinFrac& z);

/// Nearest point of Z[w] to z. Among equidistant lattice points the
/// lexicographically smallest (a, b) wins. The squared distance is at most 1/3.
EisensteinInt round_nearest(const EisensteinFrac& z);

std::string to_string(const EisensteinFrac& z);
std::ostream& operator<<(std::ostream& os, const EisensteinFrac& z);

}  // namespace picard
