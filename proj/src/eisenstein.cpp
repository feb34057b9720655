#include "picard/eisenstein.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "picard/errors.hpp"

namespace picard {

// w^2 = -1 - w, so (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w.
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  mpz_class bd = b * o.b;
  mpz_class re = a * o.a - bd;
  mpz_class om = a * o.b + b * o.a - bd;
  a = std::move(re);
  b = std::move(om);
  return *this;
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a += o.a;
  b += o.b;
  return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
EisensteinInt operator-(const EisensteinInt& x) { return {mpz_class(-x.a), mpz_class(-x.b)}; }

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  EisensteinInt r = x;
  return r *= y;
}

EisensteinInt operator*(const mpz_class& s, const EisensteinInt& x) {
  return {mpz_class(s * x.a), mpz_class(s * x.b)};
}

EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y) { return x * y; }

// conj(w) = w^2 = -1 - w.
EisensteinInt eis_conj(const EisensteinInt& x) { return {mpz_class(x.a - x.b), mpz_class(-x.b)}; }

mpz_class eis_norm(const EisensteinInt& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

std::complex<double> to_complex(const EisensteinInt& x) {
  const double a = x.a.get_d();
  const double b = x.b.get_d();
  return {a - b / 2.0, b * std::sqrt(3.0) / 2.0};
}

std::string to_string(const EisensteinInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
  if (sgn(x.b) == 0) return os << x.a;
  if (sgn(x.a) != 0) os << x.a << (sgn(x.b) > 0 ? "+" : "-");
  else if (sgn(x.b) < 0) os << "-";
  mpz_class mag = abs(x.b);
  if (mag != 1) os << mag;
  return os << "w";
}

// ---------------------------------------------------------------------------

Unit::Unit(EisensteinInt x) : value_(std::move(x)) {
  if (!is_unit(value_)) throw DomainError("not a unit of Z[w]: " + to_string(value_));
}

bool Unit::is_unit(const EisensteinInt& x) { return eis_norm(x) == 1; }

const std::array<Unit, 6>& Unit::all() {
  static const std::array<Unit, 6> units = [] {
    std::array<Unit, 6> u;
    const EisensteinInt minus_w{0, -1};
    EisensteinInt p{1, 0};
    for (auto& slot : u) {
      slot = Unit(p);
      p *= minus_w;
    }
    return u;
  }();
  return units;
}

// ---------------------------------------------------------------------------

EisensteinFrac::EisensteinFrac(EisensteinInt num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw DomainError("EisensteinFrac with zero denominator");
  canonicalize();
}

EisensteinFrac EisensteinFrac::quotient(const EisensteinInt& x, const EisensteinInt& y) {
  if (y.is_zero()) throw DomainError("division by zero in Q(w)");
  return EisensteinFrac(x * eis_conj(y), eis_norm(y));
}

void EisensteinFrac::canonicalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  mpz_class g = gcd(gcd(num_.a, num_.b), den_);
  if (g != 1) {
    num_.a /= g;
    num_.b /= g;
    den_ /= g;
  }
}

EisensteinFrac& EisensteinFrac::operator+=(const EisensteinFrac& o) {
  num_ = o.den_ * num_ + den_ * o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

EisensteinFrac& EisensteinFrac::operator-=(const EisensteinFrac& o) {
  num_ = o.den_ * num_ - den_ * o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

EisensteinFrac& EisensteinFrac::operator*=(const EisensteinFrac& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

EisensteinFrac eis_conj(const EisensteinFrac& z) { return EisensteinFrac(eis_conj(z.num()), z.den()); }

mpq_class eis_norm(const EisensteinFrac& z) {
  mpq_class r(eis_norm(z.num()), z.den() * z.den());
  r.canonicalize();
  return r;
}

// (a + bw)/d = (a - b/2)/d + i (b/(2d)) sqrt(3).
std::pair<mpq_class, SqrtThreeRational> re_im(const EisensteinFrac& z) {
  const auto& n = z.num();
  mpq_class re(2 * n.a - n.b, 2 * z.den());
  mpq_class im(n.b, 2 * z.den());
  re.canonicalize();
  im.canonicalize();
  return {re, SqrtThreeRational{im}};
}

// The triangles 0, 1, 1+w and 0, 1+w, w tile the fundamental parallelogram
// and are equilateral, so every nearest lattice point of z is a corner of
// the parallelogram containing z.
EisensteinInt round_nearest(const EisensteinFrac& z) {
  const auto& n = z.num();
  const auto& d = z.den();
  mpz_class base_a, base_b;
  mpz_fdiv_q(base_a.get_mpz_t(), n.a.get_mpz_t(), d.get_mpz_t());
  mpz_fdiv_q(base_b.get_mpz_t(), n.b.get_mpz_t(), d.get_mpz_t());

  EisensteinInt best;
  mpz_class best_dist = -1;
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 1; ++j) {
      EisensteinInt cand{mpz_class(base_a + i), mpz_class(base_b + j)};
      // |z - u|^2 * d^2
      mpz_class dist = eis_norm(n - d * cand);
      if (best_dist < 0 || dist < best_dist || (dist == best_dist && cand < best)) {
        best = std::move(cand);
        best_dist = std::move(dist);
      }
    }
  }
  return best;
}

std::string to_string(const EisensteinFrac& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinFrac& z) {
  if (z.is_integral()) return os << z.num();
  return os << "(" << z.num() << ")/" << z.den();
}

}  // namespace picard
