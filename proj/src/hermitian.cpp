#include "picard/hermitian.hpp"

#include <ostream>
#include <string>

#include "picard/errors.hpp"

namespace picard {

namespace {

// J is the permutation 0 <-> 3 on indices.
constexpr int swap_corner(int i) { return i == 0 ? 3 : (i == 3 ? 0 : i); }

}  // namespace

Matrix4 identity4() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

Matrix4 form_j() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m[i][swap_corner(i)] = 1;
  return m;
}

Matrix4 mul(const Matrix4& x, const Matrix4& y) {
  Matrix4 r;
  EisensteinInt t;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      auto& acc = r[i][j];
      for (int p = 0; p < 4; ++p) {
        if (x[i][p].is_zero() || y[p][j].is_zero()) continue;
        t = x[i][p];
        t *= y[p][j];
        acc += t;
      }
    }
  }
  return r;
}

Matrix4 conj_transpose(const Matrix4& x) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = eis_conj(x[j][i]);
  return r;
}

// (M* J M)_jk = sum_p conj(m_pj) m_{J(p),k}
std::optional<std::pair<int, int>> first_form_violation(const Matrix4& m) {
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      EisensteinInt acc;
      for (int p = 0; p < 4; ++p) acc += eis_conj(m[p][j]) * m[swap_corner(p)][k];
      const EisensteinInt expected(k == swap_corner(j) ? 1 : 0);
      if (!(acc == expected)) return std::make_pair(j, k);
    }
  }
  return std::nullopt;
}

bool check_membership(const Matrix4& m) { return !first_form_violation(m).has_value(); }

GroupMatrix::GroupMatrix() : m_(identity4()) {}

GroupMatrix::GroupMatrix(Matrix4 m) : m_(std::move(m)) {
  if (auto bad = first_form_violation(m_)) {
    throw NotMember("matrix does not preserve the Hermitian form: entry (" + std::to_string(bad->first + 1) +
                    "," + std::to_string(bad->second + 1) + ") of G*JG differs from J");
  }
}

GroupMatrix GroupMatrix::operator*(const GroupMatrix& o) const { return GroupMatrix(mul(m_, o.m_), Trusted{}); }

GroupMatrix& GroupMatrix::operator*=(const GroupMatrix& o) {
  m_ = mul(m_, o.m_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GroupMatrix& g) {
  for (int i = 0; i < 4; ++i) {
    os << "[";
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << g.at(i, j);
    os << "]\n";
  }
  return os;
}

GroupMatrix inverse(const GroupMatrix& g) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = eis_conj(g.m_[swap_corner(j)][swap_corner(i)]);
  return GroupMatrix(std::move(r), GroupMatrix::Trusted{});
}

bool fixes_infinity(const GroupMatrix& g) { return g.g41().is_zero(); }

bool BoundaryPoint::on_cone() const {
  auto [re, im] = re_im(coords[0]);
  return 2 * re == -(eis_norm(coords[1]) + eis_norm(coords[2]));
}

BoundaryPoint image_of_infinity(const GroupMatrix& g) {
  if (fixes_infinity(g)) throw DomainError("G fixes infinity (g41 = 0); G(infinity) has no affine coordinates");
  const auto& d = g.g41();
  return BoundaryPoint{{EisensteinFrac::quotient(g.at(0, 0), d), EisensteinFrac::quotient(g.at(1, 0), d),
                        EisensteinFrac::quotient(g.at(2, 0), d)}};
}

mpz_class norm_squared(const Vec2& tau) { return eis_norm(tau[0]) + eis_norm(tau[1]); }

bool parity_ok(const Vec2& tau, const mpz_class& k) {
  mpz_class diff = k - norm_squared(tau);
  return mpz_even_p(diff.get_mpz_t());
}

// Top-right entry (-|tau|^2 + i k sqrt3)/2 equals ((k - m)/2) + k w because
// i sqrt3 = 1 + 2w.
GroupMatrix translation_matrix(const Vec2& tau, const mpz_class& k) {
  mpz_class m = norm_squared(tau);
  mpz_class diff = k - m;
  if (!mpz_even_p(diff.get_mpz_t())) {
    throw ParityError("Heisenberg translation needs k = |tau|^2 (mod 2); got k=" + k.get_str() +
                      ", |tau|^2=" + m.get_str());
  }
  Matrix4 r = identity4();
  r[0][1] = -eis_conj(tau[0]);
  r[0][2] = -eis_conj(tau[1]);
  r[0][3] = EisensteinInt(mpz_class(diff / 2), k);
  r[1][3] = tau[0];
  r[2][3] = tau[1];
  return GroupMatrix(std::move(r), GroupMatrix::Trusted{});
}

GroupMatrix translation_matrix(const Translation& t) { return translation_matrix(t.tau, t.k); }

// 2 Im(x)/sqrt3 is the w-coefficient of x.
Translation compose_heisenberg(const Translation& p, const Translation& q) {
  if (!parity_ok(p.tau, p.k) || !parity_ok(q.tau, q.k))
    throw InternalError("compose_heisenberg called with a parity-violating translation");
  EisensteinInt pairing = eis_conj(q.tau[0]) * p.tau[0] + eis_conj(q.tau[1]) * p.tau[1];
  Translation r{{p.tau[0] + q.tau[0], p.tau[1] + q.tau[1]}, p.k + q.k + pairing.b};
  if (!parity_ok(r.tau, r.k)) throw InternalError("Heisenberg composition broke the parity condition");
  return r;
}

Translation inverse(const Translation& p) { return {{-p.tau[0], -p.tau[1]}, -p.k}; }

GroupMatrix rotation_matrix(const FiniteUnitary& u) {
  Matrix4 r = identity4();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i + 1][j + 1] = u(i, j);
  return GroupMatrix(std::move(r), GroupMatrix::Trusted{});
}

GroupMatrix inversion() {
  Matrix4 r;
  r[0][3] = 1;
  r[3][0] = 1;
  r[1][1] = -1;
  r[2][2] = -1;
  return GroupMatrix(std::move(r), GroupMatrix::Trusted{});
}

GroupMatrix unit_correction(const Unit& lambda) {
  Matrix4 r = identity4();
  r[0][0] = lambda.value();
  r[3][3] = lambda.value();
  return GroupMatrix(std::move(r), GroupMatrix::Trusted{});
}

GroupMatrix HeisenbergParam::reconstruct() const {
  return unit_correction(lambda) * translation_matrix(tau, k) * rotation_matrix(u);
}

HeisenbergParam langlands_extract(const GroupMatrix& p) {
  if (!fixes_infinity(p)) throw ShapeError("langlands_extract: g41 != 0, element does not fix infinity");
  if (!p.at(1, 0).is_zero() || !p.at(2, 0).is_zero())
    throw ShapeError("langlands_extract: first column is not a multiple of e1");
  if (!Unit::is_unit(p.at(0, 0))) throw ShapeError("langlands_extract: g11 = " + to_string(p.at(0, 0)) + " is not a unit");

  HeisenbergParam out;
  out.lambda = Unit(p.at(0, 0));

  // Q = C_lambda^{-1} P scales rows 1 and 4 by conj(lambda).
  Matrix4 q = p.matrix();
  const EisensteinInt lbar = eis_conj(out.lambda.value());
  for (int j = 0; j < 4; ++j) {
    q[0][j] *= lbar;
    q[3][j] *= lbar;
  }
  if (!(q[3][0].is_zero() && q[3][1].is_zero() && q[3][2].is_zero() && q[3][3] == EisensteinInt(1)))
    throw ShapeError("langlands_extract: last row of C^-1 P is not (0,0,0,1)");

  Matrix2 block{{{q[1][1], q[1][2]}, {q[2][1], q[2][2]}}};
  if (!u_membership(block)) throw ShapeError("langlands_extract: rotation block is not in U(2;Z[w])");
  out.u = FiniteUnitary(block);
  out.tau = {q[1][3], q[2][3]};

  const EisensteinInt& corner = q[0][3];
  out.k = corner.b;
  if (2 * corner.a != out.k - norm_squared(out.tau))
    throw ShapeError("langlands_extract: (1,4) entry inconsistent with tau");
  if (!parity_ok(out.tau, out.k)) throw ShapeError("langlands_extract: parity condition fails");

  // first row must be -tau* U
  for (int j = 0; j < 2; ++j) {
    EisensteinInt expected = -(eis_conj(out.tau[0]) * block[0][j] + eis_conj(out.tau[1]) * block[1][j]);
    if (!(q[0][j + 1] == expected)) throw ShapeError("langlands_extract: first row is not -tau* U");
  }
  return out;
}

}  // namespace picard
