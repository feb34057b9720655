#pragma once

// The group U(3,1;Z[w]) of 4x4 Eisenstein matrices G with G* J G = J, where
// J is the anti-diagonal-corner form
//
//     [0 0 0 1]
//     [0 1 0 0]
//     [0 0 1 0]
//     [1 0 0 0]
//
// Indices are 0-based throughout the code, so the lower-left entry g41 is
// at(3, 0).

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>

#include "picard/eisenstein.hpp"
#include "picard/finite_unitary.hpp"

namespace picard {

using Matrix4 = std::array<std::array<EisensteinInt, 4>, 4>;
using Vec2 = std::array<EisensteinInt, 2>;

Matrix4 identity4();
Matrix4 form_j();
Matrix4 mul(const Matrix4& x, const Matrix4& y);
Matrix4 conj_transpose(const Matrix4& x);

/// First (row, col) where M* J M differs from J, or nullopt for members.
std::optional<std::pair<int, int>> first_form_violation(const Matrix4& m);
bool check_membership(const Matrix4& m);

class GroupMatrix {
 public:
  GroupMatrix();  // identity
  /// Throws NotMember naming the first failing entry of M* J M.
  explicit GroupMatrix(Matrix4 m);

  const Matrix4& matrix() const { return m_; }
  const EisensteinInt& at(int r, int c) const { return m_[r][c]; }
  const EisensteinInt& g41() const { return m_[3][0]; }

  GroupMatrix operator*(const GroupMatrix& o) const;
  GroupMatrix& operator*=(const GroupMatrix& o);

  friend bool operator==(const GroupMatrix& x, const GroupMatrix& y) { return x.m_ == y.m_; }

 private:
  struct Trusted {};
  GroupMatrix(Matrix4 m, Trusted) : m_(std::move(m)) {}

  friend GroupMatrix inverse(const GroupMatrix& g);
  friend GroupMatrix translation_matrix(const Vec2& tau, const mpz_class& k);
  friend GroupMatrix rotation_matrix(const FiniteUnitary& u);
  friend GroupMatrix inversion();
  friend GroupMatrix unit_correction(const Unit& lambda);

  Matrix4 m_;
};

std::ostream& operator<<(std::ostream& os, const GroupMatrix& g);

/// J G* J.
GroupMatrix inverse(const GroupMatrix& g);

/// G fixes the boundary point at infinity iff g41 == 0.
bool fixes_infinity(const GroupMatrix& g);

/// Affine coordinates (g11/g41, g21/g41, g31/g41) of G(infinity).
struct BoundaryPoint {
  std::array<EisensteinFrac, 3> coords;

  /// 2 Re(c1) == -|c2|^2 - |c3|^2.
  bool on_cone() const;
};

/// Throws DomainError when g41 == 0.
BoundaryPoint image_of_infinity(const GroupMatrix& g);

/// A Heisenberg translation with vertical coordinate t = k*sqrt(3).
struct Translation {
  Vec2 tau;
  mpz_class k;

  friend bool operator==(const Translation& x, const Translation& y) {
    return x.tau == y.tau && x.k == y.k;
  }
};

/// |tau1|^2 + |tau2|^2
mpz_class norm_squared(const Vec2& tau);
bool parity_ok(const Vec2& tau, const mpz_class& k);

/// N_(tau, k sqrt 3). Throws ParityError if k and |tau|^2 differ mod 2.
GroupMatrix translation_matrix(const Vec2& tau, const mpz_class& k);
GroupMatrix translation_matrix(const Translation& t);

/// Heisenberg group law: (tau_p + tau_q, k_p + k_q + (2/sqrt 3) Im <<tau_p, tau_q>>).
Translation compose_heisenberg(const Translation& p, const Translation& q);
Translation inverse(const Translation& p);

/// diag(1, U, 1).
GroupMatrix rotation_matrix(const FiniteUnitary& u);
/// The involution R swapping 0 and infinity.
GroupMatrix inversion();
/// C_lambda = diag(lambda, 1, 1, lambda).
GroupMatrix unit_correction(const Unit& lambda);

/// Langlands data of a stabilizer element: P = C_lambda N_(tau, k) M_U.
struct HeisenbergParam {
  Unit lambda;
  Vec2 tau;
  mpz_class k;
  FiniteUnitary u;

  GroupMatrix reconstruct() const;
};

/// Throws ShapeError if P does not have the stabilizer block structure.
HeisenbergParam langlands_extract(const GroupMatrix& p);

}  // namespace picard
