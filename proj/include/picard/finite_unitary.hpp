#pragma once

// The finite unitary group U(2;Z[w]) of order 72 and its word problem over
// the generators U1 = [[0,1],[1,0]] and U2 = [[-w,0],[0,1]].

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "picard/eisenstein.hpp"

namespace picard {

using Matrix2 = std::array<std::array<EisensteinInt, 2>, 2>;

Matrix2 mul(const Matrix2& x, const Matrix2& y);
Matrix2 conj_transpose(const Matrix2& x);

bool u_membership(const Matrix2& m);

/// An element of U(2;Z[w]): diag(a, b) or antidiag with unit entries.
class FiniteUnitary {
 public:
  FiniteUnitary();  // identity
  /// Throws NotMember unless u_membership(m).
  explicit FiniteUnitary(Matrix2 m);

  static FiniteUnitary u1();
  static FiniteUnitary u2();

  const Matrix2& matrix() const { return m_; }
  const EisensteinInt& operator()(int r, int c) const { return m_[r][c]; }

  FiniteUnitary operator*(const FiniteUnitary& o) const;
  FiniteUnitary inverse() const;  // conjugate transpose

  friend bool operator==(const FiniteUnitary& x, const FiniteUnitary& y) { return x.m_ == y.m_; }
  friend bool operator<(const FiniteUnitary& x, const FiniteUnitary& y) { return x.m_ < y.m_; }

 private:
  struct Trusted {};
  FiniteUnitary(Matrix2 m, Trusted) : m_(std::move(m)) {}

  Matrix2 m_;
};

std::ostream& operator<<(std::ostream& os, const FiniteUnitary& u);

enum class UGen { U1, U2 };

struct ULetter {
  UGen gen;
  int exp;  // U1: 1; U2: one of -2..3, nonzero
  friend bool operator==(const ULetter&, const ULetter&) = default;
};

using UWord = std::vector<ULetter>;

FiniteUnitary evaluate(const UWord& w);

/// All 72 elements, in a fixed order (shape, then units of each entry).
std::vector<FiniteUnitary> enumerate_group();

/// Breadth-first closure of {U1, U2} under right multiplication.
std::vector<FiniteUnitary> generated_closure();

/// Shortest word for u over {U1, U2, U2^-1}, read from a precomputed
/// Cayley-graph BFS table. Throws NotMember for non-members.
UWord u_decompose(const Matrix2& u);
UWord u_decompose(const FiniteUnitary& u);

/// The whole table (element, word) in BFS discovery order.
const std::vector<std::pair<FiniteUnitary, UWord>>& u_word_table();

class GroupMatrix;

/// The Heisenberg rotation M_U = diag(1, U, 1).
GroupMatrix lift(const FiniteUnitary& u);
/// As above; throws NotMember when m is not in U(2;Z[w]).
GroupMatrix lift(const Matrix2& m);

}  // namespace picard
