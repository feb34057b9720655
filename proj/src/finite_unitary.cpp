#include "picard/finite_unitary.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "picard/errors.hpp"
#include "picard/hermitian.hpp"

namespace picard {

Matrix2 mul(const Matrix2& x, const Matrix2& y) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

Matrix2 conj_transpose(const Matrix2& x) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = eis_conj(x[j][i]);
  return r;
}

bool u_membership(const Matrix2& m) {
  const Matrix2 p = mul(conj_transpose(m), m);
  return p[0][0] == EisensteinInt(1) && p[1][1] == EisensteinInt(1) && p[0][1].is_zero() && p[1][0].is_zero();
}

FiniteUnitary::FiniteUnitary() : m_{{{1, 0}, {0, 1}}} {}

FiniteUnitary::FiniteUnitary(Matrix2 m) : m_(std::move(m)) {
  if (!u_membership(m_)) throw NotMember("2x2 matrix is not in U(2;Z[w])");
}

FiniteUnitary FiniteUnitary::u1() { return FiniteUnitary(Matrix2{{{0, 1}, {1, 0}}}, Trusted{}); }

FiniteUnitary FiniteUnitary::u2() { return FiniteUnitary(Matrix2{{{EisensteinInt(0, -1), 0}, {0, 1}}}, Trusted{}); }

FiniteUnitary FiniteUnitary::operator*(const FiniteUnitary& o) const { return FiniteUnitary(mul(m_, o.m_), Trusted{}); }

FiniteUnitary FiniteUnitary::inverse() const { return FiniteUnitary(conj_transpose(m_), Trusted{}); }

std::ostream& operator<<(std::ostream& os, const FiniteUnitary& u) {
  return os << "[[" << u(0, 0) << ", " << u(0, 1) << "], [" << u(1, 0) << ", " << u(1, 1) << "]]";
}

FiniteUnitary evaluate(const UWord& w) {
  FiniteUnitary r;
  for (const auto& l : w) {
    const FiniteUnitary g = l.gen == UGen::U1 ? FiniteUnitary::u1() : FiniteUnitary::u2();
    const int order = l.gen == UGen::U1 ? 2 : 6;
    const int e = ((l.exp % order) + order) % order;
    for (int i = 0; i < e; ++i) r = r * g;
  }
  return r;
}

std::vector<FiniteUnitary> enumerate_group() {
  std::vector<FiniteUnitary> out;
  out.reserve(72);
  const auto& units = Unit::all();
  for (int shape = 0; shape < 2; ++shape) {
    for (const auto& a : units) {
      for (const auto& b : units) {
        Matrix2 m;
        if (shape == 0) {
          m = {{{a.value(), 0}, {0, b.value()}}};
        } else {
          m = {{{0, b.value()}, {a.value(), 0}}};
        }
        out.emplace_back(std::move(m));
      }
    }
  }
  return out;
}

namespace {

void push_canonical(UWord& w, ULetter l) {
  if (!w.empty() && w.back().gen == l.gen) {
    l.exp += w.back().exp;
    w.pop_back();
  }
  const int order = l.gen == UGen::U1 ? 2 : 6;
  int e = ((l.exp % order) + order) % order;
  if (l.gen == UGen::U2 && e > 3) e -= order;
  if (e != 0) w.push_back({l.gen, e});
}

struct BfsResult {
  std::vector<std::pair<FiniteUnitary, UWord>> table;
};

BfsResult run_bfs() {
  const std::array<std::pair<FiniteUnitary, ULetter>, 3> gens{{
      {FiniteUnitary::u1(), {UGen::U1, 1}},
      {FiniteUnitary::u2(), {UGen::U2, 1}},
      {FiniteUnitary::u2().inverse(), {UGen::U2, -1}},
  }};
  BfsResult r;
  r.table.emplace_back(FiniteUnitary(), UWord{});
  for (std::size_t head = 0; head < r.table.size(); ++head) {
    for (const auto& [g, letter] : gens) {
      FiniteUnitary next = r.table[head].first * g;
      auto seen = std::find_if(r.table.begin(), r.table.end(), [&](const auto& e) { return e.first == next; });
      if (seen != r.table.end()) continue;
      UWord w = r.table[head].second;
      push_canonical(w, letter);
      r.table.emplace_back(std::move(next), std::move(w));
    }
  }
  return r;
}

}  // namespace

const std::vector<std::pair<FiniteUnitary, UWord>>& u_word_table() {
  static const BfsResult bfs = run_bfs();
  return bfs.table;
}

std::vector<FiniteUnitary> generated_closure() {
  std::vector<FiniteUnitary> out;
  for (const auto& [u, w] : u_word_table()) out.push_back(u);
  return out;
}

UWord u_decompose(const FiniteUnitary& u) {
  const auto& table = u_word_table();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == u; });
  if (it == table.end()) throw InternalError("U(2;Z[w]) element missing from the BFS table");
  return it->second;
}

UWord u_decompose(const Matrix2& u) {
  if (!u_membership(u)) throw NotMember("u_decompose: matrix is not in U(2;Z[w])");
  return u_decompose(FiniteUnitary(u));
}

GroupMatrix lift(const FiniteUnitary& u) { return rotation_matrix(u); }

GroupMatrix lift(const Matrix2& m) {
  if (!u_membership(m)) throw NotMember("lift: matrix is not in U(2;Z[w])");
  return rotation_matrix(FiniteUnitary(m));
}

}  // namespace picard
