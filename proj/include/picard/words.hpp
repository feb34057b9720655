#pragma once

// Words over the generators of U(3,1;Z[w]):
//   N = N_((1,0), sqrt3)   Heisenberg translation
//   A = M_U1               Heisenberg rotation (swap)
//   B = M_U2               Heisenberg rotation diag(-w, 1)
//   R                      the involution
// A word acts by left-to-right matrix multiplication.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "picard/hermitian.hpp"

namespace picard {

enum class Generator { N, A, B, R };

char generator_symbol(Generator g);
/// 0 for infinite order.
int generator_order(Generator g);
GroupMatrix generator_matrix(Generator g);
/// g^e, computed in closed form (N^e = N_((e,0), e sqrt3)).
GroupMatrix generator_power(Generator g, const mpz_class& e);

struct Letter {
  Generator gen;
  mpz_class exp;

  friend bool operator==(const Letter& x, const Letter& y) { return x.gen == y.gen && x.exp == y.exp; }
};

using Word = std::vector<Letter>;

GroupMatrix evaluate(const Word& w);

/// Merge adjacent letters with the same generator, reduce exponents of A, B
/// and R by their orders (B into -2..3), drop trivial letters.
Word normalize(const Word& w);

/// Appends l to an already-normalized word, keeping it normalized.
void push_normalized(Word& w, Letter l);
void append_normalized(Word& w, const Word& tail);

/// Formal inverse: reversed letters with negated exponents.
Word invert(const Word& w);

/// Grammar: WORD := (TOKEN SP*)*, TOKEN := ("N"|"A"|"B"|"R") ("^" SIGNED_INT)?
/// Throws ParseError carrying the byte offset of the first bad character.
Word parse_word(std::string_view text);

/// Space-separated tokens of normalize(w); "" for the empty word.
std::string serialize(const Word& w);

/// unit_correction(lambda) * evaluate(word) reproduces the decomposed matrix.
struct DecompositionResult {
  Unit lambda;
  Word word;
};

GroupMatrix evaluate(const DecompositionResult& r);

}  // namespace picard
