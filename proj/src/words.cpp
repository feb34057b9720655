#include "picard/words.hpp"

#include <cctype>
#include <sstream>

#include "picard/errors.hpp"

namespace picard {

char generator_symbol(Generator g) {
  switch (g) {
    case Generator::N: return 'N';
    case Generator::A: return 'A';
    case Generator::B: return 'B';
    case Generator::R: return 'R';
  }
  return '?';
}

int generator_order(Generator g) {
  switch (g) {
    case Generator::N: return 0;
    case Generator::A: return 2;
    case Generator::B: return 6;
    case Generator::R: return 2;
  }
  return 0;
}

GroupMatrix generator_matrix(Generator g) {
  switch (g) {
    case Generator::N: return translation_matrix(Vec2{1, 0}, 1);
    case Generator::A: return lift(FiniteUnitary::u1());
    case Generator::B: return lift(FiniteUnitary::u2());
    case Generator::R: return inversion();
  }
  throw InternalError("unknown generator");
}

namespace {

// Canonical residue of e modulo the generator order; B lands in -2..3.
mpz_class reduce_exponent(Generator g, const mpz_class& e) {
  const int order = generator_order(g);
  if (order == 0) return e;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), e.get_mpz_t(), order);
  if (g == Generator::B && r > 3) r -= order;
  return r;
}

}  // namespace

GroupMatrix generator_power(Generator g, const mpz_class& e) {
  if (g == Generator::N) return translation_matrix(Vec2{EisensteinInt(e), 0}, e);
  const long r = reduce_exponent(g, e).get_si();
  if (r == 0) return GroupMatrix();
  GroupMatrix base = generator_matrix(g);
  if (r < 0) base = inverse(base);
  GroupMatrix out = base;
  for (long i = 1; i < (r < 0 ? -r : r); ++i) out *= base;
  return out;
}

GroupMatrix evaluate(const Word& w) {
  GroupMatrix out;
  for (const auto& l : w) out *= generator_power(l.gen, l.exp);
  return out;
}

void push_normalized(Word& w, Letter l) {
  l.exp = reduce_exponent(l.gen, l.exp);
  if (sgn(l.exp) == 0) return;
  if (!w.empty() && w.back().gen == l.gen) {
    Letter merged{l.gen, w.back().exp + l.exp};
    w.pop_back();
    push_normalized(w, std::move(merged));
    return;
  }
  w.push_back(std::move(l));
}

void append_normalized(Word& w, const Word& tail) {
  for (const auto& l : tail) push_normalized(w, l);
}

Word normalize(const Word& w) {
  Word out;
  append_normalized(out, w);
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, mpz_class(-it->exp)});
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  const auto at_end = [&] { return i >= text.size(); };
  while (!at_end()) {
    const char c = text[i];
    if (c == ' ') {
      ++i;
      continue;
    }
    Generator g;
    switch (c) {
      case 'N': g = Generator::N; break;
      case 'A': g = Generator::A; break;
      case 'B': g = Generator::B; break;
      case 'R': g = Generator::R; break;
      default: throw ParseError(std::string("unexpected character '") + c + "' in word", i);
    }
    ++i;
    mpz_class e = 1;
    if (!at_end() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      if (!at_end() && (text[i] == '-' || text[i] == '+')) ++i;
      const std::size_t digits = i;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError("expected integer exponent", i);
      std::string num(text.substr(start, i - start));
      if (num[0] == '+') num.erase(0, 1);
      e = mpz_class(num, 10);
    }
    out.push_back({g, std::move(e)});
  }
  return out;
}

std::string serialize(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : normalize(w)) {
    if (!first) os << ' ';
    first = false;
    os << generator_symbol(l.gen);
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

GroupMatrix evaluate(const DecompositionResult& r) { return unit_correction(r.lambda) * evaluate(r.word); }

}  // namespace picard
