#include "picard/decomposer.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "picard/errors.hpp"

namespace picard {

namespace {

mpq_class abs_q(const mpq_class& x) { return sgn(x) < 0 ? mpq_class(-x) : x; }

[[noreturn]] void internal_failure(const std::string& what, const GroupMatrix& g) {
  std::ostringstream os;
  os << what << "\nmatrix:\n" << g;
  throw InternalError(os.str());
}

Word lift_uword(const UWord& uw) {
  Word w;
  for (const auto& l : uw) push_normalized(w, {l.gen == UGen::U1 ? Generator::A : Generator::B, mpz_class(l.exp)});
  return w;
}

Vec2 scale(const EisensteinInt& s, const Vec2& v) { return {s * v[0], s * v[1]}; }

}  // namespace

TranslationChoice choose_translation(const GroupMatrix& g) {
  if (fixes_infinity(g)) throw DomainError("choose_translation: g41 = 0");
  const auto& d = g.g41();
  const EisensteinFrac c1 = EisensteinFrac::quotient(g.at(0, 0), d);
  const EisensteinFrac c2 = EisensteinFrac::quotient(g.at(1, 0), d);
  const EisensteinFrac c3 = EisensteinFrac::quotient(g.at(2, 0), d);

  TranslationChoice out;
  Vec2& tau = out.translation.tau;
  tau = {-round_nearest(c2), -round_nearest(c3)};

  out.i1 = (eis_norm(c2 + tau[0]) + eis_norm(c3 + tau[1])) / 2;

  // Im(c1 - c2 conj(tau1) - c3 conj(tau2)) = e sqrt3, and E = 2e.
  const EisensteinFrac im_arg = c1 - c2 * eis_conj(tau[0]) - c3 * eis_conj(tau[1]);
  out.e = 2 * re_im(im_arg).second.coeff;

  mpz_class base;
  {
    mpq_class target = -out.e;
    mpz_fdiv_q(base.get_mpz_t(), target.get_num_mpz_t(), target.get_den_mpz_t());
  }
  bool have = false;
  mpq_class best_gap;
  mpz_class& best_k = out.translation.k;
  for (int off = -2; off <= 3; ++off) {
    mpz_class k = base + off;
    if (!parity_ok(tau, k)) continue;
    mpq_class gap = abs_q(out.e + k);
    const bool better = !have || gap < best_gap ||
                        (gap == best_gap && (mpz_cmpabs(k.get_mpz_t(), best_k.get_mpz_t()) < 0 || (mpz_cmpabs(k.get_mpz_t(), best_k.get_mpz_t()) == 0 && k < best_k)));
    if (better) {
      have = true;
      best_gap = gap;
      best_k = k;
    }
  }
  return out;
}

StepOutcome reduction_step(const GroupMatrix& g) {
  TranslationChoice choice = choose_translation(g);
  StepOutcome out{{}, inversion() * translation_matrix(choice.translation) * g};
  ReductionStep& s = out.step;
  s.tau = choice.translation.tau;
  s.k = choice.translation.k;
  s.n_before = eis_norm(g.g41());
  s.n_after = eis_norm(out.next.g41());
  s.i1 = choice.i1;
  s.e = choice.e;

  if (s.i1 > mpq_class(1, 3)) internal_failure("reduction_step: I1 exceeds 1/3", g);
  const mpq_class gap = s.e + s.k;
  if (abs_q(gap) > 1) internal_failure("reduction_step: |E + k| exceeds 1", g);
  // |g'41|^2 = |g41|^2 (I1^2 + I2^2) with I2^2 = 3/4 (E + k)^2.
  const mpq_class ratio = s.i1 * s.i1 + mpq_class(3, 4) * gap * gap;
  if (mpq_class(s.n_after) != ratio * s.n_before) internal_failure("reduction_step: |g'41|^2 != |g41|^2 (I1^2 + I2^2)", g);
  if (36 * s.n_after > 31 * s.n_before) internal_failure("reduction_step: contraction 31/36 violated", g);
  return out;
}

std::size_t step_bound(const mpz_class& n0) {
  if (n0 < 1) throw std::invalid_argument("step_bound: n0 must be positive");
  // smallest s with 36^s >= n0 * 31^s
  std::size_t s = 0;
  mpz_class lhs = 1, rhs = n0;
  while (lhs < rhs) {
    lhs *= 36;
    rhs *= 31;
    ++s;
  }
  return s + 1;
}

Word central_power(const mpz_class& t) {
  if (sgn(t) == 0) return {};
  const mpz_class one = 1;
  Word w{{Generator::N, t},      {Generator::B, one},  {Generator::N, one},      {Generator::B, mpz_class(-1)},
         {Generator::N, mpz_class(-t)}, {Generator::B, one}, {Generator::N, mpz_class(-1)}, {Generator::B, mpz_class(-1)}};
  return w;
}

TranslationWord decompose_translation_detailed(const Vec2& tau, const mpz_class& k) {
  if (!parity_ok(tau, k))
    throw ParityError("decompose_translation: k and |tau|^2 differ mod 2 (k=" + k.get_str() + ")");
  const mpz_class &a1 = tau[0].a, &b1 = tau[0].b, &a2 = tau[1].a, &b2 = tau[1].b;
  const mpz_class one = 1;

  // N^a1 . (B^-2 N^b1 B^2) . (A N^a2 A) . (A B^-2 N^b2 B^2 A)
  Word w;
  const Word raw{{Generator::N, a1},
                 {Generator::B, mpz_class(-2)}, {Generator::N, b1}, {Generator::B, mpz_class(2)},
                 {Generator::A, one}, {Generator::N, a2}, {Generator::A, one},
                 {Generator::A, one}, {Generator::B, mpz_class(-2)}, {Generator::N, b2}, {Generator::B, mpz_class(2)},
                 {Generator::A, one}};
  append_normalized(w, raw);

  const GroupMatrix target = translation_matrix(tau, k);
  const GroupMatrix residual = inverse(evaluate(w)) * target;
  const mpz_class s = residual.at(0, 3).b;
  if (!(residual == translation_matrix(Vec2{0, 0}, s)))
    internal_failure("decompose_translation: residual is not a vertical translation", residual);
  if (!mpz_even_p(s.get_mpz_t())) internal_failure("decompose_translation: residual vertical coordinate is odd", residual);

  append_normalized(w, central_power(mpz_class(s / 2)));
  return {std::move(w), s};
}

Word decompose_translation(const Vec2& tau, const mpz_class& k) {
  return decompose_translation_detailed(tau, k).word;
}

DecompositionResult decompose_stabilizer(const GroupMatrix& p) {
  if (!fixes_infinity(p)) throw ShapeError("decompose_stabilizer: element does not fix infinity");
  const HeisenbergParam param = langlands_extract(p);
  DecompositionResult r{param.lambda, decompose_translation(param.tau, param.k)};
  append_normalized(r.word, lift_uword(u_decompose(param.u)));
  if (!verify(p, r)) internal_failure("decompose_stabilizer: word does not reproduce the input", p);
  return r;
}

Decomposition decompose(const GroupMatrix& g) {
  Decomposition out;
  const std::size_t bound = fixes_infinity(g) ? 0 : step_bound(eis_norm(g.g41()));
  GroupMatrix cur = g;
  while (!fixes_infinity(cur)) {
    StepOutcome o = reduction_step(cur);
    out.trace.steps.push_back(std::move(o.step));
    cur = std::move(o.next);
    if (out.trace.steps.size() > bound) internal_failure("decompose: step bound exceeded", g);
  }
  const DecompositionResult stab = decompose_stabilizer(cur);
  out.trace.stabilizer = langlands_extract(cur);

  // G = N(-tau_0) R N(-tau_1) R ... R C_lambda S; C_lambda commutes with R and
  // N_(sigma,s) C_lambda = C_lambda N_(lambda sigma, s).
  out.result.lambda = stab.lambda;
  Word& w = out.result.word;
  for (const auto& step : out.trace.steps) {
    const Vec2 sigma = scale(stab.lambda.value(), Vec2{-step.tau[0], -step.tau[1]});
    append_normalized(w, decompose_translation(sigma, mpz_class(-step.k)));
    push_normalized(w, {Generator::R, 1});
  }
  append_normalized(w, stab.word);

  if (!verify(g, out.result)) internal_failure("decompose: assembled word does not reproduce the input", g);
  return out;
}

Decomposition decompose(const Matrix4& m) { return decompose(GroupMatrix(m)); }

bool verify(const GroupMatrix& g, const DecompositionResult& result) { return evaluate(result) == g; }

// ---------------------------------------------------------------------------

namespace {

// rng() % n; reproducible across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n) { return rng() % n; }

long uniform_in(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Word random_word(Rng& rng, std::size_t max_len) {
  if (max_len == 0) throw std::invalid_argument("random_word: max_len must be at least 1");
  static constexpr Generator gens[] = {Generator::N, Generator::A, Generator::B, Generator::R};
  const std::size_t len = 1 + uniform_below(rng, max_len);
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Generator g = gens[uniform_below(rng, 4)];
    long e = uniform_in(rng, -3, 2);
    if (e >= 0) ++e;  // [-3,3] without 0
    w.push_back({g, mpz_class(e)});
  }
  return w;
}

GroupMatrix random_element(std::uint64_t seed, std::size_t max_len) {
  Rng rng(seed);
  return evaluate(random_word(rng, max_len));
}

HeisenbergParam random_stabilizer_param(Rng& rng) {
  static const std::vector<FiniteUnitary> group = enumerate_group();
  HeisenbergParam p;
  p.lambda = Unit::all()[uniform_below(rng, 6)];
  for (auto& t : p.tau) t = EisensteinInt(uniform_in(rng, -5, 5), uniform_in(rng, -5, 5));
  // k in [-10, 10] with k = |tau|^2 mod 2: 11 even values or 10 odd ones.
  if (mpz_even_p(mpz_class(norm_squared(p.tau)).get_mpz_t())) {
    p.k = 2 * uniform_in(rng, -5, 5);
  } else {
    p.k = 2 * uniform_in(rng, -5, 4) + 1;
  }
  p.u = group[uniform_below(rng, group.size())];
  return p;
}

GroupMatrix random_stabilizer(std::uint64_t seed) {
  Rng rng(seed);
  return random_stabilizer_param(rng).reconstruct();
}

// ---------------------------------------------------------------------------

std::map<int, Word> probe_unit_corrections(std::size_t max_len) {
  static const std::array<Letter, 6> alphabet{{{Generator::N, 1},
                                               {Generator::N, -1},
                                               {Generator::A, 1},
                                               {Generator::B, 1},
                                               {Generator::B, -1},
                                               {Generator::R, 1}}};
  const auto& units = Unit::all();
  std::map<int, Word> found;
  Word path;

  // Any G = C_lambda * evaluate(w_G) with lambda != 1 gives the witness
  // C_lambda = G * evaluate(w_G)^-1.
  std::function<void(const GroupMatrix&)> dfs = [&](const GroupMatrix& m) {
    if (!path.empty()) {
      const Decomposition d = decompose(m);
      const Unit& lambda = d.result.lambda;
      int idx = 0;
      while (!(units[idx] == lambda)) ++idx;
      if (idx != 0 && !found.count(idx)) {
        Word witness = path;
        append_normalized(witness, invert(d.result.word));
        if (!(evaluate(witness) == unit_correction(lambda)))
          internal_failure("probe_unit_corrections: witness does not evaluate to C_lambda", m);
        found.emplace(idx, std::move(witness));
      }
    }
    if (path.size() == max_len || found.size() == 5) return;
    for (const auto& l : alphabet) {
      if (!path.empty()) {
        const Letter& last = path.back();
        // skip immediate cancellations and repeated involutions
        if (last.gen == l.gen && (last.exp != l.exp || l.gen == Generator::A || l.gen == Generator::R)) continue;
      }
      path.push_back(l);
      dfs(m * generator_power(l.gen, l.exp));
      path.pop_back();
    }
  };
  dfs(GroupMatrix());
  return found;
}

}  // namespace picard
