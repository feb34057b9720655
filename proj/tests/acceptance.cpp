// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic,
// zero tolerance everywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "picard/decomposer.hpp"
#include "picard/finite_unitary.hpp"
#include "picard/hermitian.hpp"
#include "picard/words.hpp"

using namespace picard;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

mpq_class abs_q(const mpq_class& x) { return sgn(x) < 0 ? mpq_class(-x) : x; }

Translation random_translation(std::mt19937_64& rng, long r) {
  Translation t;
  for (auto& c : t.tau) c = EisensteinInt(oracle::uniform(rng, -r, r), oracle::uniform(rng, -r, r));
  long k = oracle::uniform(rng, -4 * r * r, 4 * r * r);
  if (!parity_ok(t.tau, k)) ++k;
  t.k = k;
  return t;
}

// Statistics shared by criteria 3 and 5.
struct StepStats {
  std::size_t steps = 0;
  std::size_t cases = 0;
};

Outcome generator_validity() {
  Outcome o;
  const GroupMatrix n = generator_matrix(Generator::N), a = generator_matrix(Generator::A),
                    b = generator_matrix(Generator::B), r = generator_matrix(Generator::R);
  for (const auto* g : {&n, &a, &b, &r}) o.require(check_membership(g->matrix()), "generator fails G*JG = J");
  o.require(r * r == GroupMatrix(), "R^2 != I");
  o.require(a * a == GroupMatrix(), "M_U1^2 != I");
  GroupMatrix b6;
  for (int i = 0; i < 6; ++i) b6 *= b;
  o.require(b6 == GroupMatrix(), "M_U2^6 != I");
  std::ostringstream d;
  d << "4 generators preserve J; R^2 = M_U1^2 = M_U2^6 = I";
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome finite_unitary_generation() {
  Outcome o;
  const auto closure = generated_closure();
  const auto all = enumerate_group();
  const std::set<FiniteUnitary> cs(closure.begin(), closure.end()), as(all.begin(), all.end());
  o.require(all.size() == 72 && as.size() == 72, "enumeration does not have 72 elements");
  o.require(closure.size() == 72 && cs == as, "BFS closure differs from the enumerated group");
  for (const auto& u : all) o.require(evaluate(u_decompose(u)) == u, "a U(2) word does not re-evaluate");
  if (o.ok) o.detail = "closure = enumeration = 72 elements; 72/72 words exact";
  return o;
}

Outcome contraction(StepStats& stats) {
  Outcome o;
  std::mt19937_64 rng(31);
  const mpq_class third(1, 3);
  while (stats.steps < 10000) {
    GroupMatrix g = evaluate(random_word(rng, 40));
    ++stats.cases;
    while (!fixes_infinity(g)) {
      const StepOutcome s = reduction_step(g);
      const mpz_class n_before = eis_norm(g.g41());
      const mpz_class n_after = eis_norm(s.next.g41());
      o.require(s.next == inversion() * translation_matrix(s.step.tau, s.step.k) * g, "step is not R N_(tau,k) G");
      o.require(36 * n_after <= 31 * n_before, "36 n_after > 31 n_before");
      o.require(s.step.i1 <= third, "I1 > 1/3");
      o.require(abs_q(s.step.e + s.step.k) <= 1, "|E + k| > 1");
      ++stats.steps;
      g = s.next;
    }
  }
  if (o.ok) o.detail = std::to_string(stats.steps) + " steps over " + std::to_string(stats.cases) + " words, all within 31/36";
  return o;
}

Outcome round_trip(StepStats& bound_cases, std::size_t& max_steps) {
  Outcome o;
  Rng rng(7);
  std::size_t verified = 0;
  for (int i = 0; i < 1000; ++i) {
    const GroupMatrix g = evaluate(random_word(rng, 40));
    const Decomposition d = decompose(g);
    const bool exact = unit_correction(d.result.lambda) * evaluate(d.result.word) == g;
    o.require(exact, "round trip " + std::to_string(i) + " is not exact");
    verified += exact;
    const std::size_t bound = fixes_infinity(g) ? 0 : step_bound(eis_norm(g.g41()));
    ++bound_cases.cases;
    bound_cases.steps += d.trace.steps.size() <= bound;
    max_steps = std::max(max_steps, d.trace.steps.size());
  }
  if (o.ok) o.detail = std::to_string(verified) + "/1000 verified";
  return o;
}

Outcome step_count(const StepStats& within, std::size_t max_steps) {
  Outcome o;
  // Extra cases with long words push n0 higher.
  Rng rng(8);
  StepStats s = within;
  for (int i = 0; i < 200; ++i) {
    const GroupMatrix g = evaluate(random_word(rng, 120));
    const Decomposition d = decompose(g);
    const std::size_t bound = fixes_infinity(g) ? 0 : step_bound(eis_norm(g.g41()));
    ++s.cases;
    s.steps += d.trace.steps.size() <= bound;
    max_steps = std::max(max_steps, d.trace.steps.size());
  }
  o.require(s.steps == s.cases, "a decomposition exceeded ceil(log n0 / log(36/31)) + 1 steps");
  if (o.ok) o.detail = std::to_string(s.steps) + "/" + std::to_string(s.cases) + " within bound (max steps " + std::to_string(max_steps) + ")";
  return o;
}

Outcome hexagon_rounding() {
  Outcome o;
  std::mt19937_64 rng(6);
  const mpq_class third(1, 3);
  for (int i = 0; i < 10000; ++i) {
    const long d = oracle::uniform(rng, 1, 1000);
    const long a = oracle::uniform(rng, -10 * d, 10 * d), b = oracle::uniform(rng, -10 * d, 10 * d);
    const EisensteinFrac z(EisensteinInt(a, b), d);
    const EisensteinInt u = round_nearest(z);
    const long ca = z.num().a.get_si(), cb = z.num().b.get_si(), cd = z.den().get_si();
    const auto ref = oracle::brute_force_nearest(ca, cb, cd);
    const EisensteinInt diff = z.num() - z.den() * u;
    const mpz_class got = eis_norm(diff);
    o.require(got == ref.dist_num, "round_nearest misses the brute-force minimum");
    o.require(mpq_class(got, z.den() * z.den()) <= third, "distance^2 > 1/3");
  }
  if (o.ok) o.detail = "10000/10000 match brute force, all distance^2 <= 1/3";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  const GroupMatrix n = generator_matrix(Generator::N), a = generator_matrix(Generator::A),
                    b = generator_matrix(Generator::B);
  o.require(a * n * a == translation_matrix(Vec2{0, 1}, 1), "M_U1 N1 M_U1 != N_((0,1),sqrt3)");
  o.require(inverse(b * b) * n * b * b == translation_matrix(Vec2{EisensteinInt::omega(), 0}, 1),
            "M_U2^-2 N1 M_U2^2 != N_((w,0),sqrt3)");
  const GroupMatrix y = b * n * inverse(b);
  o.require(n * y * inverse(n) * inverse(y) == translation_matrix(Vec2{0, 0}, 2), "[N1, M_U2 N1 M_U2^-1] != N_((0,0),2sqrt3)");
  if (o.ok) o.detail = "3/3 identities exact";
  return o;
}

Outcome group_law() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Translation p = random_translation(rng, 12), q = random_translation(rng, 12);
    o.require(translation_matrix(compose_heisenberg(p, q)) == translation_matrix(p) * translation_matrix(q),
              "compose_heisenberg disagrees with the matrix product");
  }
  if (o.ok) o.detail = "1000/1000 pairs agree";
  return o;
}

Outcome parity_integrality() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Translation t = random_translation(rng, 25);
    const TranslationWord tw = decompose_translation_detailed(t.tau, t.k);
    o.require(mpz_even_p(tw.residual_k.get_mpz_t()), "residual vertical coordinate is odd");
    o.require(evaluate(tw.word) == translation_matrix(t), "translation word does not re-evaluate");
  }
  if (o.ok) o.detail = "1000/1000 residuals even, words exact";
  return o;
}

Outcome cone_condition() {
  Outcome o;
  Rng rng(10);
  int tested = 0;
  while (tested < 1000) {
    const GroupMatrix g = evaluate(random_word(rng, 40));
    if (fixes_infinity(g)) continue;
    ++tested;
    o.require(image_of_infinity(g).on_cone(), "image_of_infinity violates the cone condition");
    // cleared of denominators: 2 Re(g11 conj g41) + |g21|^2 + |g31|^2 = 0
    const EisensteinInt cross = g.at(0, 0) * eis_conj(g.g41());
    const mpz_class lhs = (2 * cross.a - cross.b) + eis_norm(g.at(1, 0)) + eis_norm(g.at(2, 0));
    o.require(lhs == 0, "first column is not isotropic");
  }
  if (o.ok) o.detail = "1000/1000 on the cone";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const std::string& name, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << name << ": " << o.detail << " (" << secs << " s)"
              << std::endl;
  };

  StepStats fuzz_steps, bound_cases;
  std::size_t max_steps = 0;
  report(1, "generator validity", generator_validity);
  report(2, "U(2;Z[w]) generated by U1, U2", finite_unitary_generation);
  report(3, "contraction 36 n' <= 31 n", [&] { return contraction(fuzz_steps); });
  report(4, "round-trip soundness (seed 7, length <= 40)", [&] { return round_trip(bound_cases, max_steps); });
  report(5, "step-count bound", [&] { return step_count(bound_cases, max_steps); });
  report(6, "hexagon rounding", hexagon_rounding);
  report(7, "identity suite", identity_suite);
  report(8, "Heisenberg group law", group_law);
  report(9, "parity / t1 integrality", parity_integrality);
  report(10, "cone condition", cone_condition);

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
