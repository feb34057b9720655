#pragma once

// Constructive membership for U(3,1;Z[w]): reduce an element to the
// stabilizer of infinity by repeated R * N_(tau,k) steps, then write the
// stabilizer part over N, A, B.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "picard/hermitian.hpp"
#include "picard/words.hpp"

namespace picard {

/// Translation picked for one reduction step, with the exact bound data.
struct TranslationChoice {
  Translation translation;
  /// I1 = (|g21/g41 + tau1|^2 + |g31/g41 + tau2|^2) / 2, at most 1/3.
  mpq_class i1;
  /// E with I2 = (sqrt3 / 2) (E + k); |E + k| <= 1.
  mpq_class e;
};

/// Throws DomainError when g41 == 0.
TranslationChoice choose_translation(const GroupMatrix& g);

struct ReductionStep {
  Vec2 tau;
  mpz_class k;
  mpz_class n_before;  // norm(g41) before the step
  mpz_class n_after;
  mpq_class i1;
  mpq_class e;
};

struct StepOutcome {
  ReductionStep step;
  GroupMatrix next;  // R * N_(tau,k) * G
};

/// One step of the reduction. Guarantees 36 n_after <= 31 n_before and
/// throws InternalError otherwise.
StepOutcome reduction_step(const GroupMatrix& g);

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  HeisenbergParam stabilizer;
};

/// ceil(log n0 / log(36/31)) + 1, for n0 >= 1.
std::size_t step_bound(const mpz_class& n0);

/// Word over {N, A, B} evaluating exactly to N_(tau, k sqrt3).
/// Throws ParityError for parity-violating input.
Word decompose_translation(const Vec2& tau, const mpz_class& k);

/// As decompose_translation, also reporting the central residual s of
/// the non-central part (the trailing commutator power is s/2).
struct TranslationWord {
  Word word;
  mpz_class residual_k;
};
TranslationWord decompose_translation_detailed(const Vec2& tau, const mpz_class& k);

/// The commutator [N, B N B^-1] = N_((0,0), 2 sqrt3) raised to the power t,
/// written as [N^t, B N B^-1].
Word central_power(const mpz_class& t);

/// Throws ShapeError when P does not fix infinity.
DecompositionResult decompose_stabilizer(const GroupMatrix& p);

struct Decomposition {
  DecompositionResult result;
  ReductionTrace trace;
};

/// Full decomposition; the result is verified before returning.
Decomposition decompose(const GroupMatrix& g);
/// Throws NotMember if m is not in the group.
Decomposition decompose(const Matrix4& m);

bool verify(const GroupMatrix& g, const DecompositionResult& result);

// Random instances --------------------------------------------------------

using Rng = std::mt19937_64;

/// Uniform generator, exponent uniform in [-3,3]\{0}, length uniform in [1, max_len].
Word random_word(Rng& rng, std::size_t max_len);
/// Throws std::invalid_argument when max_len == 0.
GroupMatrix random_element(std::uint64_t seed, std::size_t max_len);
/// C_lambda N_(tau,k) M_U with tau coefficients in [-5,5], k in [-10,10].
GroupMatrix random_stabilizer(std::uint64_t seed);
HeisenbergParam random_stabilizer_param(Rng& rng);

// Experimental ------------------------------------------------------------

/// Searches words over {N, N^-1, A, B, B^-1, R} up to max_len letters for
/// elements whose stabilizer residue C_lambda is non-trivial. Returns one
/// witness word per unit found, keyed by the index of lambda in Unit::all().
std::map<int, Word> probe_unit_corrections(std::size_t max_len);

}  // namespace picard
