#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mmatch/exact.hpp"
#include "mmatch/numeric.hpp"
#include "mmatch/size_profile.hpp"

namespace mmatch {

// S(G_n, k) gets coeff * S(G_{n-lag}, k-shift).
struct RecurrenceTerm {
  int lag = 1;
  int shift = 1;
  Rational coeff;
};

struct BaseProfile {
  int index = 0;
  SizeProfile profile;
  // True for members that are not real graphs (C_0, C_1, C_2 of the cycle
  // family, the empty chain G_0); such values are never checked against
  // enumeration.
  bool conventional = false;
};

// Bases cover consecutive indices first_index() .. first_index() + depth - 1
// and the recurrence is applied from n_min() = first_index() + depth on.
// The base-condition sum runs over those bases in order.
struct RecurrenceSpec {
  int depth = 1;
  std::vector<RecurrenceTerm> terms;
  std::vector<BaseProfile> bases;

  int first_index() const { return bases.empty() ? 0 : bases.front().index; }
  int n_min() const { return first_index() + depth; }

  // Throws InputError on a malformed spec (lags outside 1..depth, no lag-depth
  // term, gaps in the bases).
  void validate() const;
};

struct AlphaBeta {
  std::vector<Rational> alpha;  // alpha[i-1] = sum_j a_ij
  std::vector<Rational> beta;   // beta[i-1]  = sum_j j a_ij
};

AlphaBeta alpha_beta(const RecurrenceSpec& spec);

// Roots of x^D - sum_i alpha_i x^{D-i}: eigenvalues of the companion matrix,
// each polished by Newton steps on the polynomial. Sorted by decreasing
// modulus, ties broken by real then imaginary part.
std::vector<std::complex<double>> characteristic_roots(const std::vector<Rational>& alpha);
std::vector<std::complex<double>> characteristic_roots(const std::vector<double>& alpha);

inline constexpr double kDominanceGap = 1e-9;
inline constexpr double kImagTolerance = 1e-9;
inline constexpr double kBaseConditionTolerance = 1e-9;

// Max-modulus root. Throws NonUniqueDominantRoot when the relative gap to the
// runner-up is below kDominanceGap, ComplexDominantRoot when the winner is not
// real.
double dominant_root(const std::vector<std::complex<double>>& roots);

struct BaseCondition {
  double value = 0;
  bool nonzero = false;
};

// sum_{i<D} r^{-i} (T0(G_i) - sum_{1<=j<=i} alpha_j T0(G_{i-j})).
BaseCondition base_condition_check(const RecurrenceSpec& spec, double r);

struct HypothesisReport {
  bool root_unique = false;
  bool multiplicity_one = false;
  bool p_nonzero = false;
  double p_value = 0;

  bool all() const { return root_unique && multiplicity_one && p_nonzero; }
};

struct AsymptoticResult {
  std::vector<Rational> alpha, beta;
  double dominant_root = 0;
  std::vector<std::complex<double>> all_roots;
  double limit = 0;  // NaN unless hypothesis.all()
  HypothesisReport hypothesis;
  std::string failure;  // first failing hypothesis, empty when all hold
};

// Never throws on hypothesis failure; flags and failure describe it.
AsymptoticResult analyze(const RecurrenceSpec& spec, const Rational& c);

// sum_i beta_i r^{D-i} / (c sum_i i alpha_i r^{D-i}). Throws the matching
// HypothesisError subtype when a precondition fails.
AsymptoticResult asymptotic_limit(const RecurrenceSpec& spec, const Rational& c);

// Exact profiles for indices first_index() .. n_to.
std::vector<SizeProfile> extend_sequence(const RecurrenceSpec& spec, int n_to);

// Exact profile at n_target. Throws InputError below first_index().
SizeProfile extend_profiles(const RecurrenceSpec& spec, int n_target);

// T1 / (nu T0), 1 when nu == 0.
Rational finite_ratio(const SizeProfile& profile, int nu);

}  // namespace mmatch
