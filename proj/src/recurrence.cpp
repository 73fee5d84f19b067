#include "mmatch/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "mmatch/errors.hpp"

namespace mmatch {

namespace {

using Complex = std::complex<double>;
using LComplex = std::complex<long double>;

// p(x) = x^D - sum alpha_i x^{D-i} and p'(x) by Horner.
std::pair<LComplex, LComplex> evaluate(const std::vector<double>& alpha, LComplex x) {
  LComplex p = 1, dp = 0;
  for (double a : alpha) {
    dp = dp * x + p;
    p = p * x - static_cast<long double>(a);
  }
  return {p, dp};
}

Complex polish(const std::vector<double>& alpha, Complex start) {
  LComplex x(start.real(), start.imag());
  long double last_step = std::numeric_limits<long double>::infinity();
  for (int iter = 0; iter < 60; ++iter) {
    auto [p, dp] = evaluate(alpha, x);
    if (p == LComplex(0) || dp == LComplex(0)) break;
    const LComplex step = p / dp;
    const long double size = std::abs(step);
    // Stop once Newton stops contracting; near multiple roots it stalls.
    if (!(size < last_step)) break;
    x -= step;
    last_step = size;
    if (size <= 1e-19L * std::max<long double>(1, std::abs(x))) break;
  }
  return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

}  // namespace

void RecurrenceSpec::validate() const {
  if (depth < 1) throw InputError("recurrence depth must be >= 1");
  bool deepest = false;
  for (const auto& t : terms) {
    if (t.lag < 1 || t.lag > depth) throw InputError("recurrence term lag outside 1..depth");
    if (t.shift < 0) throw InputError("recurrence term shift must be >= 0");
    if (t.lag == depth && t.coeff != 0) deepest = true;
  }
  if (!deepest) throw InputError("recurrence has no nonzero term at lag = depth");
  for (std::size_t i = 1; i < bases.size(); ++i)
    if (bases[i].index != bases[i - 1].index + 1)
      throw InputError("recurrence base indices must be consecutive");
}

AlphaBeta alpha_beta(const RecurrenceSpec& spec) {
  AlphaBeta ab;
  ab.alpha.assign(spec.depth, Rational(0));
  ab.beta.assign(spec.depth, Rational(0));
  for (const auto& t : spec.terms) {
    ab.alpha[t.lag - 1] += t.coeff;
    ab.beta[t.lag - 1] += t.coeff * t.shift;
  }
  return ab;
}

std::vector<Complex> characteristic_roots(const std::vector<double>& alpha) {
  const int d = static_cast<int>(alpha.size());
  std::vector<Complex> roots;
  if (d == 0) return roots;
  // Companion matrix of x^D - alpha_1 x^{D-1} - ... - alpha_D.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) companion(0, i) = alpha[i];
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto values = solver.eigenvalues();
  for (int i = 0; i < d; ++i) roots.push_back(polish(alpha, values[i]));
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

std::vector<Complex> characteristic_roots(const std::vector<Rational>& alpha) {
  std::vector<double> a;
  for (const auto& q : alpha) a.push_back(to_double(q));
  return characteristic_roots(a);
}

double dominant_root(const std::vector<Complex>& roots) {
  if (roots.empty()) throw InputError("no characteristic roots");
  const double top = std::abs(roots[0]);
  if (roots.size() > 1) {
    const double gap = top == 0 ? 0 : (top - std::abs(roots[1])) / top;
    if (gap < kDominanceGap)
      throw NonUniqueDominantRoot("no unique root of maximum modulus (relative gap " +
                                  std::to_string(gap) + ")");
  }
  if (std::abs(roots[0].imag()) > kImagTolerance)
    throw ComplexDominantRoot("dominant root is not real");
  return roots[0].real();
}

BaseCondition base_condition_check(const RecurrenceSpec& spec, double r) {
  const auto d = static_cast<std::size_t>(spec.depth);
  if (spec.bases.size() < d)
    throw InputError("base condition needs " + std::to_string(d) + " base profiles, have " +
                     std::to_string(spec.bases.size()));
  const auto ab = alpha_beta(spec);
  std::vector<double> t0;
  for (std::size_t i = 0; i < d; ++i) t0.push_back(to_double(spec.bases[i].profile.total()));
  double sum = 0;
  double scale = 1;
  for (std::size_t i = 0; i < d; ++i) {
    double term = t0[i];
    for (std::size_t j = 1; j <= i; ++j) term -= to_double(ab.alpha[j - 1]) * t0[i - j];
    sum += term / scale;
    scale *= r;
  }
  return {sum, std::abs(sum) > kBaseConditionTolerance};
}

AsymptoticResult analyze(const RecurrenceSpec& spec, const Rational& c) {
  spec.validate();
  AsymptoticResult out;
  const auto ab = alpha_beta(spec);
  out.alpha = ab.alpha;
  out.beta = ab.beta;
  out.all_roots = characteristic_roots(ab.alpha);
  out.limit = std::numeric_limits<double>::quiet_NaN();

  const auto& roots = out.all_roots;
  const double top = std::abs(roots[0]);
  out.hypothesis.multiplicity_one = true;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i] - roots[0]) <= kDominanceGap * std::max(1.0, top))
      out.hypothesis.multiplicity_one = false;
  try {
    out.dominant_root = dominant_root(roots);
    out.hypothesis.root_unique = true;
  } catch (const HypothesisError& e) {
    out.dominant_root = roots[0].real();
    out.failure = e.what();
    return out;
  }
  if (!out.hypothesis.multiplicity_one) {
    out.failure = "dominant root is repeated";
    return out;
  }

  const auto base = base_condition_check(spec, out.dominant_root);
  out.hypothesis.p_value = base.value;
  out.hypothesis.p_nonzero = base.nonzero;
  if (!base.nonzero) {
    out.failure = "base condition P(1/r, 1) vanishes";
    return out;
  }
  if (c <= 0) {
    out.failure = "growth constant c must be positive";
    return out;
  }

  const double r = out.dominant_root;
  double num = 0, den = 0;
  for (int i = 1; i <= spec.depth; ++i) {
    const double power = std::pow(r, spec.depth - i);
    num += to_double(ab.beta[i - 1]) * power;
    den += i * to_double(ab.alpha[i - 1]) * power;
  }
  out.limit = num / (to_double(c) * den);
  return out;
}

AsymptoticResult asymptotic_limit(const RecurrenceSpec& spec, const Rational& c) {
  auto out = analyze(spec, c);
  if (!out.hypothesis.root_unique) {
    const auto& top = out.all_roots.front();
    if (out.all_roots.size() > 1 &&
        std::abs(top) - std::abs(out.all_roots[1]) >= kDominanceGap * std::abs(top))
      throw ComplexDominantRoot(out.failure);
    throw NonUniqueDominantRoot(out.failure);
  }
  if (!out.hypothesis.all() || std::isnan(out.limit)) throw HypothesisError(out.failure);
  return out;
}

std::vector<SizeProfile> extend_sequence(const RecurrenceSpec& spec, int n_to) {
  spec.validate();
  if (spec.bases.size() < static_cast<std::size_t>(spec.depth))
    throw InputError("recurrence needs " + std::to_string(spec.depth) + " base profiles");
  const int first = spec.first_index();
  if (n_to < first)
    throw InputError("index " + std::to_string(n_to) + " is below the first base index " +
                     std::to_string(first));

  std::vector<std::vector<BigInt>> seq;
  for (const auto& b : spec.bases) seq.push_back(b.profile.counts());

  const bool integral = std::all_of(spec.terms.begin(), spec.terms.end(),
                                    [](const RecurrenceTerm& t) { return is_integral(t.coeff); });
  for (int n = first + static_cast<int>(seq.size()); n <= n_to; ++n) {
    const std::size_t at = n - first;
    std::size_t width = 0;
    for (const auto& t : spec.terms) {
      const auto& prev = seq[at - t.lag];
      if (!prev.empty()) width = std::max(width, prev.size() + t.shift);
    }
    std::vector<BigInt> next(width);
    if (integral) {
      for (const auto& t : spec.terms) {
        const BigInt a = numerator(t.coeff);
        const auto& prev = seq[at - t.lag];
        for (std::size_t k = 0; k < prev.size(); ++k)
          if (prev[k] != 0) next[k + t.shift] += a * prev[k];
      }
    } else {
      std::vector<Rational> acc(width);
      for (const auto& t : spec.terms) {
        const auto& prev = seq[at - t.lag];
        for (std::size_t k = 0; k < prev.size(); ++k) acc[k + t.shift] += t.coeff * prev[k];
      }
      for (std::size_t k = 0; k < width; ++k) {
        if (!is_integral(acc[k]))
          throw Error("recurrence produced a non-integer count at n = " + std::to_string(n));
        next[k] = numerator(acc[k]);
      }
    }
    seq.push_back(std::move(next));
  }

  std::vector<SizeProfile> out;
  for (std::size_t i = 0; i + first <= static_cast<std::size_t>(n_to); ++i)
    out.emplace_back(seq[i]);
  return out;
}

SizeProfile extend_profiles(const RecurrenceSpec& spec, int n_target) {
  return extend_sequence(spec, n_target).back();
}

Rational finite_ratio(const SizeProfile& profile, int nu) { return average_ratio(profile, nu); }

}  // namespace mmatch
