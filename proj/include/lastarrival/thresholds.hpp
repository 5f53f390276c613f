#pragma once

#include <optional>
#include <vector>

#include "lastarrival/extended.hpp"

namespace lastarrival::thresholds {

/// Selector strategy: accept the k-th arriving item iff it arrives after
/// time a_k. A finite head a_1..a_m, optionally extended by the harmonic
/// rule a_n = 1 - 1/n for n >= harmonic_from.
struct ThresholdStrategy {
  std::vector<ExtendedScalar> head;
  std::optional<int> harmonic_from;  // 1-based; requires head.size() == harmonic_from - 1
  long precision = ExtendedScalar::kDefaultPrecision;

  /// a_k (1-based). Throws DomainError past the horizon.
  ExtendedScalar at(int k) const;
  /// Largest n with defined a_n; INT_MAX with a harmonic tail.
  int horizon() const;
  /// a_1 <= a_2 <= ... <= a_n (empty strategies are vacuously monotone).
  bool nondecreasing_through(int n) const;
  /// Materializes a_1..a_n as a vector.
  std::vector<ExtendedScalar> prefix(int n) const;

  static ThresholdStrategy from_head(std::vector<ExtendedScalar> head);
  /// The odds-heuristic thresholds a_k = 1 - 1/(k+1), materialized to max_n.
  static ThresholdStrategy odds(int max_n, long precision_bits = ExtendedScalar::kDefaultPrecision);
};

/// Upper-bound sequence b_n with continuously updated running minima beta.
struct BoundSequence {
  ExtendedScalar theta;
  std::optional<int> window;             // nullopt = exact form throughout
  std::vector<ExtendedScalar> b;         // b_1.. (stops at failure)
  std::vector<ExtendedScalar> beta;      // beta_i = min_{i<=j<=current} b_j
  std::vector<bool> lowered_earlier;     // step n lowered at least one earlier beta
  std::optional<int> failed_at;          // first n with b_n < 0 (or non-positive denominator)

  bool ok() const { return !failed_at.has_value(); }
};

/// Probability that a strategy accepts none of n items:
/// P_n(alpha-differences) with alpha_{i,n} = min_{i<=j<=n} a_j.
ExtendedScalar nonacceptance_prob(const ThresholdStrategy& s, int n);

/// Exact success probability at n items for a nondecreasing head:
/// n (1 - a_n) P_{n-1}(a_1, a_2-a_1, ...); 1 - a_1 for n = 1.
/// Refuses non-monotone heads (the product form is only an upper bound there).
ExtendedScalar win_prob_exact(const ThresholdStrategy& s, int n);

/// Exact success probability at n for arbitrary thresholds: the staircase
/// probability with cutoffs (a_1..a_{n-1}, 1) minus the one with cutoffs
/// (a_1..a_{n-1}, a_n); both sides evaluated through running minima.
ExtendedScalar win_prob_any(const ThresholdStrategy& s, int n);

/// The b_n recursion: b_n = 1 - theta / (n * S_{n-1}) where S_{n-1} is
/// P_{n-1} on beta-differences (exact), or the window-truncated bound for
/// n >= window + 2. Stops at the first b_n < 0.
BoundSequence upper_bounds(const ExtendedScalar& theta, int horizon,
                           std::optional<int> window);

/// The nondecreasing a_n recursion (exact for n <= window+1, windowed with
/// the correction factor afterwards). Throws MonotonicityError on a
/// decreasing step and RecursionFailure on a non-positive denominator.
ThresholdStrategy lower_strategy(const ExtendedScalar& theta, int horizon,
                                 std::optional<int> window);

/// Same recursion, returning the computed prefix instead of throwing.
struct LowerRun {
  std::vector<ExtendedScalar> a;
  std::optional<int> failed_at;
  bool monotonicity_failure = false;  // else denominator failure
};
LowerRun lower_strategy_run(const ExtendedScalar& theta, int horizon,
                            std::optional<int> window);

/// Four-condition lower bound on the success probability at n >= window+2
/// for a nondecreasing strategy. Guaranteed <= win_prob_exact.
ExtendedScalar lower_bound_winprob(const ThresholdStrategy& s, int n, int window);

/// Canonical thresholds at a prescribed theta: each a_k set so the exact
/// success probability at n = k equals theta (capped-root solve when the
/// unconstrained value would fall below a_{k-1}).
struct CanonicalRun {
  std::vector<ExtendedScalar> a;
  std::optional<int> stuck_at;  // first k where even a_k = 0 wins less than theta
};
CanonicalRun canonical_thresholds(const ExtendedScalar& theta, int N);

/// Value theta_N of the N-restricted game: the theta at which the canonical
/// recursion reaches a_N = 0, found by bisection to |a_N| < tol.
ExtendedScalar theta_restricted(int N, const ExtendedScalar& tol);

}  // namespace lastarrival::thresholds
