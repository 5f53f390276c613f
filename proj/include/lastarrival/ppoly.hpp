#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lastarrival/extended.hpp"

namespace lastarrival::ppoly {

/// One monomial of P_n: exponents e_1..e_n (summing to n) and its positive
/// integer coefficient n! / (e_1! ... e_n!).
struct Term {
  std::vector<int> exponents;
  std::uint64_t coefficient;
};

/// Explicit monomial form of P_n. Feasible only for small n: the term count
/// is the n-th Catalan number. Serves as the reference oracle for every
/// numeric evaluation path.
struct SymbolicPoly {
  int n = 0;
  std::vector<Term> terms;

  std::uint64_t coefficient_sum() const;
};

inline constexpr int kMaxSymbolicN = 12;

/// All monomials of P_n in descending lexicographic exponent order.
/// A monomial is present iff every exponent prefix sum satisfies
/// e_1 + ... + e_i >= i. Throws for n outside [1, 12]: at n = 13 the term
/// count (Catalan) exceeds 7 * 10^5 and keeps quadrupling.
SymbolicPoly build_symbolic(int n);

/// Direct monomial summation in the stored term order.
ExtendedScalar eval_symbolic(const SymbolicPoly& p, std::span<const ExtendedScalar> x);

enum class EvalMode {
  probability,  // inputs are interval lengths: x_i >= 0, sum <= 1 (+ slack)
  polynomial,   // pure polynomial identity, no range checks
};

/// Values P_0(x_1..x_0) .. P_n(x_1..x_n) for the inputs' prefixes.
struct PrefixEvaluation {
  std::vector<ExtendedScalar> inputs;
  std::vector<ExtendedScalar> values;  // size inputs.size() + 1, values[0] = 1

  int n() const { return static_cast<int>(inputs.size()); }
  const ExtendedScalar& last() const { return values.back(); }
};

/// Incremental evaluator behind eval_prefix. Appending x_{k} costs O(k):
/// P_k = 1 - sum_{i=1..k} C(k, i-1) (1-c_i)^{k-i+1} P_{i-1} with c_i the
/// cumulative sums (condition on the first staircase index where fewer than
/// i points lie below c_i; exactly i-1 do, and they follow P_{i-1}).
class PrefixAccumulator {
 public:
  explicit PrefixAccumulator(long precision_bits = ExtendedScalar::kDefaultPrecision,
                             EvalMode mode = EvalMode::probability);

  void append(const ExtendedScalar& x);
  int size() const { return static_cast<int>(cumulative_.size()); }
  /// P_k for 0 <= k <= size().
  const ExtendedScalar& value(int k) const { return values_[k]; }
  const ExtendedScalar& cumulative(int i) const { return cumulative_[i - 1]; }

 private:
  long precision_;
  EvalMode mode_;
  ExtendedScalar slack_;
  std::vector<ExtendedScalar> cumulative_;
  std::vector<ExtendedScalar> values_;
};

/// Evaluates all prefixes of x. Throws DomainError on negative inputs or
/// cumulative sum above 1 + 10^-25 in probability mode; both checks are
/// lifted in polynomial mode (used by the (n+1)^(n-1) identity tests).
PrefixEvaluation eval_prefix(std::span<const ExtendedScalar> x,
                             EvalMode mode = EvalMode::probability);

}  // namespace lastarrival::ppoly
