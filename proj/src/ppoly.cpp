#include "lastarrival/ppoly.hpp"

#include <algorithm>
#include <string>

#include "lastarrival/errors.hpp"
#include "lastarrival/numerics.hpp"

namespace lastarrival::ppoly {

std::uint64_t SymbolicPoly::coefficient_sum() const {
  std::uint64_t s = 0;
  for (const Term& t : terms) s += t.coefficient;
  return s;
}

SymbolicPoly build_symbolic(int n) {
  if (n < 1) throw DomainError("build_symbolic: n must be >= 1");
  if (n > kMaxSymbolicN)
    throw DomainError("build_symbolic: n = " + std::to_string(n) +
                      " exceeds the symbolic capacity of 12 (Catalan(" + std::to_string(n) +
                      ") terms would not fit in memory)");

  // factorials up to 12! fit easily in 64 bits
  std::uint64_t fact[kMaxSymbolicN + 1];
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);

  SymbolicPoly poly;
  poly.n = n;
  std::vector<int> expv(n, 0);

  // DFS over exponent vectors with prefix sums >= position; descending choice
  // per slot yields descending lexicographic term order directly.
  auto rec = [&](auto&& self, int pos, int left, int prefix) -> void {
    if (pos == n - 1) {
      // last exponent forced; prefix constraint at n is sum == n, auto-satisfied
      expv[pos] = left;
      std::uint64_t coeff = fact[n];
      for (int e : expv) coeff /= fact[e];
      poly.terms.push_back({expv, coeff});
      return;
    }
    int low = std::max(0, (pos + 1) - prefix);
    for (int e = left; e >= low; --e) {
      expv[pos] = e;
      self(self, pos + 1, left - e, prefix + e);
    }
    expv[pos] = 0;
  };
  rec(rec, 0, n, 0);
  return poly;
}

ExtendedScalar eval_symbolic(const SymbolicPoly& p, std::span<const ExtendedScalar> x) {
  if (static_cast<int>(x.size()) != p.n)
    throw DomainError("eval_symbolic: arity mismatch (poly has " + std::to_string(p.n) +
                      " variables, got " + std::to_string(x.size()) + ")");
  long prec = ExtendedScalar::kDefaultPrecision;
  for (const auto& xi : x) prec = std::max(prec, xi.precision());
  ExtendedScalar sum(prec);
  ExtendedScalar term(prec);
  for (const Term& t : p.terms) {
    term = ExtendedScalar(static_cast<long>(t.coefficient), prec);
    for (int i = 0; i < p.n; ++i) {
      if (t.exponents[i] == 0) continue;
      term *= pow_ui(x[i], static_cast<unsigned long>(t.exponents[i]));
    }
    sum += term;
  }
  return sum;
}

PrefixAccumulator::PrefixAccumulator(long precision_bits, EvalMode mode)
    : precision_(precision_bits),
      mode_(mode),
      slack_(exp10i(-25, precision_bits)) {
  values_.emplace_back(1L, precision_);
}

void PrefixAccumulator::append(const ExtendedScalar& x) {
  if (mode_ == EvalMode::probability && x.is_negative())
    throw DomainError("eval_prefix: negative interval length x_" +
                      std::to_string(size() + 1));
  ExtendedScalar c = cumulative_.empty() ? x.at_precision(precision_)
                                         : cumulative_.back() + x;
  if (mode_ == EvalMode::probability && c > ExtendedScalar(1L, precision_) + slack_)
    throw DomainError("eval_prefix: cumulative length exceeds 1 at x_" +
                      std::to_string(size() + 1));
  cumulative_.push_back(std::move(c));

  const int k = size();
  const ExtendedScalar one(1L, precision_);
  // sum_{i=1..k} C(k, i-1) (1 - c_i)^{k-i+1} P_{i-1}
  ExtendedScalar sum(precision_);
  ExtendedScalar binc(1L, precision_);  // C(k, i-1), updated incrementally
  for (int i = 1; i <= k; ++i) {
    ExtendedScalar t = pow_ui(one - cumulative_[i - 1],
                              static_cast<unsigned long>(k - i + 1));
    t *= binc;
    t *= values_[i - 1];
    sum += t;
    // C(k, i) = C(k, i-1) * (k-i+1) / i
    binc.mul_ui(static_cast<unsigned long>(k - i + 1));
    binc.div_ui(static_cast<unsigned long>(i));
  }
  values_.push_back(one - sum);
}

PrefixEvaluation eval_prefix(std::span<const ExtendedScalar> x, EvalMode mode) {
  long prec = ExtendedScalar::kDefaultPrecision;
  for (const auto& xi : x) prec = std::max(prec, xi.precision());
  PrefixAccumulator acc(prec, mode);
  PrefixEvaluation out;
  out.inputs.assign(x.begin(), x.end());
  for (const auto& xi : x) acc.append(xi);
  out.values.reserve(x.size() + 1);
  for (int k = 0; k <= static_cast<int>(x.size()); ++k) out.values.push_back(acc.value(k));
  return out;
}

}  // namespace lastarrival::ppoly
