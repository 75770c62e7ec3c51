// Copyright 2026 The bflab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bflab/constructions.hpp"
#include "bflab/function.hpp"
#include "bflab/measures.hpp"
#include "bflab/rational.hpp"
#include "bflab/report.hpp"
#include "bflab/restriction.hpp"

namespace bflab {

/// Seeded uniform sampling of restrictions with a fixed free count.
struct SampleSpec {
  std::uint64_t seed = 1;
  std::uint64_t trials = 1;
};

struct CondensationQuery {
  StructuredFunction function;
  MeasureKind measure;
  int free_budget = 0;
  std::optional<SampleSpec> sample;  ///< nullopt: exhaustive
};

struct CondensationResult {
  int value = 0;
  Restriction witness;
  bool exhaustive = true;
  std::uint64_t examined = 0;
  SampleSpec sample;

  /// Exhaustive results are exact maxima; sampled ones are lower bounds.
  std::string mode_label() const {
    return exhaustive ? "exhaustive"
                      : "sampled lower bound (seed " + std::to_string(sample.seed) + ", trials " +
                            std::to_string(sample.trials) + ")";
  }
};

/// Measure values of restricted tables, memoized on the table contents.
class MeasureCache {
 public:
  MeasureCache(MeasureKind kind, const Limits& limits) : kind_(kind), limits_(limits) {}

  int operator()(const DenseTruthTable& t) {
    std::string key(reinterpret_cast<const char*>(t.words().data()), t.words().size() * sizeof(std::uint64_t));
    key.push_back(static_cast<char>(t.arity()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int v = compute_measure(t, kind_, limits_);
    memo_.emplace(std::move(key), v);
    return v;
  }

 private:
  MeasureKind kind_;
  Limits limits_;
  std::unordered_map<std::string, int> memo_;
};

namespace detail {

/// Uniform free set by partial Fisher-Yates plus uniform fixed bits, from raw
/// mt19937_64 output so the stream is identical on every platform.
inline void random_restriction(std::mt19937_64& rng, int arity, int free_count, std::uint64_t& free,
                               std::uint64_t& ones) {
  int pos[64];
  for (int i = 0; i < arity; ++i) pos[i] = i;
  free = 0;
  for (int i = 0; i < free_count; ++i) {
    const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(arity - i));
    std::swap(pos[i], pos[j]);
    free |= std::uint64_t{1} << pos[i];
  }
  ones = rng() & ~free & low_mask(arity);
}

struct ScanOutcome {
  int best = -1;
  std::uint64_t best_index = 0;
  std::uint64_t best_free = 0;
  std::uint64_t best_ones = 0;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  std::uint64_t first_violation_index = UINT64_MAX;
  std::uint64_t first_violation_free = 0;
  std::uint64_t first_violation_ones = 0;
  int first_violation_value = 0;

  void absorb(int v, std::uint64_t index, std::uint64_t free, std::uint64_t ones, bool violates) {
    ++examined;
    if (v > best || (v == best && index < best_index)) {
      best = v;
      best_index = index;
      best_free = free;
      best_ones = ones;
    }
    if (violates) {
      ++violations;
      if (index < first_violation_index) {
        first_violation_index = index;
        first_violation_free = free;
        first_violation_ones = ones;
        first_violation_value = v;
      }
    }
  }

  void merge(const ScanOutcome& o) {
    if (o.best > best || (o.best == best && o.best_index < best_index)) {
      best = o.best;
      best_index = o.best_index;
      best_free = o.best_free;
      best_ones = o.best_ones;
    }
    examined += o.examined;
    violations += o.violations;
    if (o.first_violation_index < first_violation_index) {
      first_violation_index = o.first_violation_index;
      first_violation_free = o.first_violation_free;
      first_violation_ones = o.first_violation_ones;
      first_violation_value = o.first_violation_value;
    }
  }
};

/// Measures f|rho for every rho in the exhaustive order (or the seeded
/// sample). Items are dealt round-robin to `jobs` workers; merging keeps the
/// earliest index among equal maxima, so the result does not depend on jobs.
inline ScanOutcome scan_restrictions(const DenseTruthTable& f, int free_count, MeasureKind kind,
                                     const std::optional<SampleSpec>& sample, const Limits& limits, int jobs,
                                     const std::function<bool(int)>& violates) {
  if (free_count < 0 || free_count > f.arity()) {
    throw InputShapeError("free budget " + std::to_string(free_count) + " outside [0, " +
                          std::to_string(f.arity()) + "]");
  }
  if (sample && sample->trials < 1) throw InputShapeError("sample trials must be >= 1");
  if (!sample) (void)RestrictionEnumerator(f.arity(), free_count, limits);  // budget check up front
  jobs = std::max(1, jobs);
  std::vector<ScanOutcome> outcomes(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  auto worker = [&](int tid) {
    try {
      MeasureCache cache(kind, limits);
      auto& out = outcomes[static_cast<std::size_t>(tid)];
      auto visit = [&](std::uint64_t index, std::uint64_t free, std::uint64_t ones) {
        const int v = cache(restrict_table_masks(f, free, ones));
        out.absorb(v, index, free, ones, violates && violates(v));
      };
      if (sample) {
        std::mt19937_64 rng(sample->seed);
        for (std::uint64_t i = 0; i < sample->trials; ++i) {
          std::uint64_t free = 0;
          std::uint64_t ones = 0;
          random_restriction(rng, f.arity(), free_count, free, ones);
          if (static_cast<int>(i % static_cast<std::uint64_t>(jobs)) == tid) visit(i, free, ones);
        }
      } else {
        RestrictionEnumerator en(f.arity(), free_count, limits);
        std::uint64_t free = 0;
        std::uint64_t ones = 0;
        for (std::uint64_t i = 0; en.next_masks(free, ones); ++i) {
          if (static_cast<int>(i % static_cast<std::uint64_t>(jobs)) == tid) visit(i, free, ones);
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(tid)] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ScanOutcome total;
  for (const auto& o : outcomes) total.merge(o);
  return total;
}

}  // namespace detail

/// Maximum of measure(f|rho) over restrictions with exactly free_budget free cells.
inline CondensationResult max_measure_over_restrictions(const CondensationQuery& q, const Limits& limits = {},
                                                        int jobs = 1) {
  const DenseTruthTable f = materialize(q.function, limits);
  const auto out = detail::scan_restrictions(f, q.free_budget, q.measure, q.sample, limits, jobs, {});
  CondensationResult r;
  r.value = std::max(out.best, 0);
  r.witness = Restriction::from_masks(f.arity(), out.best_free, out.best_ones);
  r.exhaustive = !q.sample.has_value();
  r.examined = out.examined;
  if (q.sample) r.sample = *q.sample;
  return r;
}

struct ProfileRow {
  int budget = 0;
  std::optional<CondensationResult> result;
  std::string error;  ///< set when the row could not be computed
};

inline std::vector<ProfileRow> condensation_profile(const StructuredFunction& f, MeasureKind kind,
                                                    std::span<const int> budgets,
                                                    const std::optional<SampleSpec>& sample = std::nullopt,
                                                    const Limits& limits = {}, int jobs = 1) {
  std::vector<ProfileRow> rows;
  for (int t : budgets) {
    ProfileRow row;
    row.budget = t;
    try {
      row.result = max_measure_over_restrictions({f, kind, t, sample}, limits, jobs);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Restrictions of the Rubinstein base function.

struct LemmaViolation {
  Restriction rho;
  int c0 = 0;
  int bs0 = 0;
};

struct BaseLemmaCheck {
  int b = 0;
  int n = 0;
  std::uint64_t restrictions = 0;
  std::uint64_t nonconstant = 0;
  int max_c0 = 0;
  int max_bs0 = 0;
  std::vector<LemmaViolation> c0_violations;
  std::vector<LemmaViolation> bs0_violations;

  bool holds() const noexcept { return c0_violations.empty() && bs0_violations.empty(); }
};

/// For every non-constant g|rho with r free cells:
/// C0(g|rho) <= max(2, r/b) and bs0(g|rho) <= max(1, r/b), compared exactly.
inline BaseLemmaCheck check_base_restriction_lemmas(int b, int n, const Limits& limits = {}) {
  if (b < 1 || n < 1) throw InputShapeError("b and n must be >= 1");
  const int arity = b * n;
  require_within(arity, std::min(limits.bs_cap, limits.cert_cap), "base restriction lemmas");
  std::uint64_t total = 1;
  for (int i = 0; i < arity; ++i) total *= 3;
  if (total > limits.enumeration_budget) {
    throw CapacityError("base restriction lemmas need " + std::to_string(total) + " restrictions",
                        limits.enumeration_budget);
  }
  const DenseTruthTable g = materialize(rubinstein_base(b, n), limits);
  BaseLemmaCheck out;
  out.b = b;
  out.n = n;
  for (int r = 0; r <= arity; ++r) {
    RestrictionEnumerator en(arity, r, limits);
    std::uint64_t free = 0;
    std::uint64_t ones = 0;
    const Rational ratio(r, b);
    const Rational c0_bound = max(Rational(2), ratio);
    const Rational bs0_bound = max(Rational(1), ratio);
    while (en.next_masks(free, ones)) {
      ++out.restrictions;
      const DenseTruthTable h = restrict_table_masks(g, free, ones);
      if (h.is_constant()) continue;
      ++out.nonconstant;
      const int c0 = certificate(h, ValueTag::OnZeros, limits);
      const int bs0 = block_sensitivity(h, ValueTag::OnZeros, limits);
      out.max_c0 = std::max(out.max_c0, c0);
      out.max_bs0 = std::max(out.max_bs0, bs0);
      const auto rho = [&] { return Restriction::from_masks(arity, free, ones); };
      if (Rational(c0) > c0_bound) out.c0_violations.push_back({rho(), c0, bs0});
      if (Rational(bs0) > bs0_bound) out.bs0_violations.push_back({rho(), c0, bs0});
    }
  }
  return out;
}

// Restrictions of the modified Rubinstein function.

/// Closed-form per-case bound with constant 1: the 1-side is b*n, the 0-side
/// is t/b + r for bs and t/b + 2r for C.
inline Rational incondensability_bound(const RubinsteinParams& p, int free_budget, Measure measure) {
  const Rational zero_side = Rational(free_budget, p.b) + Rational(measure == Measure::Certificate ? 2 * p.r : p.r);
  return max(zero_side, Rational(p.b * p.n));
}

struct IncondensabilityCheck {
  RubinsteinParams params;
  int free_budget = 0;
  Measure measure = Measure::BlockSensitivity;
  Rational bound;
  int max_observed = 0;
  Restriction witness;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  std::optional<Restriction> first_violation;
  bool exhaustive = true;
  SampleSpec sample;

  bool holds() const noexcept { return violations == 0; }
};

/// Exhaustive when the full arity is at most `exhaustive_arity`, else sampled.
inline IncondensabilityCheck check_incondensability(const RubinsteinParams& p, int free_budget, Measure measure,
                                                    std::optional<SampleSpec> sample = std::nullopt,
                                                    const Limits& limits = {}, int jobs = 1,
                                                    int exhaustive_arity = 9) {
  if (measure != Measure::BlockSensitivity && measure != Measure::Certificate) {
    throw UsageError("incondensability is checked for bs and C only");
  }
  if (!sample && p.arity() > exhaustive_arity) sample = SampleSpec{1, 100000};
  const DenseTruthTable f = materialize(modified_rubinstein(p), limits);
  IncondensabilityCheck out;
  out.params = p;
  out.free_budget = free_budget;
  out.measure = measure;
  out.bound = incondensability_bound(p, free_budget, measure);
  const Rational bound = out.bound;
  const auto scan = detail::scan_restrictions(f, free_budget, MeasureKind(measure), sample, limits, jobs,
                                              [bound](int v) { return Rational(v) > bound; });
  out.max_observed = std::max(scan.best, 0);
  out.witness = Restriction::from_masks(f.arity(), scan.best_free, scan.best_ones);
  out.examined = scan.examined;
  out.violations = scan.violations;
  if (scan.violations) {
    out.first_violation = Restriction::from_masks(f.arity(), scan.first_violation_free, scan.first_violation_ones);
  }
  out.exhaustive = !sample.has_value();
  if (sample) out.sample = *sample;
  return out;
}

// Optimality of the parameterized family with b = n^alpha, r = n^beta.

struct OptimalityPoint {
  Rational alpha;
  Rational beta;
  friend bool operator==(const OptimalityPoint&, const OptimalityPoint&) = default;
};

/// max(alpha+1, beta+1) / max(1, beta, alpha+1, beta+1-alpha).
inline Rational optimality_exponent(const OptimalityPoint& p) {
  if (p.alpha < Rational(0) || p.beta < Rational(0)) throw InputShapeError("alpha and beta must be >= 0");
  const Rational one(1);
  const Rational num = max(p.alpha + one, p.beta + one);
  const Rational den = max(max(one, p.beta), max(p.alpha + one, p.beta + one - p.alpha));
  return num / den;
}

struct OptimalityGridResult {
  Rational value;
  std::vector<OptimalityPoint> argmax;  ///< ascending by (alpha, beta)
  std::uint64_t points = 0;
};

/// Evaluates the closed grid {0, step, 2*step, ...} up to max_exponent on both axes.
inline OptimalityGridResult optimality_grid(Rational step, Rational max_exponent) {
  if (step <= Rational(0)) throw InputShapeError("grid step must be > 0");
  if (max_exponent < Rational(0)) throw InputShapeError("grid range must be >= 0");
  std::vector<Rational> axis;
  for (Rational v(0); v <= max_exponent; v = v + step) axis.push_back(v);
  OptimalityGridResult out;
  bool first = true;
  for (const auto& a : axis) {
    for (const auto& b : axis) {
      const OptimalityPoint pt{a, b};
      const Rational v = optimality_exponent(pt);
      ++out.points;
      if (first || v > out.value) {
        out.value = v;
        out.argmax = {pt};
        first = false;
      } else if (v == out.value) {
        out.argmax.push_back(pt);
      }
    }
  }
  return out;
}

// Fourier sparsity under restriction.

struct SparsitySearchResult {
  bool found = false;
  std::optional<Restriction> witness;
  int target = 0;  ///< sparsity of the unrestricted function
  std::uint64_t examined = 0;
};

/// First restriction, by free count then enumeration order, with at most
/// `budget` free cells whose restricted function keeps f's sparsity.
inline SparsitySearchResult sparsity_condensation_search(const StructuredFunction& fn, int budget,
                                                         const Limits& limits = {}) {
  const DenseTruthTable f = materialize(fn, limits);
  if (budget < 0 || budget > f.arity()) {
    throw InputShapeError("budget " + std::to_string(budget) + " outside [0, " + std::to_string(f.arity()) + "]");
  }
  SparsitySearchResult out;
  out.target = fourier_sparsity(f, limits);
  MeasureCache cache(Measure::FourierSparsity, limits);
  for (int t = 0; t <= budget; ++t) {
    RestrictionEnumerator en(f.arity(), t, limits);
    std::uint64_t free = 0;
    std::uint64_t ones = 0;
    while (en.next_masks(free, ones)) {
      ++out.examined;
      if (cache(restrict_table_masks(f, free, ones)) == out.target) {
        out.found = true;
        out.witness = Restriction::from_masks(f.arity(), free, ones);
        return out;
      }
    }
  }
  return out;
}

}  // namespace bflab
