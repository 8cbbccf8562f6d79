#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raclab/scenario.hpp"

namespace raclab {

// Exact nonnegative rational; classical success probabilities are counts
// over n * d^n, so there is never a reason to round them.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);  // reduces, requires d > 0

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    bool operator==(const Rational&) const = default;
};

// Deterministic strategy: one message per data string, one guess table per
// Bob setting. Shared randomness is a convex mixture of these, so the
// deterministic optimum is the classical optimum.
struct ClassicalStrategy {
    Scenario scenario;
    std::vector<std::size_t> encoder;               // d^n entries, values < d
    std::vector<std::vector<std::size_t>> decoders;  // n tables of d entries, values < d
};

struct ClassicalOptimum {
    Rational value;
    ClassicalStrategy witness;
};

// Exact success probability of a given strategy.
Rational classical_value(const ClassicalStrategy& s, const Scenario& scenario);

// Exact maximum over all deterministic strategies. Decoder tuples are
// enumerated as a sorted multiset of message columns (the value is
// invariant under joint message relabeling, and only the multiset of
// per-message guess columns matters), with the encoder chosen optimally
// per input given the decoders. Refuses instances whose estimated work
// exceeds kWorkCap inner evaluations.
ClassicalOptimum classical_optimum(const Scenario& scenario);

inline constexpr std::uint64_t kWorkCap = 5'000'000'000ULL;

// Estimated inner evaluations for classical_optimum; what the work cap
// checks.
std::uint64_t classical_work_estimate(const Scenario& scenario);

// (d + 1)/(2d), the exact two-dit classical optimum.
Rational classical_analytic_n2(std::size_t d);

}  // namespace raclab
