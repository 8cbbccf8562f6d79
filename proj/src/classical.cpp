#include "raclab/classical.hpp"

#include <numeric>

#include "raclab/errors.hpp"
#include "raclab/parallel.hpp"

namespace raclab {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    require(d > 0, "Rational: denominator must be positive");
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

namespace {

void require_valid_classical(const ClassicalStrategy& s, const Scenario& scenario) {
    validate(scenario);
    require(s.scenario == scenario, "classical_value: strategy scenario mismatch");
    const std::size_t inputs = pow_size(scenario.d, scenario.n);
    require(s.encoder.size() == inputs, "classical strategy: wrong encoder size");
    require(s.decoders.size() == scenario.n, "classical strategy: wrong decoder count");
    for (std::size_t m : s.encoder) require(m < scenario.d, "classical strategy: message out of range");
    for (const auto& decoder : s.decoders) {
        require(decoder.size() == scenario.d, "classical strategy: wrong decoder size");
        for (std::size_t g : decoder) require(g < scenario.d, "classical strategy: guess out of range");
    }
}

}  // namespace

Rational classical_value(const ClassicalStrategy& s, const Scenario& scenario) {
    require_valid_classical(s, scenario);
    const std::size_t inputs = pow_size(scenario.d, scenario.n);
    std::int64_t hits = 0;
    for (std::size_t input = 0; input < inputs; ++input) {
        const std::size_t message = s.encoder[input];
        for (std::size_t y = 0; y < scenario.n; ++y)
            if (s.decoders[y][message] == digit(input, y, scenario.d)) ++hits;
    }
    return Rational(hits, static_cast<std::int64_t>(scenario.n) * static_cast<std::int64_t>(inputs));
}

std::uint64_t classical_work_estimate(const Scenario& scenario) {
    validate(scenario);
    const std::uint64_t inputs = pow_size(scenario.d, scenario.n);
    // Multisets of size d over d^n columns: C(d^n + d - 1, d), then d^n
    // inputs x d messages x n settings of scoring per tuple.
    long double tuples = 1.0L;
    for (std::uint64_t i = 0; i < scenario.d; ++i)
        tuples = tuples * static_cast<long double>(inputs + scenario.d - 1 - i) / static_cast<long double>(i + 1);
    const long double total = tuples * static_cast<long double>(inputs) *
                              static_cast<long double>(scenario.d) * static_cast<long double>(scenario.n);
    if (total > 1.8e19L) return UINT64_MAX;
    return static_cast<std::uint64_t>(total);
}

ClassicalOptimum classical_optimum(const Scenario& scenario) {
    validate(scenario);
    const std::uint64_t estimate = classical_work_estimate(scenario);
    if (estimate > kWorkCap)
        throw InstanceTooLarge("classical_optimum: instance too large (estimated " +
                               std::to_string(estimate) + " inner evaluations, cap " +
                               std::to_string(kWorkCap) + ")");

    const std::size_t n = scenario.n;
    const std::size_t d = scenario.d;
    const std::size_t inputs = pow_size(d, n);   // data strings, also column alphabet
    const std::size_t columns = inputs;          // a column packs one guess per setting

    // score[c][input]: settings y whose guess digit(c, y) matches the input.
    std::vector<std::vector<std::uint8_t>> score(columns, std::vector<std::uint8_t>(inputs, 0));
    for (std::size_t c = 0; c < columns; ++c)
        for (std::size_t input = 0; input < inputs; ++input) {
            std::uint8_t hits = 0;
            for (std::size_t y = 0; y < n; ++y)
                if (digit(c, y, d) == digit(input, y, d)) ++hits;
            score[c][input] = hits;
        }

    struct Best {
        std::int64_t hits = -1;
        std::vector<std::size_t> columns;  // the sorted tuple achieving it
    };

    // Partition by the first (smallest) column of the sorted tuple; the
    // tuple visit order inside a task is lexicographic, so "first best
    // found" is deterministic regardless of thread count.
    std::vector<Best> per_task(columns);
    parallel_tasks(columns, [&](std::size_t first_column) {
        Best& best = per_task[first_column];
        std::vector<std::size_t> tuple(d);
        tuple[0] = first_column;

        // Depth-first over non-decreasing suffixes.
        auto visit = [&](auto&& self, std::size_t position) -> void {
            if (position == d) {
                std::int64_t hits = 0;
                for (std::size_t input = 0; input < inputs; ++input) {
                    std::uint8_t top = 0;
                    for (std::size_t m = 0; m < d; ++m)
                        top = std::max(top, score[tuple[m]][input]);
                    hits += top;
                }
                if (hits > best.hits) {
                    best.hits = hits;
                    best.columns = tuple;
                }
                return;
            }
            for (std::size_t c = tuple[position - 1]; c < columns; ++c) {
                tuple[position] = c;
                self(self, position + 1);
            }
        };
        visit(visit, 1);
    });

    Best best;
    for (const Best& candidate : per_task)
        if (candidate.hits > best.hits) best = candidate;  // earlier task wins ties

    // Decoders from the winning columns; encoder = best message per input,
    // smallest message on ties.
    ClassicalStrategy witness;
    witness.scenario = scenario;
    witness.decoders.assign(n, std::vector<std::size_t>(d, 0));
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t y = 0; y < n; ++y) witness.decoders[y][m] = digit(best.columns[m], y, d);
    witness.encoder.resize(inputs);
    for (std::size_t input = 0; input < inputs; ++input) {
        std::size_t arg = 0;
        std::uint8_t top = score[best.columns[0]][input];
        for (std::size_t m = 1; m < d; ++m)
            if (score[best.columns[m]][input] > top) {
                top = score[best.columns[m]][input];
                arg = m;
            }
        witness.encoder[input] = arg;
    }

    ClassicalOptimum out;
    out.value = Rational(best.hits, static_cast<std::int64_t>(n) * static_cast<std::int64_t>(inputs));
    out.witness = std::move(witness);
    return out;
}

Rational classical_analytic_n2(std::size_t d) {
    require(d >= 2, "classical_analytic_n2: d must be >= 2");
    return Rational(static_cast<std::int64_t>(d) + 1, 2 * static_cast<std::int64_t>(d));
}

}  // namespace raclab
