#pragma once

#include <cstdint>
#include <vector>

#include "raclab/serialize.hpp"

namespace raclab {

// Report builders behind the CLI subcommands. Pure functions of their
// arguments (plus the seed), so identical invocations serialize to
// byte-identical documents up to the timing field, which the callers stamp.

RunReport report_qcrac(std::size_t d);
RunReport report_classical(std::size_t n, std::size_t d);
RunReport report_earac_explicit();
RunReport report_seesaw(std::size_t n, std::size_t d, std::size_t restarts, std::uint64_t seed,
                        bool include_witness = true);
RunReport report_concat();

// One report per benchmark row: exact classical value, prepare-and-measure
// value (computed for the two-dit rows, carried reference for (3,3)),
// see-saw lower bound, and the hierarchy upper bound as a labeled
// reference. Row failures (for example a work-cap refusal) are recorded in
// the row's values instead of aborting the batch.
std::vector<RunReport> report_table1(std::uint64_t seed, std::size_t restarts);

// Table layout in CSV for side-by-side comparison; built from the reports.
std::string table1_csv(const std::vector<RunReport>& rows);
std::string table1_pretty(const std::vector<RunReport>& rows);

}  // namespace raclab
