#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "raclab/classical.hpp"
#include "raclab/concat.hpp"
#include "raclab/earac.hpp"
#include "raclab/qcrac.hpp"
#include "raclab/seesaw.hpp"

namespace raclab {

using Json = nlohmann::ordered_json;

// Wire schema (stable; tests pin the round trip):
//   complex        [re, im]
//   matrix         {"rows", "cols", "entries": [complex...] row-major}
//   ket            {"dim", "amplitudes": [complex...]}
//   povm           [matrix...]
//   family         [povm...]
//   strategy       {"state", "alice", "bob"}
//   protocol       {"scenario": {"n","d"}, "preparations", "measurements"}
// Probabilities reported to humans go through format_probability (12
// significant digits) so identical runs emit byte-identical documents.

Json to_json(const ComplexMatrix& m);
Json to_json(const Ket& k);
Json to_json(const Povm& p);
Json to_json(const MeasurementFamily& f);
Json to_json(const BipartiteStrategy& s);
Json to_json(const PrepareAndMeasureProtocol& p);
Json to_json(const SeesawResult& r);
Json to_json(const ClassicalStrategy& s);
Json to_json(const Scenario& s);
Json to_json(const OutcomeDistribution& d);

ComplexMatrix matrix_from_json(const Json& j);
Ket ket_from_json(const Json& j);
Povm povm_from_json(const Json& j);
MeasurementFamily family_from_json(const Json& j);
BipartiteStrategy strategy_from_json(const Json& j);
PrepareAndMeasureProtocol protocol_from_json(const Json& j);
ClassicalStrategy classical_strategy_from_json(const Json& j);
Scenario scenario_from_json(const Json& j);

std::string format_probability(double value);  // 12 significant digits

// One CLI invocation's machine-readable result. `values` carries named
// probabilities (decimal strings, plus exact rationals where available);
// witnesses are full strategies that recompute to the reported values.
struct RunReport {
    std::string command;
    Scenario scenario{0, 0};
    Json values = Json::object();
    Json witness;  // null when the command has no witness
    std::uint64_t seed = 0;
    std::string version;
    double timing_seconds = 0.0;
};

Json to_json(const RunReport& r);
RunReport report_from_json(const Json& j);

}  // namespace raclab
