#include "raclab/serialize.hpp"

#include <cstdio>

#include "raclab/errors.hpp"

namespace raclab {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    require(j.is_array() && j.size() == 2, "json: complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (const auto& e : m.entries) entries.push_back(complex_to_json(e));
    return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    ComplexMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const Json& entries = j.at("entries");
    require(entries.size() == m.entries.size(), "json: matrix entry count mismatch");
    for (std::size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = complex_from_json(entries[i]);
    return m;
}

Json to_json(const Ket& k) {
    Json amplitudes = Json::array();
    for (const auto& a : k.amplitudes) amplitudes.push_back(complex_to_json(a));
    return Json{{"dim", k.dim}, {"amplitudes", std::move(amplitudes)}};
}

Ket ket_from_json(const Json& j) {
    Ket k(j.at("dim").get<std::size_t>());
    const Json& amplitudes = j.at("amplitudes");
    require(amplitudes.size() == k.dim, "json: ket amplitude count mismatch");
    for (std::size_t i = 0; i < k.dim; ++i) k[i] = complex_from_json(amplitudes[i]);
    return k;
}

Json to_json(const Povm& p) {
    Json out = Json::array();
    for (const auto& element : p) out.push_back(to_json(element));
    return out;
}

Povm povm_from_json(const Json& j) {
    Povm p;
    for (const auto& element : j) p.push_back(matrix_from_json(element));
    return p;
}

Json to_json(const MeasurementFamily& f) {
    Json out = Json::array();
    for (const auto& povm : f.settings) out.push_back(to_json(povm));
    return out;
}

MeasurementFamily family_from_json(const Json& j) {
    MeasurementFamily f;
    for (const auto& povm : j) f.settings.push_back(povm_from_json(povm));
    return f;
}

Json to_json(const BipartiteStrategy& s) {
    return Json{{"state", to_json(s.state)}, {"alice", to_json(s.alice)}, {"bob", to_json(s.bob)}};
}

BipartiteStrategy strategy_from_json(const Json& j) {
    BipartiteStrategy s;
    s.state = ket_from_json(j.at("state"));
    s.alice = family_from_json(j.at("alice"));
    s.bob = family_from_json(j.at("bob"));
    return s;
}

Json to_json(const Scenario& s) { return Json{{"n", s.n}, {"d", s.d}}; }

Scenario scenario_from_json(const Json& j) {
    return Scenario{j.at("n").get<std::size_t>(), j.at("d").get<std::size_t>()};
}

Json to_json(const PrepareAndMeasureProtocol& p) {
    Json preparations = Json::array();
    for (const auto& ket : p.preparations) preparations.push_back(to_json(ket));
    Json measurements = Json::array();
    for (const auto& povm : p.measurements) measurements.push_back(to_json(povm));
    return Json{{"scenario", to_json(p.scenario)},
                {"preparations", std::move(preparations)},
                {"measurements", std::move(measurements)}};
}

PrepareAndMeasureProtocol protocol_from_json(const Json& j) {
    PrepareAndMeasureProtocol p;
    p.scenario = scenario_from_json(j.at("scenario"));
    for (const auto& ket : j.at("preparations")) p.preparations.push_back(ket_from_json(ket));
    for (const auto& povm : j.at("measurements")) p.measurements.push_back(povm_from_json(povm));
    return p;
}

Json to_json(const SeesawResult& r) {
    return Json{{"best_value", r.best_value},
                {"best_restart", r.best_restart},
                {"trace", r.trace},
                {"restarts_summary", r.restarts_summary},
                {"strategy", to_json(r.strategy)}};
}

Json to_json(const ClassicalStrategy& s) {
    return Json{{"scenario", to_json(s.scenario)}, {"encoder", s.encoder}, {"decoders", s.decoders}};
}

ClassicalStrategy classical_strategy_from_json(const Json& j) {
    ClassicalStrategy s;
    s.scenario = scenario_from_json(j.at("scenario"));
    s.encoder = j.at("encoder").get<std::vector<std::size_t>>();
    s.decoders = j.at("decoders").get<std::vector<std::vector<std::size_t>>>();
    return s;
}

Json to_json(const OutcomeDistribution& d) {
    return Json{{"d", d.d}, {"probs", d.probs}};
}

std::string format_probability(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

Json to_json(const RunReport& r) {
    Json out{{"command", r.command},
             {"scenario", to_json(r.scenario)},
             {"values", r.values},
             {"seed", r.seed},
             {"version", r.version},
             {"timing_seconds", r.timing_seconds}};
    if (!r.witness.is_null()) out["witness"] = r.witness;
    return out;
}

RunReport report_from_json(const Json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.scenario = scenario_from_json(j.at("scenario"));
    r.values = j.at("values");
    r.seed = j.at("seed").get<std::uint64_t>();
    r.version = j.at("version").get<std::string>();
    r.timing_seconds = j.at("timing_seconds").get<double>();
    if (j.contains("witness")) r.witness = j.at("witness");
    return r;
}

}  // namespace raclab
