#include "raclab/reference_values.hpp"

namespace raclab::reference {

const ScenarioRow* find_row(const Scenario& s) {
    for (const auto& row : kRows)
        if (row.scenario == s) return &row;
    return nullptr;
}

}  // namespace raclab::reference
