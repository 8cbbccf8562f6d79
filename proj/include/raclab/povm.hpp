#pragma once

#include <vector>

#include "raclab/linalg.hpp"

namespace raclab {

// A measurement: positive operators, one per outcome, summing to identity.
using Povm = std::vector<ComplexMatrix>;

// Indexed collection of POVMs, one per measurement setting.
struct MeasurementFamily {
    std::vector<Povm> settings;

    std::size_t setting_count() const { return settings.size(); }
    std::size_t outcome_count() const { return settings.empty() ? 0 : settings.front().size(); }
    std::size_t dim() const {
        return settings.empty() || settings.front().empty() ? 0 : settings.front().front().rows;
    }
};

// Every element Hermitian and PSD (min eigenvalue >= tol::kPsdFloor), sum
// within tol::kCompleteness of the identity.
bool is_valid_povm(const Povm& povm);
void require_valid_povm(const Povm& povm, const char* where);
void require_valid_family(const MeasurementFamily& family, const char* where);

// Projective measurement onto the columns of a unitary.
Povm projective_from_unitary(const ComplexMatrix& unitary);

}  // namespace raclab
