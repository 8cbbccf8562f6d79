#include "raclab/povm.hpp"

#include <string>

#include "raclab/errors.hpp"
#include "raclab/tolerances.hpp"

namespace raclab {

bool is_valid_povm(const Povm& povm) {
    if (povm.empty()) return false;
    const std::size_t d = povm.front().rows;
    ComplexMatrix sum = zeros(d, d);
    for (const auto& element : povm) {
        if (!element.square() || element.rows != d) return false;
        if (!is_hermitian(element, 1e-9)) return false;
        if (min_eigenvalue(hermitian_part(element)) < tol::kPsdFloor) return false;
        sum += element;
    }
    return max_abs_diff(sum, identity(d)) <= tol::kCompleteness;
}

void require_valid_povm(const Povm& povm, const char* where) {
    if (!is_valid_povm(povm))
        throw ContractViolation(std::string(where) + ": invalid POVM");
}

void require_valid_family(const MeasurementFamily& family, const char* where) {
    require(!family.settings.empty(), std::string(where) + ": empty measurement family");
    for (const auto& povm : family.settings) require_valid_povm(povm, where);
}

Povm projective_from_unitary(const ComplexMatrix& unitary) {
    require(unitary.square(), "projective_from_unitary: unitary must be square");
    const std::size_t d = unitary.rows;
    Povm povm;
    povm.reserve(d);
    for (std::size_t a = 0; a < d; ++a) {
        Ket column(d);
        for (std::size_t i = 0; i < d; ++i) column[i] = unitary(i, a);
        povm.push_back(projector(column));
    }
    return povm;
}

}  // namespace raclab
