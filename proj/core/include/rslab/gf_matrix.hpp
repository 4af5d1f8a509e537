#pragma once

#include <optional>
#include <vector>

#include "rslab/prime_field.hpp"

namespace rslab {

/// Dense row-major matrix over F_p, sized for the small systems that the
/// decoders set up.
struct GfMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Residue> data;

    GfMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    Residue& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Residue at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Some x with A x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Residue>> solve(const PrimeField& F, GfMatrix A, std::vector<Residue> b);

/// A nonzero x with A x = 0, or nullopt when A has full column rank.
std::optional<std::vector<Residue>> kernel_vector(const PrimeField& F, GfMatrix A);

}  // namespace rslab
