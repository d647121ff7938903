#pragma once

#include <string>
#include <vector>

#include "pwforms/elimination.hpp"
#include "pwforms/sparse_matrix.hpp"

namespace pwf {

using BettiTable = std::vector<Index>;

// A finite cochain complex: dims[p] is the dimension in degree p and
// diff[p] the matrix of d : degree p -> p+1 (shape dims[p+1] x dims[p]).
// Degrees outside [0, pmax] are zero.
struct FiniteComplex {
    std::vector<Index> dims;
    std::vector<SparseMatrix> diff; // size dims.size()-1 (or 0 for a single degree)

    Index pmax() const { return static_cast<Index>(dims.size()) - 1; }

    void check_shapes() const;

    // d(p+1) . d(p) = 0, exactly.
    bool is_complex() const;
};

// Cohomology dimensions per degree. Throws internal_error when d.d != 0.
BettiTable betti(const FiniteComplex& c, ExecutionPolicy policy = kDefaultPolicy);

std::string betti_to_string(const BettiTable& b);

} // namespace pwf
