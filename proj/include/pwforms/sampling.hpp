#pragma once

#include <cstdint>
#include <random>

#include "pwforms/algebroid.hpp"
#include "pwforms/polyform.hpp"
#include "pwforms/sparse_matrix.hpp"

namespace pwf {

// Deterministic generator for property tests and seeded CLI runs. Draws via
// explicit modulo on mt19937_64 so sequences do not depend on the standard
// library's distribution implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi); // inclusive bounds

    Rational rational(std::int64_t max_abs_num = 9, std::int64_t max_den = 4);

    // Random 0-form with coefficients of total degree <= max_degree.
    PolyForm polynomial(int simplex_dim, int max_degree);
    PolyForm form(int simplex_dim, int degree, int max_coeff_degree);

    Section section(int simplex_dim, int fiber_dim, int max_degree);

    SparseMatrix matrix(Index rows, Index cols, int fill_percent);
    SparseMatrix invertible_matrix(Index n);

private:
    std::mt19937_64 rng_;
};

} // namespace pwf
