#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwforms/algebroid.hpp"
#include "pwforms/simplicial.hpp"

namespace pwf {

// Two-piece closed cover of a complex, with optional fiber coefficients
// (fiber of dimension 0 = trivial coefficients).
struct MVSetup {
    SimplicialComplex K, K1, K2, W;
    LieAlgebra fiber{0};
    int D = 2;
    int pmax = 0;
};

MVSetup make_mv_setup(const SimplicialComplex& k, const SimplicialComplex& k1,
                      const SimplicialComplex& k2, const LieAlgebra& fiber, int D, int pmax = -1);

// Assembled complexes for K, K1 + K2 (direct sum) and W, with the per-degree
// restriction maps i = (res_1, res_2) and j = res_W - res_W.
struct MVSpaces {
    MVSetup setup;
    FiniteComplex cK, cMid, cW;
    std::vector<SparseMatrix> map_i; // degree p: (dim1 + dim2) x dimK
    std::vector<SparseMatrix> map_j; // degree p: dimW x (dim1 + dim2)
};

// Degrees 0..setup.pmax + 1 (one extra for the connecting map).
MVSpaces build_mv_spaces(const MVSetup& setup);

std::pair<SparseMatrix, SparseMatrix> mv_short_sequence(const MVSpaces& spaces, int p);

struct MVDegreeReport {
    int p = 0;
    Index dim_K = 0, dim_mid = 0, dim_W = 0;
    Index rank_i = 0, rank_j = 0;
    bool ji_zero = false;
    bool i_injective = false;
    bool middle_exact = false;
    bool j_surjective = false;

    bool exact() const { return ji_zero && i_injective && middle_exact && j_surjective; }
};

MVDegreeReport mv_degree_report(const MVSpaces& spaces, int p);

// Cocycle representatives of H^p plus an independent coboundary basis,
// both as columns in degree-p coordinates.
struct CohomologyBasis {
    Index space_dim = 0;
    SparseMatrix reps;
    SparseMatrix boundaries;

    Index dim() const { return reps.cols(); }
};

CohomologyBasis cohomology_basis(const FiniteComplex& c, int p);

// Class coordinates of cocycle columns in the given basis.
SparseMatrix express_classes(const CohomologyBasis& basis, const SparseMatrix& cocycles);

// Map induced on cohomology by a chain map given in degree-p coordinates.
SparseMatrix induced_map(const CohomologyBasis& src, const CohomologyBasis& dst,
                         const SparseMatrix& chain_map);

struct ConnectingResult {
    std::optional<SparseMatrix> matrix; // dim H^{p+1}(K) x dim H^p(W)
    bool well_defined = false;
    std::string obstruction;            // nonempty when a lift failed
};

// Zigzag lift: solve through j, differentiate, pull back through i.
// Requires injectivity + middle exactness at p and p+1.
ConnectingResult connecting_homomorphism(const MVSpaces& spaces, int p);

struct LesNodeReport {
    int p = 0;
    std::string node;
    Index dim = 0;
    Index rank_in = 0, rank_out = 0;
    bool exact = false;
};

std::vector<LesNodeReport> les_exactness_check(const MVSpaces& spaces, int pmax);

struct ConnectingReportEntry {
    int p = 0;
    Index rank = 0;
    Index dim_source = 0, dim_target = 0;
    bool well_defined = false;
    std::string obstruction;
};

struct MVReport {
    std::string cover_model = "closed-subcomplex";
    int D = 0;
    int pmax = 0;
    int fiber_dim = 0;
    std::vector<MVDegreeReport> degrees; // p = 0..pmax+1
    std::vector<ConnectingReportEntry> connecting;
    std::vector<LesNodeReport> les;
    bool truncation_obstruction = false;

    bool all_short_exact(int up_to) const;
    bool all_les_exact() const;
};

MVReport mv_exactness_report(const MVSetup& setup);

// Reruns once at D+1 when a truncation obstruction shows up.
std::vector<MVReport> mv_report_with_retry(const MVSetup& setup);

} // namespace pwf
