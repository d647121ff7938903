#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pwforms/cochain_complex.hpp"
#include "pwforms/lie_algebra.hpp"
#include "pwforms/piecewise.hpp"

namespace pwf {

// TK + (K x g): the trivial transitive algebroid over a simplicial base.
// The anchor is projection to the vector part and is surjective by
// construction.
struct TrivialAlgebroid {
    SimplicialComplex base;
    LieAlgebra fiber;

    TrivialAlgebroid(SimplicialComplex base_, LieAlgebra fiber_); // validates Jacobi
};

// Section over a single n-dimensional top simplex: a polynomial vector field
// (components along d/dt_1..d/dt_n) plus a polynomial map into the fiber.
struct Section {
    int simplex_dim = 0;
    std::vector<PolyForm> vec; // n 0-forms
    std::vector<PolyForm> fib; // m 0-forms

    Section(int simplex_dim_, std::vector<PolyForm> vec_, std::vector<PolyForm> fib_);

    bool operator==(const Section&) const = default;
};

// X . g = sum_k X^k dg/dt_{k+1}.
PolyForm directional_derivative(const std::vector<PolyForm>& field, const PolyForm& g);

// ([X,Y], X.g - Y.f + [f,g]_fiber).
Section section_bracket(const LieAlgebra& g, const Section& a, const Section& b);

std::vector<PolyForm> anchor(const Section& s);
Section inject_field(std::vector<PolyForm> field, int fiber_dim); // X -> (X, 0)
Section scalar_multiply(const PolyForm& f, const Section& s);
Section section_add(const Section& a, const Section& b);

// The assembled complex Omega_ps(K) (x) Lambda g* at truncation D, with
// d = d_ps (x) id + (-1)^p id (x) d_g on a (p, q) block.
class TensorModel {
public:
    TensorModel(SimplicialComplex base, LieAlgebra fiber, int D, int rmax = -1);

    const SimplicialComplex& base() const { return base_; }
    const LieAlgebra& fiber() const { return fiber_; }
    int truncation() const { return D_; }
    int rmax() const { return rmax_; }

    struct Block {
        int p = 0, q = 0;
        Index ps_dim = 0, ce_dim = 0;
        Index offset = 0;
    };
    // Blocks of total degree r, ordered by p; index within a block is
    // ps_index * ce_dim + subset_index.
    std::vector<Block> blocks(int r) const;
    Index dimension(int r) const;

    const PsBasis& ps(int p) const;
    const SparseMatrix& ce_diff(int q) const; // Lambda^q -> Lambda^{q+1}

    SparseMatrix differential(int r) const;
    FiniteComplex complex() const;

private:
    SimplicialComplex base_;
    LieAlgebra fiber_;
    int D_ = 0;
    int rmax_ = 0;
    std::vector<PsBasis> ps_;
    std::vector<SparseMatrix> ps_diff_;
    std::vector<SparseMatrix> ce_diff_;
};

// Restriction (x) id per block; to.base must be a subcomplex of from.base and
// the truncations equal.
SparseMatrix tensor_restriction(const TensorModel& from, const TensorModel& to, int r);

BettiTable algebroid_betti(const TensorModel& model, ExecutionPolicy policy = kDefaultPolicy);
BettiTable algebroid_betti(const TrivialAlgebroid& a, int D, int rmax = -1,
                           ExecutionPolicy policy = kDefaultPolicy);

// Degree-wise product of Betti tables; the independent side of the Kunneth
// comparison.
BettiTable betti_convolution(const BettiTable& a, const BettiTable& b, int rmax);

// Total-degree-r form as per-block coordinate vectors.
struct AlgebroidForm {
    int total_degree = 0;
    std::map<std::pair<int, int>, std::vector<Rational>> blocks;
};

AlgebroidForm algebroid_form_from_coordinates(const TensorModel& model, int r,
                                              const std::vector<Rational>& coords);
std::vector<Rational> algebroid_form_coordinates(const TensorModel& model, const AlgebroidForm& w);

// Value of a degree-r form on r sections over one top simplex of the base,
// as a polynomial on that simplex.
PolyForm evaluate_algebroid_form(const TensorModel& model, const AlgebroidForm& w, const Simplex& top,
                                 const std::vector<Section>& sections);

// Both evaluations of (dw)(s_0..s_r): the intrinsic Koszul formula against
// the tensor differential route. Supported for r <= 2.
struct KoszulCheckResult {
    PolyForm koszul_value;
    PolyForm tensor_value;
    bool equal = false;
};

KoszulCheckResult koszul_check(const TensorModel& model, const AlgebroidForm& w, const Simplex& top,
                               const std::vector<Section>& sections);

} // namespace pwf
