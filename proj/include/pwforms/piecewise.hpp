#pragma once

#include <map>
#include <vector>

#include "pwforms/cochain_complex.hpp"
#include "pwforms/polyform.hpp"
#include "pwforms/simplicial.hpp"

namespace pwf {

// A family {w_s} of polynomial p-forms, one per simplex, agreeing under every
// face pullback. Components are stored for all simplices; on simplices of
// dimension < p they are zero forms.
class PiecewiseForm {
public:
    PiecewiseForm(SimplicialComplex complex, int degree);

    const SimplicialComplex& complex() const { return complex_; }
    int degree() const { return p_; }

    const PolyForm& component(const Simplex& s) const;
    void set_component(const Simplex& s, PolyForm f);

    // Every codimension-1 pullback matches; full-face compatibility follows
    // by functoriality.
    bool is_facet_compatible() const;

    PiecewiseForm differential() const;
    PiecewiseForm operator+(const PiecewiseForm& rhs) const;
    PiecewiseForm operator*(const Rational& c) const;

    bool operator==(const PiecewiseForm& rhs) const = default;

    std::string to_string() const;

private:
    SimplicialComplex complex_;
    int p_ = 0;
    std::map<Simplex, PolyForm> components_;
};

// Per-maximal-simplex block layout of the stacked monomial coordinates.
struct TopLayout {
    std::vector<Simplex> tops;
    std::vector<Index> offsets; // per top
    Index total = 0;

    static TopLayout of(const SimplicialComplex& k, int degree, int coeff_cap);
};

// Basis of the compatible piecewise p-forms with coefficient degree <= D.
// embedding expresses each element in the stacked top-simplex monomial
// coordinates (one column per element).
struct PsBasis {
    SimplicialComplex complex;
    int degree = 0;
    int coeff_cap = 0;
    TopLayout layout;
    std::vector<PiecewiseForm> elements;
    SparseMatrix embedding;

    Index dimension() const { return static_cast<Index>(elements.size()); }
};

PsBasis ps_basis(const SimplicialComplex& k, int p, int D);

// Coordinates of a compatible family given by its components on the maximal
// simplices; inverse of the embedding on its image.
std::vector<Rational> stacked_coordinates(const PsBasis& basis,
                                          const std::map<Simplex, PolyForm>& top_components);

// Matrix of the componentwise exterior derivative from src to dst
// (dst.degree == src.degree + 1; any caps with dst.coeff_cap >= src.coeff_cap - 1).
SparseMatrix ps_differential_matrix(const PsBasis& src, const PsBasis& dst);
SparseMatrix ps_differential(const SimplicialComplex& k, int p, int D);

// Coefficient cap used in degree p when a whole complex is assembled at
// truncation parameter D. d lowers the cap by one per degree, so this is the
// smallest d-closed profile containing the Whitney forms up to degree D.
int coefficient_cap(int D, int p);

// The piecewise cochain complex at truncation D, degrees 0..pmax.
FiniteComplex ps_complex_of(const SimplicialComplex& k, int D, int pmax);
std::vector<PsBasis> ps_bases_of(const SimplicialComplex& k, int D, int pmax);

BettiTable ps_betti(const SimplicialComplex& k, int D, int pmax,
                    ExecutionPolicy policy = kDefaultPolicy);
BettiTable ps_betti(const SimplicialComplex& k, int D, ExecutionPolicy policy = kDefaultPolicy);

// I(w)(s) = integral of w_s over s, rows indexed by the p-simplices.
// Satisfies the Stokes identity: coboundary . I = I . d, exactly.
SparseMatrix integration_matrix(const PsBasis& basis);
SparseMatrix integration_map(const SimplicialComplex& k, int p, int D);

// Elementary p-cochain -> its Whitney representative (coefficient degree 1);
// a section of the integration map: I.W = identity.
SparseMatrix whitney_matrix(const PsBasis& basis);
SparseMatrix whitney_map(const SimplicialComplex& k, int p);

// Drop components outside the subcomplex; commutes with d.
SparseMatrix restriction_matrix(const PsBasis& from, const PsBasis& to);
SparseMatrix restriction_map(const SimplicialComplex& k, const SimplicialComplex& l, int p, int D);

} // namespace pwf
