#pragma once

#include <map>
#include <string>
#include <vector>

#include "pwforms/rational.hpp"
#include "pwforms/simplicial.hpp"

namespace pwf {

// Monomial t^a . dt_S in the reduced barycentric coordinates t_1..t_n of an
// n-simplex (t_0 = 1 - sum t_i is eliminated, dt_0 = -sum dt_i). Coordinate
// index i in [0, n) stands for t_{i+1}. dt is strictly increasing.
struct FormMonomial {
    std::vector<int> exponents;
    std::vector<int> dt;

    auto operator<=>(const FormMonomial&) const = default;
};

// Polynomial differential form of a fixed degree on one simplex. Zero
// coefficients are never stored, so equality is syntactic.
class PolyForm {
public:
    PolyForm() = default;
    PolyForm(int simplex_dim, int degree);

    static PolyForm constant(int simplex_dim, Rational value);
    static PolyForm coordinate(int simplex_dim, int i);      // t_{i+1}
    static PolyForm coordinate_diff(int simplex_dim, int i); // dt_{i+1}
    // Full barycentric coordinate T_v, v in [0, n], and its differential,
    // rewritten in reduced coordinates.
    static PolyForm full_coordinate(int simplex_dim, int v);
    static PolyForm full_coordinate_diff(int simplex_dim, int v);
    static PolyForm monomial(int simplex_dim, std::vector<int> exponents, std::vector<int> dt,
                             Rational coeff);

    int simplex_dim() const { return n_; }
    int degree() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    // Max total exponent over terms; -1 for the zero form.
    int coefficient_degree() const;

    const std::map<FormMonomial, Rational>& terms() const { return terms_; }

    void add_term(const FormMonomial& m, const Rational& coeff);

    PolyForm operator+(const PolyForm& rhs) const;
    PolyForm operator-(const PolyForm& rhs) const;
    PolyForm operator*(const Rational& c) const;
    PolyForm operator-() const { return *this * Rational(-1); }

    bool operator==(const PolyForm& rhs) const = default;

    // Constant value of a 0-form on a 0-simplex (or of any constant 0-form).
    Rational as_constant() const;

    std::string to_string() const;

private:
    int n_ = 0;
    int p_ = 0;
    std::map<FormMonomial, Rational> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Exterior derivative; lowers every term's coefficient degree by one.
PolyForm differential(const PolyForm& a);

// Coefficient-wise formal partial d/dt_{i+1}.
PolyForm partial_derivative(const PolyForm& a, int i);

// Order-preserving inclusion of a face simplex, with each face vertex's
// position inside the target's vertex list.
struct FaceInclusion {
    Simplex face;
    Simplex target;
    std::vector<int> positions;

    FaceInclusion(Simplex face_, Simplex target_);
};

// Substitute the target's barycentric coordinates along the inclusion: an
// algebra map commuting with the differential.
PolyForm pullback(const FaceInclusion& inc, const PolyForm& a);

// Exact integral of a top-degree form over the standard simplex, oriented so
// that dt_1 ^ ... ^ dt_n is positive.
Rational integrate(const PolyForm& a);

// Whitney form of the face with the given vertex positions (increasing,
// within [0, n]): p! sum_k (-1)^k T_{i_k} dT_{i_0} ... omit k ... dT_{i_p}.
PolyForm whitney(int simplex_dim, const std::vector<int>& face_positions);

// All t^a dt_S with sum(a) <= max_coeff_degree and |S| = degree, ordered
// lexicographically in (a, S). Count C(n+D, D) * C(n, p).
std::vector<FormMonomial> monomial_keys(int simplex_dim, int degree, int max_coeff_degree);
std::vector<PolyForm> monomial_basis(int simplex_dim, int degree, int max_coeff_degree);

// Coordinates of a form in monomial_keys(n, p, D); throws internal_error if a
// term falls outside the cap.
std::vector<Rational> polyform_coordinates(const PolyForm& a, int max_coeff_degree);
PolyForm polyform_from_coordinates(int simplex_dim, int degree, int max_coeff_degree,
                                   const std::vector<Rational>& coords);

// Value of a p-form on p polynomial vector fields (each field given by n
// 0-form components in d/dt_1..d/dt_n).
PolyForm evaluate_on_fields(const PolyForm& a, const std::vector<std::vector<PolyForm>>& fields);

} // namespace pwf
