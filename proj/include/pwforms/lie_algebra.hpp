#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pwforms/cochain_complex.hpp"
#include "pwforms/rational.hpp"

namespace pwf {

struct JacobiViolation {
    int i = 0, j = 0, k = 0;

    std::string to_string() const;
};

// Finite-dimensional Lie algebra over Q by structure constants:
// [x_i, x_j] = sum_k c(i,j,k) x_k for i < j, antisymmetry implicit.
class LieAlgebra {
public:
    explicit LieAlgebra(int dim);

    int dim() const { return m_; }

    void set_bracket(int i, int j, int k, Rational c); // requires i < j
    Rational structure_constant(int i, int j, int k) const; // any i, j (antisymmetric)

    // [x_i, x_j] as a coefficient vector, any i, j.
    std::vector<Rational> bracket_basis(int i, int j) const;
    // Bilinear extension to arbitrary coefficient vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

    // First triple i<j<k violating Jacobi, or nullopt.
    std::optional<JacobiViolation> validate() const;

    bool operator==(const LieAlgebra&) const = default;

    static LieAlgebra abelian(int dim);
    static LieAlgebra heisenberg3(); // [x0,x1] = x2
    static LieAlgebra sl2();         // x0=h, x1=e, x2=f

private:
    int m_ = 0;
    std::map<std::tuple<int, int, int>, Rational> c_; // keys i<j only
};

// Element of Lambda^q g*, values on increasing q-subsets of {0..m-1}.
struct CEElement {
    int algebra_dim = 0;
    int degree = 0;
    std::map<std::vector<int>, Rational> values;

    void add(const std::vector<int>& subset, const Rational& v);
};

// Increasing q-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> ce_subsets(int m, int q);

// Matrix of the Chevalley-Eilenberg differential Lambda^q g* -> Lambda^{q+1} g*
// in the subset bases. `force` skips Jacobi validation (for the negative test
// that a Jacobi violation breaks d.d = 0).
SparseMatrix ce_differential(const LieAlgebra& g, int q, bool force = false);

FiniteComplex ce_complex_of(const LieAlgebra& g, bool force = false);

BettiTable ce_betti(const LieAlgebra& g, ExecutionPolicy policy = kDefaultPolicy);

} // namespace pwf
