#pragma once

#include <set>
#include <vector>

#include "pwforms/cochain_complex.hpp"
#include "pwforms/sparse_matrix.hpp"

namespace pwf {

// Vertices in strictly increasing order; dimension = size - 1.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<int> verts);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(const Simplex& face) const;

    auto operator<=>(const Simplex&) const = default;

    std::string to_string() const;
};

// Finite abstract simplicial complex, closed under taking faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Face closure of the given top simplices (duplicates welcome).
    static SimplicialComplex from_top_simplices(const std::vector<std::vector<int>>& tops);

    int dim() const; // -1 for the empty complex
    Index vertex_count() const;
    bool empty() const { return simplices_.empty(); }

    bool has_simplex(const Simplex& s) const;
    // p-simplices in lexicographic order.
    const std::vector<Simplex>& simplices(int p) const;
    // Simplices not properly contained in another simplex, lexicographic.
    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
    std::vector<Simplex> all_simplices() const;

    bool is_subcomplex_of(const SimplicialComplex& k) const;

    bool operator==(const SimplicialComplex& rhs) const { return simplices_ == rhs.simplices_; }

private:
    std::vector<std::vector<Simplex>> simplices_; // by dimension, each sorted
    std::vector<Simplex> maximal_;

    void rebuild(std::set<Simplex> faces);
};

// Subcomplex generated by top simplices that must already lie in k.
SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<std::vector<int>>& tops);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// (delta f)(s) = sum_k (-1)^k f(s minus k-th vertex). Rows are (p+1)-simplices,
// columns p-simplices, both lexicographic.
SparseMatrix coboundary_matrix(const SimplicialComplex& k, int p);

// The classical simplicial cochain complex, degrees 0..max(dim, 0).
FiniteComplex simplicial_complex_of(const SimplicialComplex& k);

BettiTable simplicial_betti(const SimplicialComplex& k, ExecutionPolicy policy = kDefaultPolicy);

} // namespace pwf
