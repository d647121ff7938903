#include "pwforms/simplicial.hpp"

#include <algorithm>
#include <set>

#include "pwforms/errors.hpp"

namespace pwf {

Simplex::Simplex(std::vector<int> verts) : vertices(std::move(verts)) {
    if (vertices.empty()) throw input_error("empty simplex");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) throw input_error("negative vertex id");
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw input_error("simplex vertices must be strictly increasing / distinct");
    }
}

bool Simplex::contains(const Simplex& face) const {
    return std::includes(vertices.begin(), vertices.end(), face.vertices.begin(), face.vertices.end());
}

std::string Simplex::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vertices[i]);
    }
    return s + "}";
}

void SimplicialComplex::rebuild(std::set<Simplex> faces) {
    simplices_.clear();
    maximal_.clear();
    for (const Simplex& s : faces) {
        const auto d = static_cast<std::size_t>(s.dim());
        if (simplices_.size() <= d) simplices_.resize(d + 1);
        simplices_[d].push_back(s);
    }
    // std::set iteration is lex order already; per-dimension lists inherit it.
    for (const Simplex& s : faces) {
        bool maximal = true;
        for (int d = s.dim() + 1; d <= dim() && maximal; ++d)
            for (const Simplex& t : simplices_[static_cast<std::size_t>(d)])
                if (t.contains(s)) {
                    maximal = false;
                    break;
                }
        if (maximal) maximal_.push_back(s);
    }
}

SimplicialComplex SimplicialComplex::from_top_simplices(const std::vector<std::vector<int>>& tops) {
    std::set<Simplex> faces;
    for (const auto& top : tops) {
        std::vector<int> sorted = top;
        std::sort(sorted.begin(), sorted.end());
        Simplex s(sorted); // validates distinctness
        // All nonempty vertex subsets, by bitmask.
        const std::size_t n = sorted.size();
        if (n > 24) throw input_error("top simplex with more than 24 vertices");
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(sorted[i]);
            faces.insert(Simplex(sub));
        }
    }
    SimplicialComplex k;
    k.rebuild(std::move(faces));
    return k;
}

int SimplicialComplex::dim() const { return static_cast<int>(simplices_.size()) - 1; }

Index SimplicialComplex::vertex_count() const {
    return simplices_.empty() ? 0 : static_cast<Index>(simplices_[0].size());
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
    if (s.dim() > dim()) return false;
    const auto& level = simplices_[static_cast<std::size_t>(s.dim())];
    return std::binary_search(level.begin(), level.end(), s);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    static const std::vector<Simplex> none;
    if (p < 0 || p > dim()) return none;
    return simplices_[static_cast<std::size_t>(p)];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    for (const auto& level : simplices_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& k) const {
    for (const auto& level : simplices_)
        for (const Simplex& s : level)
            if (!k.has_simplex(s)) return false;
    return true;
}

SimplicialComplex subcomplex(const SimplicialComplex& k, const std::vector<std::vector<int>>& tops) {
    for (const auto& top : tops) {
        std::vector<int> sorted = top;
        std::sort(sorted.begin(), sorted.end());
        if (!k.has_simplex(Simplex(sorted)))
            throw input_error("subcomplex generator " + Simplex(sorted).to_string() + " not in complex");
    }
    return SimplicialComplex::from_top_simplices(tops);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<int>> tops;
    for (const Simplex& s : a.maximal_simplices()) tops.push_back(s.vertices);
    for (const Simplex& s : b.maximal_simplices()) tops.push_back(s.vertices);
    return SimplicialComplex::from_top_simplices(tops);
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<int>> tops;
    for (int p = 0; p <= a.dim(); ++p)
        for (const Simplex& s : a.simplices(p))
            if (b.has_simplex(s)) tops.push_back(s.vertices);
    return SimplicialComplex::from_top_simplices(tops);
}

SparseMatrix coboundary_matrix(const SimplicialComplex& k, int p) {
    if (p < 0) throw input_error("coboundary: negative degree");
    const auto& rows = k.simplices(p + 1);
    const auto& cols = k.simplices(p);
    SparseMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (Index r = 0; r < static_cast<Index>(rows.size()); ++r) {
        const Simplex& s = rows[static_cast<std::size_t>(r)];
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            std::vector<int> face = s.vertices;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            Simplex f(face);
            auto it = std::lower_bound(cols.begin(), cols.end(), f);
            Index c = static_cast<Index>(it - cols.begin());
            m.add(r, c, (drop % 2 == 0) ? Rational(1) : Rational(-1));
        }
    }
    return m;
}

FiniteComplex simplicial_complex_of(const SimplicialComplex& k) {
    const int top = std::max(k.dim(), 0);
    FiniteComplex c;
    for (int p = 0; p <= top; ++p) c.dims.push_back(static_cast<Index>(k.simplices(p).size()));
    for (int p = 0; p < top; ++p) c.diff.push_back(coboundary_matrix(k, p));
    return c;
}

BettiTable simplicial_betti(const SimplicialComplex& k, ExecutionPolicy policy) {
    return betti(simplicial_complex_of(k), policy);
}

} // namespace pwf
