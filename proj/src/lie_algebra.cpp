#include "pwforms/lie_algebra.hpp"

#include <algorithm>

#include "pwforms/errors.hpp"

namespace pwf {

std::string JacobiViolation::to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

LieAlgebra::LieAlgebra(int dim) : m_(dim) {
    if (dim < 0) throw input_error("negative Lie algebra dimension");
}

void LieAlgebra::set_bracket(int i, int j, int k, Rational c) {
    if (i < 0 || j < 0 || k < 0 || i >= m_ || j >= m_ || k >= m_) throw input_error("bracket index out of range");
    if (i >= j) throw input_error("bracket constants are stored for i < j only");
    if (is_zero(c))
        c_.erase({i, j, k});
    else
        c_[{i, j, k}] = std::move(c);
}

Rational LieAlgebra::structure_constant(int i, int j, int k) const {
    if (i == j) return Rational(0);
    if (i > j) return -structure_constant(j, i, k);
    auto it = c_.find({i, j, k});
    return it == c_.end() ? Rational(0) : it->second;
}

std::vector<Rational> LieAlgebra::bracket_basis(int i, int j) const {
    std::vector<Rational> v(static_cast<std::size_t>(m_), Rational(0));
    for (int k = 0; k < m_; ++k) v[static_cast<std::size_t>(k)] = structure_constant(i, j, k);
    return v;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    if (static_cast<int>(a.size()) != m_ || static_cast<int>(b.size()) != m_)
        throw input_error("bracket operand length mismatch");
    std::vector<Rational> v(static_cast<std::size_t>(m_), Rational(0));
    for (int i = 0; i < m_; ++i) {
        if (is_zero(a[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j < m_; ++j) {
            if (i == j || is_zero(b[static_cast<std::size_t>(j)])) continue;
            Rational f = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            for (int k = 0; k < m_; ++k) {
                Rational s = structure_constant(i, j, k);
                if (!is_zero(s)) v[static_cast<std::size_t>(k)] += f * s;
            }
        }
    }
    return v;
}

std::optional<JacobiViolation> LieAlgebra::validate() const {
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            for (int k = j + 1; k < m_; ++k) {
                std::vector<Rational> ei(static_cast<std::size_t>(m_), Rational(0));
                std::vector<Rational> ej = ei, ek = ei;
                ei[static_cast<std::size_t>(i)] = 1;
                ej[static_cast<std::size_t>(j)] = 1;
                ek[static_cast<std::size_t>(k)] = 1;
                std::vector<Rational> sum = bracket(bracket(ei, ej), ek);
                std::vector<Rational> t2 = bracket(bracket(ej, ek), ei);
                std::vector<Rational> t3 = bracket(bracket(ek, ei), ej);
                bool ok = true;
                for (int l = 0; l < m_ && ok; ++l) {
                    Rational s = sum[static_cast<std::size_t>(l)] + t2[static_cast<std::size_t>(l)] +
                                 t3[static_cast<std::size_t>(l)];
                    if (!is_zero(s)) ok = false;
                }
                if (!ok) return JacobiViolation{i, j, k};
            }
    return std::nullopt;
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim); }

LieAlgebra LieAlgebra::heisenberg3() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, 2, 1);
    return g;
}

LieAlgebra LieAlgebra::sl2() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, 1, 2);  // [h,e] = 2e
    g.set_bracket(0, 2, 2, -2); // [h,f] = -2f
    g.set_bracket(1, 2, 0, 1);  // [e,f] = h
    return g;
}

void CEElement::add(const std::vector<int>& subset, const Rational& v) {
    if (static_cast<int>(subset.size()) != degree) throw input_error("CE element subset size mismatch");
    if (is_zero(v)) return;
    auto it = values.find(subset);
    if (it == values.end()) {
        values.emplace(subset, v);
    } else {
        it->second += v;
        if (is_zero(it->second)) values.erase(it);
    }
}

std::vector<std::vector<int>> ce_subsets(int m, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > m) return out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == q) {
            out.push_back(pick);
            return;
        }
        for (int i = start; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

SparseMatrix ce_differential(const LieAlgebra& g, int q, bool force) {
    if (!force) {
        if (auto v = g.validate())
            throw validation_error("Jacobi identity fails at " + v->to_string());
    }
    const int m = g.dim();
    auto rows = ce_subsets(m, q + 1);
    auto cols = ce_subsets(m, q);
    std::map<std::vector<int>, Index> col_index;
    for (Index c = 0; c < static_cast<Index>(cols.size()); ++c) col_index[cols[static_cast<std::size_t>(c)]] = c;

    SparseMatrix d(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (Index r = 0; r < static_cast<Index>(rows.size()); ++r) {
        const auto& I = rows[static_cast<std::size_t>(r)];
        // (d w)(x_I) = sum_{a<b} (-1)^{a+b} w([x_{I_a}, x_{I_b}], x_{I minus a,b})
        for (std::size_t a = 0; a < I.size(); ++a) {
            for (std::size_t b = a + 1; b < I.size(); ++b) {
                std::vector<int> rest;
                for (std::size_t t = 0; t < I.size(); ++t)
                    if (t != a && t != b) rest.push_back(I[t]);
                int sign_ab = (a + b) % 2 == 0 ? 1 : -1;
                for (int k = 0; k < m; ++k) {
                    Rational c = g.structure_constant(I[a], I[b], k);
                    if (is_zero(c)) continue;
                    // w(x_k, x_rest): zero unless k is new; sorting x_k in
                    // costs the number of rest entries below k.
                    if (std::binary_search(rest.begin(), rest.end(), k)) continue;
                    auto pos = std::lower_bound(rest.begin(), rest.end(), k);
                    int sign_sort = (pos - rest.begin()) % 2 == 0 ? 1 : -1;
                    std::vector<int> subset = rest;
                    subset.insert(pos - rest.begin() + subset.begin(), k);
                    d.add(r, col_index.at(subset), c * sign_ab * sign_sort);
                }
            }
        }
    }
    return d;
}

FiniteComplex ce_complex_of(const LieAlgebra& g, bool force) {
    FiniteComplex c;
    const int m = g.dim();
    for (int q = 0; q <= m; ++q) {
        auto s = ce_subsets(m, q);
        c.dims.push_back(static_cast<Index>(s.size()));
    }
    for (int q = 0; q < m; ++q) c.diff.push_back(ce_differential(g, q, force));
    return c;
}

BettiTable ce_betti(const LieAlgebra& g, ExecutionPolicy policy) {
    return betti(ce_complex_of(g), policy);
}

} // namespace pwf
