#include "pwforms/sampling.hpp"

#include "pwforms/errors.hpp"

namespace pwf {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw input_error("uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::rational(std::int64_t max_abs_num, std::int64_t max_den) {
    Rational r(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
    r.canonicalize();
    return r;
}

PolyForm Sampler::polynomial(int n, int max_degree) {
    PolyForm out(n, 0);
    for (const auto& key : monomial_keys(n, 0, max_degree)) {
        if (uniform(0, 2) == 0) continue; // keep it sparse
        out.add_term(key, rational());
    }
    return out;
}

PolyForm Sampler::form(int n, int p, int D) {
    PolyForm out(n, p);
    for (const auto& key : monomial_keys(n, p, D)) {
        if (uniform(0, 2) == 0) continue;
        out.add_term(key, rational());
    }
    return out;
}

Section Sampler::section(int n, int fiber_dim, int max_degree) {
    std::vector<PolyForm> vec, fib;
    for (int i = 0; i < n; ++i) vec.push_back(polynomial(n, max_degree));
    for (int i = 0; i < fiber_dim; ++i) fib.push_back(polynomial(n, max_degree));
    return Section(n, std::move(vec), std::move(fib));
}

SparseMatrix Sampler::matrix(Index rows, Index cols, int fill_percent) {
    SparseMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            if (uniform(1, 100) <= fill_percent) m.set(r, c, rational());
    return m;
}

SparseMatrix Sampler::invertible_matrix(Index n) {
    // unit lower times unit upper triangular, always invertible
    SparseMatrix l = SparseMatrix::identity(n);
    SparseMatrix u = SparseMatrix::identity(n);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c) {
            if (c < r && uniform(0, 2) == 0) l.set(r, c, rational(3, 2));
            if (c > r && uniform(0, 2) == 0) u.set(r, c, rational(3, 2));
        }
    return l * u;
}

} // namespace pwf
