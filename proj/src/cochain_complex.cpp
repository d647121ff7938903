#include "pwforms/cochain_complex.hpp"

#include <string>

#include "pwforms/errors.hpp"

namespace pwf {

void FiniteComplex::check_shapes() const {
    if (dims.empty()) throw internal_error("complex with no degrees");
    if (diff.size() + 1 != dims.size()) throw internal_error("complex: differential count mismatch");
    for (std::size_t p = 0; p < diff.size(); ++p) {
        if (diff[p].cols() != dims[p] || diff[p].rows() != dims[p + 1])
            throw internal_error("complex: differential shape mismatch at degree " + std::to_string(p));
    }
}

bool FiniteComplex::is_complex() const {
    check_shapes();
    for (std::size_t p = 0; p + 1 < diff.size(); ++p)
        if (!(diff[p + 1] * diff[p]).is_zero()) return false;
    return true;
}

BettiTable betti(const FiniteComplex& c, ExecutionPolicy policy) {
    if (!c.is_complex()) throw internal_error("betti: d.d != 0");
    std::vector<Index> ranks(c.diff.size(), 0);
    for (std::size_t p = 0; p < c.diff.size(); ++p) ranks[p] = rank(c.diff[p], policy);

    BettiTable b(c.dims.size(), 0);
    for (std::size_t p = 0; p < c.dims.size(); ++p) {
        Index out = p < ranks.size() ? ranks[p] : 0;
        Index in = p > 0 ? ranks[p - 1] : 0;
        b[p] = c.dims[p] - out - in;
    }
    return b;
}

std::string betti_to_string(const BettiTable& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    s += ")";
    return s;
}

} // namespace pwf
