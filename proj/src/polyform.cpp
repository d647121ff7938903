#include "pwforms/polyform.hpp"

#include <algorithm>
#include <numeric>

#include "pwforms/errors.hpp"

namespace pwf {

namespace {

Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

int total_degree(const std::vector<int>& exponents) {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

// Sign of sorting the concatenation of two increasing index sets; zero
// overlap is the caller's responsibility.
int shuffle_sign(const std::vector<int>& s1, const std::vector<int>& s2) {
    int inversions = 0;
    for (int a : s1)
        for (int b : s2)
            if (b < a) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

PolyForm::PolyForm(int simplex_dim, int degree) : n_(simplex_dim), p_(degree) {
    if (simplex_dim < 0 || degree < 0) throw input_error("negative form parameters");
}

PolyForm PolyForm::constant(int n, Rational value) {
    PolyForm f(n, 0);
    f.add_term({std::vector<int>(static_cast<std::size_t>(n), 0), {}}, value);
    return f;
}

PolyForm PolyForm::coordinate(int n, int i) {
    if (i < 0 || i >= n) throw input_error("coordinate index out of range");
    PolyForm f(n, 0);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    f.add_term({e, {}}, Rational(1));
    return f;
}

PolyForm PolyForm::coordinate_diff(int n, int i) {
    if (i < 0 || i >= n) throw input_error("coordinate index out of range");
    PolyForm f(n, 1);
    f.add_term({std::vector<int>(static_cast<std::size_t>(n), 0), {i}}, Rational(1));
    return f;
}

PolyForm PolyForm::full_coordinate(int n, int v) {
    if (v < 0 || v > n) throw input_error("vertex position out of range");
    if (v > 0) return coordinate(n, v - 1);
    PolyForm f = constant(n, Rational(1));
    for (int i = 0; i < n; ++i) f = f - coordinate(n, i);
    return f;
}

PolyForm PolyForm::full_coordinate_diff(int n, int v) {
    if (v < 0 || v > n) throw input_error("vertex position out of range");
    if (v > 0) return coordinate_diff(n, v - 1);
    PolyForm f(n, 1);
    for (int i = 0; i < n; ++i) f = f - coordinate_diff(n, i);
    return f;
}

PolyForm PolyForm::monomial(int n, std::vector<int> exponents, std::vector<int> dt, Rational coeff) {
    PolyForm f(n, static_cast<int>(dt.size()));
    if (static_cast<int>(exponents.size()) != n) throw input_error("exponent vector length mismatch");
    f.add_term({std::move(exponents), std::move(dt)}, coeff);
    return f;
}

int PolyForm::coefficient_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m.exponents));
    return d;
}

void PolyForm::add_term(const FormMonomial& m, const Rational& coeff) {
    if (pwf::is_zero(coeff)) return;
    if (static_cast<int>(m.exponents.size()) != n_ || static_cast<int>(m.dt.size()) != p_)
        throw internal_error("malformed form monomial");
    for (std::size_t i = 0; i < m.dt.size(); ++i) {
        if (m.dt[i] < 0 || m.dt[i] >= n_ || (i > 0 && m.dt[i] <= m.dt[i - 1]))
            throw internal_error("malformed dt index set");
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (pwf::is_zero(it->second)) terms_.erase(it);
    }
}

PolyForm PolyForm::operator+(const PolyForm& rhs) const {
    if (n_ != rhs.n_ || p_ != rhs.p_) throw input_error("form sum shape mismatch");
    PolyForm out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

PolyForm PolyForm::operator-(const PolyForm& rhs) const { return *this + (rhs * Rational(-1)); }

PolyForm PolyForm::operator*(const Rational& c) const {
    PolyForm out(n_, p_);
    if (pwf::is_zero(c)) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

Rational PolyForm::as_constant() const {
    if (p_ != 0) throw input_error("as_constant on a form of positive degree");
    if (terms_.empty()) return Rational(0);
    if (terms_.size() > 1 || total_degree(terms_.begin()->first.exponents) != 0)
        throw input_error("as_constant on a non-constant form");
    return terms_.begin()->second;
}

std::string PolyForm::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        std::vector<std::string> factors;
        if (a != 1 || (total_degree(m.exponents) == 0 && m.dt.empty()))
            factors.push_back(rational_to_string(a));
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            std::string f = "t" + std::to_string(i + 1);
            if (m.exponents[i] > 1) f += "^" + std::to_string(m.exponents[i]);
            factors.push_back(f);
        }
        if (!m.dt.empty()) {
            std::string f;
            for (std::size_t i = 0; i < m.dt.size(); ++i) {
                if (i) f += "∧";
                f += "dt" + std::to_string(m.dt[i] + 1);
            }
            factors.push_back(f);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "·";
            out += factors[i];
        }
    }
    return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.simplex_dim() != b.simplex_dim()) throw input_error("wedge: simplex dimension mismatch");
    PolyForm out(a.simplex_dim(), a.degree() + b.degree());
    for (const auto& [m1, c1] : a.terms()) {
        for (const auto& [m2, c2] : b.terms()) {
            // dt_i ^ dt_i kills the term.
            bool overlap = false;
            for (int i : m1.dt)
                if (std::binary_search(m2.dt.begin(), m2.dt.end(), i)) {
                    overlap = true;
                    break;
                }
            if (overlap) continue;
            std::vector<int> e(m1.exponents.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = m1.exponents[i] + m2.exponents[i];
            std::vector<int> dt;
            dt.reserve(m1.dt.size() + m2.dt.size());
            std::merge(m1.dt.begin(), m1.dt.end(), m2.dt.begin(), m2.dt.end(), std::back_inserter(dt));
            int sign = shuffle_sign(m1.dt, m2.dt);
            out.add_term({std::move(e), std::move(dt)}, c1 * c2 * sign);
        }
    }
    return out;
}

PolyForm differential(const PolyForm& a) {
    PolyForm out(a.simplex_dim(), a.degree() + 1);
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            int idx = static_cast<int>(i);
            if (std::binary_search(m.dt.begin(), m.dt.end(), idx)) continue;
            std::vector<int> e = m.exponents;
            --e[i];
            std::vector<int> dt;
            dt.reserve(m.dt.size() + 1);
            std::merge(m.dt.begin(), m.dt.end(), &idx, &idx + 1, std::back_inserter(dt));
            // sign of moving dt_i past the dt's before it
            int before = static_cast<int>(std::lower_bound(m.dt.begin(), m.dt.end(), idx) - m.dt.begin());
            int sign = before % 2 == 0 ? 1 : -1;
            out.add_term({std::move(e), std::move(dt)}, c * m.exponents[i] * sign);
        }
    }
    return out;
}

PolyForm partial_derivative(const PolyForm& a, int i) {
    if (i < 0 || i >= a.simplex_dim()) throw input_error("partial_derivative index out of range");
    PolyForm out(a.simplex_dim(), a.degree());
    for (const auto& [m, c] : a.terms()) {
        if (m.exponents[static_cast<std::size_t>(i)] == 0) continue;
        std::vector<int> e = m.exponents;
        --e[static_cast<std::size_t>(i)];
        out.add_term({std::move(e), m.dt}, c * m.exponents[static_cast<std::size_t>(i)]);
    }
    return out;
}

FaceInclusion::FaceInclusion(Simplex face_, Simplex target_)
    : face(std::move(face_)), target(std::move(target_)) {
    if (!target.contains(face)) throw input_error("face inclusion: face not contained in target");
    for (int v : face.vertices) {
        auto it = std::lower_bound(target.vertices.begin(), target.vertices.end(), v);
        positions.push_back(static_cast<int>(it - target.vertices.begin()));
    }
}

PolyForm pullback(const FaceInclusion& inc, const PolyForm& a) {
    if (a.simplex_dim() != inc.target.dim()) throw input_error("pullback: form not on the target simplex");
    const int n = inc.target.dim();
    const int k = inc.face.dim();

    // Substitution of each reduced target coordinate t_{i+1} (vertex position
    // i+1): zero if that vertex is absent from the face; else the face's full
    // barycentric coordinate at it.
    std::vector<PolyForm> poly_sub, form_sub;
    for (int i = 0; i < n; ++i) {
        int pos = i + 1;
        auto it = std::find(inc.positions.begin(), inc.positions.end(), pos);
        if (it == inc.positions.end()) {
            poly_sub.push_back(PolyForm(k, 0));
            form_sub.push_back(PolyForm(k, 1));
        } else {
            int j = static_cast<int>(it - inc.positions.begin());
            poly_sub.push_back(PolyForm::full_coordinate(k, j));
            form_sub.push_back(PolyForm::full_coordinate_diff(k, j));
        }
    }

    PolyForm out(k, a.degree());
    for (const auto& [m, c] : a.terms()) {
        PolyForm term = PolyForm::constant(k, c);
        for (std::size_t i = 0; i < m.exponents.size() && !term.is_zero(); ++i)
            for (int e = 0; e < m.exponents[i]; ++e) term = wedge(term, poly_sub[i]);
        for (int i : m.dt) {
            if (term.is_zero()) break;
            term = wedge(term, form_sub[static_cast<std::size_t>(i)]);
        }
        if (!term.is_zero()) out = out + term;
    }
    return out;
}

Rational integrate(const PolyForm& a) {
    const int n = a.simplex_dim();
    if (a.degree() != n) throw input_error("integrate: form degree must equal simplex dimension");
    Rational total(0);
    for (const auto& [m, c] : a.terms()) {
        // |dt| = n forces dt = (0..n-1); the monomial integral is
        // prod a_i! / (n + sum a_i)!.
        Rational num(1);
        long s = 0;
        for (int e : m.exponents) {
            num *= factorial(e);
            s += e;
        }
        total += c * num / factorial(n + s);
    }
    return total;
}

PolyForm whitney(int n, const std::vector<int>& face_positions) {
    for (std::size_t i = 0; i < face_positions.size(); ++i) {
        if (face_positions[i] < 0 || face_positions[i] > n ||
            (i > 0 && face_positions[i] <= face_positions[i - 1]))
            throw input_error("whitney: bad face positions");
    }
    if (face_positions.empty()) throw input_error("whitney: empty face");
    const int p = static_cast<int>(face_positions.size()) - 1;
    PolyForm out(n, p);
    for (std::size_t k = 0; k < face_positions.size(); ++k) {
        PolyForm term = PolyForm::full_coordinate(n, face_positions[k]);
        if (k % 2 == 1) term = -term;
        for (std::size_t j = 0; j < face_positions.size(); ++j) {
            if (j == k) continue;
            term = wedge(term, PolyForm::full_coordinate_diff(n, face_positions[j]));
        }
        out = out + term;
    }
    return out * factorial(p);
}

std::vector<FormMonomial> monomial_keys(int n, int p, int D) {
    std::vector<FormMonomial> keys;
    if (p < 0 || p > n || D < 0) return keys;

    std::vector<std::vector<int>> exps;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // lexicographic enumeration of exponent vectors with total degree <= D
    auto rec_exp = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            exps.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec_exp(rec_exp, 0, D);

    std::vector<std::vector<int>> subsets;
    std::vector<int> pick;
    auto rec_sub = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == p) {
            subsets.push_back(pick);
            return;
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec_sub(rec_sub, 0);

    for (const auto& e : exps)
        for (const auto& s : subsets) keys.push_back({e, s});
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<PolyForm> monomial_basis(int n, int p, int D) {
    std::vector<PolyForm> basis;
    for (const auto& key : monomial_keys(n, p, D))
        basis.push_back(PolyForm::monomial(n, key.exponents, key.dt, Rational(1)));
    return basis;
}

std::vector<Rational> polyform_coordinates(const PolyForm& a, int D) {
    auto keys = monomial_keys(a.simplex_dim(), a.degree(), D);
    std::vector<Rational> coords(keys.size(), Rational(0));
    std::size_t pos = 0;
    for (const auto& [m, c] : a.terms()) {
        while (pos < keys.size() && keys[pos] < m) ++pos;
        if (pos == keys.size() || !(keys[pos] == m))
            throw internal_error("polyform_coordinates: term outside the coefficient cap");
        coords[pos] = c;
    }
    return coords;
}

PolyForm polyform_from_coordinates(int n, int p, int D, const std::vector<Rational>& coords) {
    auto keys = monomial_keys(n, p, D);
    if (coords.size() != keys.size()) throw input_error("coordinate vector length mismatch");
    PolyForm out(n, p);
    for (std::size_t i = 0; i < keys.size(); ++i) out.add_term(keys[i], coords[i]);
    return out;
}

PolyForm evaluate_on_fields(const PolyForm& a, const std::vector<std::vector<PolyForm>>& fields) {
    const int n = a.simplex_dim();
    const int p = a.degree();
    if (static_cast<int>(fields.size()) != p) throw input_error("evaluate_on_fields: field count != degree");
    for (const auto& f : fields)
        if (static_cast<int>(f.size()) != n) throw input_error("evaluate_on_fields: field component count");

    // det over the polynomial ring, by Laplace expansion along the first row
    auto det = [&](auto&& self, const std::vector<std::vector<PolyForm>>& m) -> PolyForm {
        const std::size_t sz = m.size();
        if (sz == 0) return PolyForm::constant(n, Rational(1));
        if (sz == 1) return m[0][0];
        PolyForm acc(n, 0);
        for (std::size_t j = 0; j < sz; ++j) {
            if (m[0][j].is_zero()) continue;
            std::vector<std::vector<PolyForm>> minor;
            for (std::size_t r = 1; r < sz; ++r) {
                std::vector<PolyForm> row;
                for (std::size_t c = 0; c < sz; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            PolyForm cof = wedge(m[0][j], self(self, minor));
            acc = (j % 2 == 0) ? acc + cof : acc - cof;
        }
        return acc;
    };

    PolyForm out(n, 0);
    for (const auto& [m, c] : a.terms()) {
        // matrix entry (i, j) = j-th field's component along dt_{S_i}
        std::vector<std::vector<PolyForm>> mat;
        for (int s : m.dt) {
            std::vector<PolyForm> row;
            for (int j = 0; j < p; ++j)
                row.push_back(fields[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]);
            mat.push_back(std::move(row));
        }
        PolyForm coeff(n, 0);
        std::vector<int> no_dt;
        coeff.add_term({m.exponents, no_dt}, c);
        out = out + wedge(coeff, det(det, mat));
    }
    return out;
}

} // namespace pwf
