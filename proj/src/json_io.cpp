#include "pwforms/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pwforms/errors.hpp"

namespace pwf {

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
}

std::vector<std::vector<int>> int_lists(const Json& j, const char* field) {
    if (!j.is_array()) throw input_error(std::string(field) + " must be a list of integer lists");
    std::vector<std::vector<int>> out;
    for (const auto& entry : j) {
        if (!entry.is_array()) throw input_error(std::string(field) + " entries must be integer lists");
        std::vector<int> verts;
        for (const auto& v : entry) {
            if (!v.is_number_integer()) throw input_error(std::string(field) + " vertices must be integers");
            verts.push_back(v.get<int>());
        }
        out.push_back(std::move(verts));
    }
    return out;
}

} // namespace

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("top_simplices"))
        throw input_error("complex JSON needs the field 'top_simplices'");
    return SimplicialComplex::from_top_simplices(int_lists(j["top_simplices"], "top_simplices"));
}

SimplicialComplex load_complex(const std::string& path) { return complex_from_json(load_json_file(path)); }

LieAlgebra lie_algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim")) throw input_error("Lie algebra JSON needs the field 'dim'");
    if (!j["dim"].is_number_integer()) throw input_error("'dim' must be an integer");
    LieAlgebra g(j["dim"].get<int>());
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw input_error("'brackets' must be a list");
        for (const auto& b : j["brackets"]) {
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
                throw input_error("bracket entries need fields i, j, coeffs");
            const int i = b["i"].get<int>();
            const int jj = b["j"].get<int>();
            if (i < 0 || jj <= i || jj >= g.dim())
                throw input_error("bracket entries need 0 <= i < j < dim");
            for (const auto& [key, value] : b["coeffs"].items()) {
                int k = 0;
                try {
                    k = std::stoi(key);
                } catch (const std::exception&) {
                    throw input_error("coefficient key must be a basis index: '" + key + "'");
                }
                if (!value.is_string()) throw input_error("scalars must be \"p/q\" strings");
                g.set_bracket(i, jj, k, parse_rational(value.get<std::string>()));
            }
        }
    }
    return g;
}

LieAlgebra load_lie_algebra(const std::string& path) { return lie_algebra_from_json(load_json_file(path)); }

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> cover_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("K1") || !j.contains("K2"))
        throw input_error("cover JSON needs fields 'K1' and 'K2'");
    return {int_lists(j["K1"], "K1"), int_lists(j["K2"], "K2")};
}

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> load_cover(const std::string& path) {
    return cover_from_json(load_json_file(path));
}

Json betti_to_json(const BettiTable& b) {
    Json out = Json::array();
    for (Index v : b) out.push_back(v);
    return out;
}

Json mv_report_to_json(const MVReport& r) {
    Json out;
    out["cover_model"] = r.cover_model;
    out["coeff_degree"] = r.D;
    out["pmax"] = r.pmax;
    out["fiber_dim"] = r.fiber_dim;
    out["truncation_obstruction"] = r.truncation_obstruction;

    Json degrees = Json::array();
    for (const auto& d : r.degrees) {
        degrees.push_back({{"p", d.p},
                           {"dim_K", d.dim_K},
                           {"dim_middle", d.dim_mid},
                           {"dim_W", d.dim_W},
                           {"rank_i", d.rank_i},
                           {"rank_j", d.rank_j},
                           {"ji_zero", d.ji_zero},
                           {"i_injective", d.i_injective},
                           {"middle_exact", d.middle_exact},
                           {"j_surjective", d.j_surjective}});
    }
    out["short_sequences"] = degrees;

    Json connecting = Json::array();
    for (const auto& c : r.connecting) {
        Json entry = {{"p", c.p},
                      {"dim_H_W", c.dim_source},
                      {"dim_H_K_next", c.dim_target},
                      {"rank", c.rank},
                      {"well_defined", c.well_defined}};
        if (!c.obstruction.empty()) entry["obstruction"] = c.obstruction;
        connecting.push_back(std::move(entry));
    }
    out["connecting"] = connecting;

    Json les = Json::array();
    for (const auto& n : r.les) {
        les.push_back({{"p", n.p},
                       {"node", n.node},
                       {"dim", n.dim},
                       {"rank_in", n.rank_in},
                       {"rank_out", n.rank_out},
                       {"exact", n.exact}});
    }
    out["long_sequence"] = les;
    return out;
}

std::string mv_report_to_table(const MVReport& r) {
    std::ostringstream out;
    out << "Mayer-Vietoris report (" << r.cover_model << " cover, D=" << r.D << ", pmax=" << r.pmax
        << ", fiber dim " << r.fiber_dim << ")\n";
    out << "degree  dim(K)  dim(K1+K2)  dim(W)  rank(i)  rank(j)  j.i=0  i-inj  mid-exact  j-surj\n";
    for (const auto& d : r.degrees) {
        out << "  " << d.p << "      " << d.dim_K << "       " << d.dim_mid << "          " << d.dim_W
            << "      " << d.rank_i << "        " << d.rank_j << "      " << (d.ji_zero ? "yes" : "NO")
            << "    " << (d.i_injective ? "yes" : "NO") << "    " << (d.middle_exact ? "yes" : "NO")
            << "        " << (d.j_surjective ? "yes" : "NO") << "\n";
    }
    if (r.truncation_obstruction) {
        out << "truncation obstruction at D=" << r.D << "\n";
        return out.str();
    }
    out << "connecting homomorphisms H^p(W) -> H^{p+1}(K):\n";
    for (const auto& c : r.connecting) {
        out << "  p=" << c.p << ": rank " << c.rank << " (" << c.dim_source << " -> " << c.dim_target
            << "), well-defined: " << (c.well_defined ? "yes" : "NO");
        if (!c.obstruction.empty()) out << ", " << c.obstruction;
        out << "\n";
    }
    out << "long exact sequence nodes:\n";
    for (const auto& n : r.les) {
        out << "  " << n.node << ": dim " << n.dim << ", rank in " << n.rank_in << ", rank out "
            << n.rank_out << ", exact: " << (n.exact ? "yes" : "NO") << "\n";
    }
    return out.str();
}

} // namespace pwf
