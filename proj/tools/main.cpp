#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pwforms/algebroid.hpp"
#include "pwforms/errors.hpp"
#include "pwforms/json_io.hpp"
#include "pwforms/mayer_vietoris.hpp"
#include "pwforms/piecewise.hpp"
#include "pwforms/sampling.hpp"
#include "pwforms/verify.hpp"

namespace {

using namespace pwf;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitValidation = 4;

struct Options {
    int coeff_degree = 2;
    int max_degree = -1;
    bool json = false;
    std::uint64_t seed = 7;
};

std::string yesno(bool b) { return b ? "yes" : "NO"; }

// I.W = id and coboundary.I = I.d over all degrees, at cap max(D, 1).
std::pair<bool, bool> integration_certificate(const SimplicialComplex& k, int D) {
    const int cap = std::max(D, 1);
    bool iw = true, stokes = true;
    for (int p = 0; p <= k.dim(); ++p) {
        PsBasis basis = ps_basis(k, p, cap);
        SparseMatrix I_p = integration_matrix(basis);
        SparseMatrix W = whitney_matrix(basis);
        if (!(I_p * W == SparseMatrix::identity(static_cast<Index>(k.simplices(p).size())))) iw = false;
        if (p < k.dim()) {
            PsBasis next = ps_basis(k, p + 1, cap);
            if (!(coboundary_matrix(k, p) * I_p ==
                  integration_matrix(next) * ps_differential_matrix(basis, next)))
                stokes = false;
        }
    }
    return {iw, stokes};
}

int cmd_betti(const std::string& path, const Options& opt) {
    SimplicialComplex k = load_complex(path);
    const int pmax = opt.max_degree >= 0 ? opt.max_degree : std::max(k.dim(), 0);

    BettiTable ps = ps_betti(k, opt.coeff_degree, pmax);
    BettiTable ps_next = ps_betti(k, opt.coeff_degree + 1, pmax);
    BettiTable simp = simplicial_betti(k);
    simp.resize(static_cast<std::size_t>(pmax) + 1, 0);
    auto [iw, stokes] = integration_certificate(k, opt.coeff_degree);

    if (opt.json) {
        Json out;
        out["command"] = "betti";
        out["coeff_degree"] = opt.coeff_degree;
        out["max_degree"] = pmax;
        out["ps_betti"] = betti_to_json(ps);
        out["ps_betti_next"] = betti_to_json(ps_next);
        out["stable"] = ps == ps_next;
        out["simplicial_betti"] = betti_to_json(simp);
        out["oracle_match"] = ps == simp;
        out["iw_identity"] = iw;
        out["stokes"] = stokes;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "complex: dim " << k.dim() << ", " << k.vertex_count() << " vertices\n";
        std::cout << "ps betti (D=" << opt.coeff_degree << "):   " << betti_to_string(ps) << "\n";
        std::cout << "ps betti (D=" << opt.coeff_degree + 1 << "):   " << betti_to_string(ps_next)
                  << "\n";
        std::cout << "stabilization:    " << (ps == ps_next ? "agree" : "DISAGREE") << "\n";
        std::cout << "simplicial betti: " << betti_to_string(simp) << "\n";
        std::cout << "oracle match:     " << yesno(ps == simp) << "\n";
        std::cout << "I.W = id:         " << yesno(iw) << "\n";
        std::cout << "Stokes d.I = I.d: " << yesno(stokes) << "\n";
    }
    return kExitOk;
}

int cmd_ce_betti(const std::string& path, const Options& opt) {
    LieAlgebra g = load_lie_algebra(path);
    auto violation = g.validate();
    if (violation) {
        if (opt.json) {
            Json out;
            out["command"] = "ce-betti";
            out["jacobi_ok"] = false;
            out["violation"] = {violation->i, violation->j, violation->k};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "Jacobi identity fails at triple " << violation->to_string() << "\n";
        }
        return kExitValidation;
    }
    BettiTable b = ce_betti(g);
    if (opt.json) {
        Json out;
        out["command"] = "ce-betti";
        out["jacobi_ok"] = true;
        out["dim"] = g.dim();
        out["betti"] = betti_to_json(b);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "Jacobi OK; Betti " << betti_to_string(b) << "\n";
    }
    return kExitOk;
}

int cmd_algebroid_betti(const std::string& complex_path, const std::string& algebra_path,
                        const Options& opt) {
    SimplicialComplex k = load_complex(complex_path);
    LieAlgebra g = load_lie_algebra(algebra_path);
    if (auto violation = g.validate()) {
        std::cerr << "Jacobi identity fails at triple " << violation->to_string() << "\n";
        return kExitValidation;
    }

    const int rmax = opt.max_degree >= 0 ? opt.max_degree : std::max(k.dim(), 0) + g.dim();
    TensorModel model(k, g, opt.coeff_degree, rmax);
    BettiTable got = algebroid_betti(model);
    BettiTable convolution =
        betti_convolution(ps_betti(k, opt.coeff_degree), ce_betti(g), rmax);
    const bool kunneth_ok = got == convolution;

    // a few seeded consistency samples of the intrinsic differential
    int koszul_checked = 0, koszul_ok = 0;
    if (!k.empty()) {
        Simplex top = k.maximal_simplices().front();
        for (const Simplex& s : k.maximal_simplices())
            if (s.dim() > top.dim()) top = s;
        Sampler sampler(opt.seed);
        for (int trial = 0; trial < 5; ++trial) {
            const int r = static_cast<int>(sampler.uniform(0, 2));
            std::vector<Rational> coords;
            for (Index i = 0; i < model.dimension(r); ++i) coords.push_back(sampler.rational(4, 3));
            std::vector<Section> sections;
            for (int i = 0; i <= r; ++i) sections.push_back(sampler.section(top.dim(), g.dim(), 2));
            KoszulCheckResult check =
                koszul_check(model, algebroid_form_from_coordinates(model, r, coords), top, sections);
            ++koszul_checked;
            if (check.equal) ++koszul_ok;
        }
    }

    if (opt.json) {
        Json out;
        out["command"] = "algebroid-betti";
        out["coeff_degree"] = opt.coeff_degree;
        out["max_degree"] = rmax;
        out["betti"] = betti_to_json(got);
        out["convolution"] = betti_to_json(convolution);
        out["kunneth_ok"] = kunneth_ok;
        out["koszul_samples"] = koszul_checked;
        out["koszul_agree"] = koszul_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "tensor betti:  " << betti_to_string(got) << "\n";
        std::cout << "convolution:   " << betti_to_string(convolution) << "\n";
        std::cout << "Kunneth:       " << (kunneth_ok ? "OK" : "MISMATCH") << "\n";
        std::cout << "Koszul checks: " << koszul_ok << "/" << koszul_checked << " agree\n";
    }
    return kunneth_ok ? kExitOk : kExitInternal;
}

int cmd_mv_report(const std::string& complex_path, const std::string& cover_path,
                  const std::string& algebra_path, const Options& opt) {
    SimplicialComplex k = load_complex(complex_path);
    auto [tops1, tops2] = load_cover(cover_path);
    SimplicialComplex k1 = subcomplex(k, tops1);
    SimplicialComplex k2 = subcomplex(k, tops2);
    LieAlgebra g = algebra_path.empty() ? LieAlgebra::abelian(0) : load_lie_algebra(algebra_path);
    if (auto violation = g.validate()) {
        std::cerr << "Jacobi identity fails at triple " << violation->to_string() << "\n";
        return kExitValidation;
    }

    MVSetup setup = make_mv_setup(k, k1, k2, g, opt.coeff_degree, opt.max_degree);
    auto reports = mv_report_with_retry(setup);

    if (opt.json) {
        Json out;
        out["command"] = "mv-report";
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(mv_report_to_json(r));
        out["reports"] = list;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << mv_report_to_table(r) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    auto results = run_acceptance(opt.seed);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;

    if (opt.json) {
        Json out;
        out["command"] = "verify";
        out["seed"] = opt.seed;
        Json list = Json::array();
        for (const auto& r : results)
            list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        out["criteria"] = list;
        out["all_pass"] = all;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " — " << r.detail
                      << "\n";
        std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    }
    return all ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of piecewise polynomial forms over simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--coeff-degree", opt.coeff_degree, "coefficient degree cap D")->check(CLI::NonNegativeNumber);
    app.add_option("--max-degree", opt.max_degree, "maximum form degree");
    app.add_flag("--json", opt.json, "emit JSON instead of tables");
    app.add_option("--seed", opt.seed, "seed for randomized checks");

    std::string complex_path, algebra_path, cover_path;

    CLI::App* betti = app.add_subcommand("betti", "piecewise cohomology of a complex, with oracle");
    betti->add_option("complex", complex_path, "complex JSON file")->required();

    CLI::App* ce = app.add_subcommand("ce-betti", "Chevalley-Eilenberg cohomology of a Lie algebra");
    ce->add_option("algebra", algebra_path, "Lie algebra JSON file")->required();

    CLI::App* alg = app.add_subcommand("algebroid-betti", "cohomology of the trivial algebroid");
    alg->add_option("complex", complex_path, "complex JSON file")->required();
    alg->add_option("algebra", algebra_path, "Lie algebra JSON file")->required();

    CLI::App* mv = app.add_subcommand("mv-report", "Mayer-Vietoris exactness report for a cover");
    mv->add_option("complex", complex_path, "complex JSON file")->required();
    mv->add_option("cover", cover_path, "cover JSON file")->required();
    mv->add_option("algebra", algebra_path, "optional Lie algebra JSON file");

    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti->parsed()) return cmd_betti(complex_path, opt);
        if (ce->parsed()) return cmd_ce_betti(algebra_path, opt);
        if (alg->parsed()) return cmd_algebroid_betti(complex_path, algebra_path, opt);
        if (mv->parsed()) return cmd_mv_report(complex_path, cover_path, algebra_path, opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const pwf::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const pwf::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const pwf::internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
