// Batch front end: parse inputs, dispatch to the library, emit reproducible
// JSON/CSV reports. Exit codes: 0 success, 1 input error, 2 suite failure.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "summa/banach.hpp"
#include "summa/grothendieck.hpp"
#include "summa/io.hpp"
#include "summa/suite.hpp"

using namespace summa;
using nlohmann::json;

namespace {

struct Options {
    std::uint64_t seed = 42;
    long samples = 100000;
    int restarts = 32;
    double tol = 1e-8;
    std::string output = "json";
};

Exponent exp_of(const std::string& s) { return io::parse_exponent(json(s)); }

Operator load_operator(const std::string& path, const std::string& p, const std::string& q) {
    Matrix a = io::load_matrix(path);
    return Operator(a, SpaceSpec(static_cast<int>(a.cols()), exp_of(p)),
                    SpaceSpec(static_cast<int>(a.rows()), exp_of(q)));
}

WitnessBudget budget_of(const Options& o) {
    WitnessBudget b;
    b.seed = o.seed;
    b.families = o.restarts * 2;
    return b;
}

RandomPlan plan_of(const Options& o, double moment_p = 2.0) {
    return RandomPlan(o.seed, o.samples, moment_p);
}

void emit(const Options& o, const std::string& command, json result) {
    json rep{{"version", kVersion},
             {"seed", o.seed},
             {"config",
              {{"samples", o.samples}, {"restarts", o.restarts}, {"tol", o.tol}}},
             {"command", command},
             {"result", std::move(result)}};
    std::cout << rep.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator ideal norms on finite-dimensional sequence spaces"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "base RNG seed")->capture_default_str();
    app.add_option("--samples", opt.samples, "Monte Carlo samples")->capture_default_str();
    app.add_option("--restarts", opt.restarts, "search restarts")->capture_default_str();
    app.add_option("--tol", opt.tol, "tolerance")->capture_default_str();
    app.add_option("--output", opt.output, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string matrix_file, family_file, p = "2", q = "2", host = "2";
    double moment_p = 2.0, alpha = 0.5, qq = 2.0, pp = 2.0;
    bool have_alpha = false, quick = false, want_ratio = false;
    std::string sigma_csv, dims_csv, cert_file, out_file;
    int dim = 2, k = 2, m = 2;

    std::function<int()> action;

    auto* hs = app.add_subcommand("hs", "Hilbert-Schmidt (Frobenius) norm");
    hs->add_option("--matrix", matrix_file)->required();
    hs->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, "2", "2");
            emit(opt, "hs", io::estimate_to_json(NormEstimate::exact(hs_norm(u))));
            return 0;
        };
    });

    auto* opn = app.add_subcommand("opnorm", "lp -> lq operator norm");
    opn->add_option("--matrix", matrix_file)->required();
    opn->add_option("--p", p);
    opn->add_option("--q", q);
    opn->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, p, q);
            detail::AscentConfig cfg;
            cfg.restarts = opt.restarts;
            emit(opt, "opnorm",
                 {{"estimate", io::estimate_to_json(op_norm(u, kDefaultEnumCap, cfg))},
                  {"upper", io::estimate_to_json(op_norm_upper(u))}});
            return 0;
        };
    });

    auto* wk = app.add_subcommand("weaknorm", "weak-lp norm of a vector family");
    wk->add_option("--family", family_file)->required();
    wk->add_option("--p", p);
    wk->callback([&] {
        action = [&] {
            VectorFamily fam = io::load_family(family_file);
            emit(opt, "weaknorm",
                 {{"estimate", io::estimate_to_json(weak_lp_norm(fam, exp_of(p)))},
                  {"upper", io::estimate_to_json(weak_lp_upper(fam, exp_of(p)))}});
            return 0;
        };
    });

    auto* rad = app.add_subcommand("radmoment", "exact Rademacher sum moment");
    rad->add_option("--family", family_file)->required();
    rad->add_option("--p", moment_p);
    rad->callback([&] {
        action = [&] {
            VectorFamily fam = io::load_family(family_file);
            emit(opt, "radmoment",
                 io::estimate_to_json(
                     NormEstimate::exact(rademacher_moment(fam, moment_p), "sign enumeration")));
            return 0;
        };
    });

    auto* gm = app.add_subcommand("gaussmoment", "Gaussian sum moment");
    gm->add_option("--family", family_file)->required();
    gm->add_option("--p", moment_p);
    gm->callback([&] {
        action = [&] {
            VectorFamily fam = io::load_family(family_file);
            emit(opt, "gaussmoment",
                 io::estimate_to_json(gaussian_moment(fam, plan_of(opt, moment_p))));
            return 0;
        };
    });

    auto* pi2 = app.add_subcommand("pi2", "2-summing bracket with Pietsch certificate");
    pi2->add_option("--matrix", matrix_file)->required();
    pi2->add_option("--p", p);
    pi2->add_option("--q", q);
    pi2->add_option("--cert", cert_file, "write the certificate to this file");
    pi2->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, p, q);
            auto res = pi_2_upper(u, 64, kDefaultEnumCap, opt.seed);
            if (!res) {
                std::cerr << "pi2: dual set does not span the row space\n";
                return 1;
            }
            if (!cert_file.empty()) {
                std::ofstream out(cert_file);
                out << io::certificate_to_json(res->certificate).dump(2) << "\n";
            }
            emit(opt, "pi2",
                 {{"upper", io::estimate_to_json(res->bound)},
                  {"lower", io::estimate_to_json(pi_p_lower(u, 2.0, budget_of(opt)))},
                  {"certificate", io::certificate_to_json(res->certificate)}});
            return 0;
        };
    });

    auto* pi1 = app.add_subcommand("pi1-lb", "1-summing witness lower bound");
    pi1->add_option("--matrix", matrix_file)->required();
    pi1->add_option("--p", p);
    pi1->add_option("--q", q);
    pi1->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, p, q);
            emit(opt, "pi1-lb", io::estimate_to_json(pi_p_lower(u, 1.0, budget_of(opt))));
            return 0;
        };
    });

    auto* gam = app.add_subcommand("gamma", "gamma-summing witness lower bound");
    gam->add_option("--matrix", matrix_file)->required();
    gam->add_option("--p", p);
    gam->add_option("--q", q);
    gam->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, p, q);
            emit(opt, "gamma",
                 io::estimate_to_json(gamma_summing_lower(u, budget_of(opt), plan_of(opt))));
            return 0;
        };
    });

    auto* pie = app.add_subcommand("pietsch", "Pietsch factorization through weighted l2");
    pie->add_option("--matrix", matrix_file)->required();
    pie->add_option("--p", p);
    pie->add_option("--q", q);
    pie->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, p, q);
            auto res = pi_2_upper(u, 64, kDefaultEnumCap, opt.seed);
            if (!res) {
                std::cerr << "pietsch: dual set does not span the row space\n";
                return 1;
            }
            PietschFactorization f = pietsch_factorize(u, res->certificate);
            emit(opt, "pietsch",
                 {{"constant", res->certificate.constant},
                  {"residual", f.residual},
                  {"factor_norm", svd(f.uhat).singular[0]},
                  {"certificate", io::certificate_to_json(res->certificate)}});
            return 0;
        };
    });

    auto* nuc = app.add_subcommand("nuclear", "rank-expanded nuclear representation");
    nuc->add_option("--matrix", matrix_file)->required();
    nuc->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, "2", "2");
            const NuclearRep rep = weak_star_nuclear_rep(u);
            json tau = json::array();
            for (int j = 0; j < rep.terms(); ++j) tau.push_back(rep.tau[j]);
            emit(opt, "nuclear",
                 {{"terms", rep.terms()},
                  {"tau", tau},
                  {"weak_l1", rep.weak_l1_norm()},
                  {"residual", (rep.reconstruct(u.domain.dim) - u.matrix).norm()}});
            return 0;
        };
    });

    auto* gro = app.add_subcommand("grothendieck", "inf->1 norm vs Hilbertian bilinear sup");
    gro->add_option("--matrix", matrix_file)->required();
    gro->add_flag("--ratio", want_ratio, "report only the ratio");
    gro->callback([&] {
        action = [&] {
            Matrix a = io::load_matrix(matrix_file);
            BilinearBudget b;
            b.seed = opt.seed;
            b.restarts = opt.restarts;
            const double base = norm_inf_to_1(a);
            const NormEstimate bil = bilinear_hilbert_sup(a, b);
            json res{{"inf_to_1", base},
                     {"bilinear", io::estimate_to_json(bil)},
                     {"ratio", base > 0.0 ? bil.value / base : 0.0}};
            if (want_ratio) res = {{"ratio", res.at("ratio")}};
            emit(opt, "grothendieck", res);
            return 0;
        };
    });

    auto* dc = app.add_subcommand("diag-classify", "diagonal multiplier classification");
    dc->add_option("--p", pp)->required();
    dc->add_option("--q", qq)->required();
    dc->add_option("--alpha", alpha, "power law sigma_n = n^-alpha");
    dc->add_option("--sigma", sigma_csv, "explicit entries, comma separated");
    dc->callback([&] {
        have_alpha = dc->count("--alpha") > 0;
        action = [&] {
            DiagonalSpec spec;
            spec.p = Exponent(pp);
            spec.q = Exponent(qq);
            if (have_alpha) spec.alpha = alpha;
            if (!sigma_csv.empty()) {
                std::istringstream in(sigma_csv);
                spec.sigma_list = io::matrix_from_csv(in).row(0).transpose();
            }
            const ClassificationVerdict v = diag_classify(spec);
            emit(opt, "diag-classify",
                 {{"gamma_radonifying", v.gamma_radonifying},
                  {"criterion", v.criterion},
                  {"r", v.r}});
            return 0;
        };
    });

    auto* dg = app.add_subcommand("diag-growth", "truncated diagonal growth table");
    dg->add_option("--p", pp)->required();
    dg->add_option("--q", qq)->required();
    dg->add_option("--alpha", alpha)->required();
    dg->add_option("--dims", dims_csv, "comma separated, default 2..64 ladder");
    dg->callback([&] {
        action = [&] {
            DiagonalSpec spec;
            spec.p = Exponent(pp);
            spec.q = Exponent(qq);
            spec.alpha = alpha;
            std::vector<int> dims = default_growth_dims();
            if (!dims_csv.empty()) {
                dims.clear();
                std::istringstream in(dims_csv);
                const Matrix row = io::matrix_from_csv(in);
                for (int i = 0; i < row.cols(); ++i)
                    dims.push_back(static_cast<int>(row(0, i)));
            }
            const GrowthTable t =
                diag_growth_experiment(spec, dims, plan_of(opt), budget_of(opt));
            if (opt.output == "csv") {
                std::cout << "dim,value,kind\n";
                for (std::size_t i = 0; i < t.dims.size(); ++i)
                    std::cout << t.dims[i] << "," << t.values[i] << "," << t.kinds[i] << "\n";
                return 0;
            }
            emit(opt, "diag-growth",
                 {{"dims", t.dims},
                  {"values", t.values},
                  {"kinds", t.kinds},
                  {"slope", t.slope},
                  {"ls_slope", t.ls_slope}});
            return 0;
        };
    });

    auto* cot = app.add_subcommand("cotype", "cotype constant witness lower bound");
    cot->add_option("--dim", dim)->required();
    cot->add_option("--host", host, "space exponent");
    cot->add_option("--q", qq);
    cot->callback([&] {
        action = [&] {
            emit(opt, "cotype",
                 io::estimate_to_json(
                     cotype_constant_lower(SpaceSpec(dim, exp_of(host)), qq, budget_of(opt))));
            return 0;
        };
    });

    auto* typ = app.add_subcommand("type", "type constant witness lower bound");
    typ->add_option("--dim", dim)->required();
    typ->add_option("--host", host, "space exponent");
    typ->add_option("--p", pp);
    typ->callback([&] {
        action = [&] {
            emit(opt, "type",
                 io::estimate_to_json(
                     type_constant_lower(SpaceSpec(dim, exp_of(host)), pp, budget_of(opt))));
            return 0;
        };
    });

    auto* ph = app.add_subcommand("phs", "pre-Hilbert-Schmidt truncation lower bound");
    ph->add_option("--matrix", matrix_file)->required();
    ph->add_option("--p", p);
    ph->add_option("--q", q);
    ph->add_option("--k", k)->required();
    ph->add_option("--m", m)->required();
    ph->callback([&] {
        action = [&] {
            Operator u = load_operator(matrix_file, p, q);
            emit(opt, "phs", io::estimate_to_json(phs_lower(u, k, m, budget_of(opt))));
            return 0;
        };
    });

    auto* su = app.add_subcommand("suite", "run the verification suite");
    su->add_flag("--quick", quick, "reduced sample counts");
    su->add_option("--out", out_file, "also write the report to this file");
    su->callback([&] {
        action = [&] {
            SuiteConfig cfg;
            cfg.seed = opt.seed;
            cfg.quick = quick;
            const SuiteReport rep = run_suite(cfg);
            const json j = suite_report_json(rep);
            std::cout << j.dump(2) << "\n";
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << j.dump(2) << "\n";
            }
            return rep.all_pass() ? 0 : 2;
        };
    });

    CLI11_PARSE(app, argc, argv);
    if (const char* env = std::getenv("SUMMA_SEED"))
        opt.seed = std::strtoull(env, nullptr, 10);

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
