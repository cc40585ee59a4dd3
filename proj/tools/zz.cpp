// zz — command line front end: exact counts and kernels, samplers, the
// paintbox constructions, the ELR model, RSK projections, and the seeded
// experiment runner. All output is JSON on stdout unless a CSV path is
// given explicitly.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zigzag/elr.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/experiment.hpp"
#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/rsk.hpp"
#include "zigzag/walk.hpp"

using json = nlohmann::json;
using namespace zigzag;

namespace {

json intervals_json(const IntervalSystem& u) {
    return json{{"up", u.up_string()}, {"down", u.down_string()}};
}

json piecewise_json(const PiecewisePoly& p) {
    json breaks = json::array();
    for (const Rational& b : p.breaks()) breaks.push_back(rational_string(b));
    json pieces = json::array();
    for (const RatPoly& piece : p.pieces()) {
        json coeffs = json::array();
        for (const Rational& c : piece.coeffs()) coeffs.push_back(rational_string(c));
        pieces.push_back(coeffs);
    }
    return json{{"breakpoints", breaks}, {"pieces", pieces}};
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zigzag lattice toolkit"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, word_s, up_s, down_s, xs_s, csv_path, cfg_path, out_path;
    std::uint64_t samples = 100000, seed = 1;
    int n_arg = 1, k_arg = 1, v_arg = 1;
    bool run_pb = false, exact = false;

    auto* c_count = app.add_subcommand("count", "d(λ): number of standard fillings");
    c_count->add_option("lambda", lambda_s)->required();

    auto* c_kernel = app.add_subcommand("kernel", "Martin kernel K_μ(λ)");
    c_kernel->add_option("mu", mu_s)->required();
    c_kernel->add_option("lambda", lambda_s)->required();
    c_kernel->add_flag("--exact", exact);
    c_kernel->add_option("--mc", samples)->excludes("--exact");
    c_kernel->add_option("--seed", seed);

    auto* c_sample = app.add_subcommand("sample", "uniform standard fillings");
    c_sample->add_option("lambda", lambda_s)->required();
    c_sample->add_option("-n", n_arg);
    c_sample->add_option("--seed", seed);

    std::vector<std::string> pb_args;  // accepts both "paintbox <λ>" and "paintbox of <λ>"
    auto* c_pb = app.add_subcommand("paintbox", "U_λ (or the run paintbox with --run)");
    c_pb->add_option("lambda", pb_args)->required()->expected(1, 2);
    c_pb->add_flag("--run", run_pb);

    auto* c_sig = app.add_subcommand("sigma-u", "apply the paintbox permutation to given points");
    c_sig->add_option("--up", up_s);
    c_sig->add_option("--down", down_s);
    c_sig->add_option("--xs", xs_s)->required();

    auto* c_pu = app.add_subcommand("p-u", "Monte Carlo estimate of P(des(σ_U(k)) = D_μ)");
    c_pu->add_option("--up", up_s);
    c_pu->add_option("--down", down_s);
    c_pu->add_option("--mu", mu_s)->required();
    c_pu->add_option("-n", samples);
    c_pu->add_option("--seed", seed);

    auto* c_elr = app.add_subcommand("elr", "exact chain-model quantities");
    c_elr->require_subcommand(1);
    auto* c_cdf = c_elr->add_subcommand("cdf", "marginal CDFs of (X_λ, Y_λ)");
    c_cdf->add_option("lambda", lambda_s)->required();
    c_cdf->add_option("--emit-csv", csv_path);
    auto* c_vol = c_elr->add_subcommand("volume", "V_λ with n!·V_λ = d(λ)");
    c_vol->add_option("lambda", lambda_s)->required();
    auto* c_val = c_elr->add_subcommand("valley", "P_λ(1 ∈ v)");
    c_val->add_option("lambda", lambda_s)->required();
    c_val->add_option("v", v_arg)->required();

    auto* c_rsk = app.add_subcommand("rsk", "insertion and recording tableaux of a word");
    c_rsk->add_option("word", word_s)->required();

    auto* c_proj = app.add_subcommand("project", "Young-lattice path of a word");
    c_proj->add_option("word", word_s)->required();

    auto* c_link = app.add_subcommand("linkyz", "check the path-count identity for λ");
    c_link->add_option("lambda", lambda_s)->required();

    auto* c_ym = app.add_subcommand("young-marginal", "law of the projected shape at level k");
    c_ym->add_option("lambda", lambda_s)->required();
    c_ym->add_option("k", k_arg)->required();
    c_ym->add_option("-n", samples);
    c_ym->add_option("--seed", seed);

    auto* c_clt = app.add_subcommand("clt", "standardized descent counts of uniform permutations");
    c_clt->add_option("-n", n_arg)->required();
    c_clt->add_option("--samples", samples);
    c_clt->add_option("--seed", seed);
    c_clt->add_option("--emit-csv", csv_path);

    auto* c_lln = app.add_subcommand("lln", "rescaled walk against the limit profile");
    c_lln->add_option("--up", up_s);
    c_lln->add_option("--down", down_s);
    c_lln->add_option("-n", n_arg)->required();
    c_lln->add_option("--samples", samples);
    c_lln->add_option("--seed", seed);
    c_lln->add_option("--emit-csv", csv_path);

    auto* c_run = app.add_subcommand("run", "run a configured experiment");
    c_run->add_option("config", cfg_path)->required();
    c_run->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_count) {
            Composition lam = Composition::parse(lambda_s);
            print(json{{"lambda", lam.to_string()}, {"value", count_fillings(lam).str()}});
        } else if (*c_kernel) {
            Composition mu = Composition::parse(mu_s);
            Composition lam = Composition::parse(lambda_s);
            if (exact || c_kernel->count("--mc") == 0) {
                KernelValue k = martin_kernel(mu, lam);
                print(json{{"lambda", lam.to_string()},
                           {"mu", mu.to_string()},
                           {"value_num", k.num.str()},
                           {"value_den", k.den.str()},
                           {"estimate", k.approx()}});
            } else {
                McEstimate est = estimate_kernel(mu, lam, samples, seed);
                print(json{{"lambda", lam.to_string()},
                           {"mu", mu.to_string()},
                           {"estimate", est.estimate},
                           {"stderr", est.stderror},
                           {"samples", est.samples},
                           {"seed", seed}});
            }
        } else if (*c_sample) {
            Composition lam = Composition::parse(lambda_s);
            FillingSampler sampler(lam);
            Rng rng(seed);
            json words = json::array();
            for (int i = 0; i < n_arg; ++i) words.push_back(sampler.sample(rng).to_string());
            print(json{{"lambda", lam.to_string()}, {"seed", seed}, {"samples", words}});
        } else if (*c_pb) {
            Composition lam = Composition::parse(pb_args.back());
            IntervalSystem u = run_pb ? run_paintbox(lam) : composition_paintbox(lam);
            json j = intervals_json(u);
            j["lambda"] = lam.to_string();
            j["kind"] = run_pb ? "run" : "cell";
            print(j);
        } else if (*c_sig) {
            IntervalSystem u = IntervalSystem::parse(up_s, down_s);
            std::vector<double> xs = parse_doubles(xs_s);
            print(json{{"up", u.up_string()},
                       {"down", u.down_string()},
                       {"sigma", sigma_u(u, xs).to_string()}});
        } else if (*c_pu) {
            IntervalSystem u = IntervalSystem::parse(up_s, down_s);
            Composition mu = Composition::parse(mu_s);
            auto law = estimate_paintbox_law(u, mu, samples, seed);
            print(json{{"mu", mu.to_string()},
                       {"estimate", law.estimate},
                       {"stderr", law.stderror},
                       {"samples", law.samples},
                       {"degenerate", law.degenerate},
                       {"seed", seed}});
        } else if (*c_cdf) {
            Composition lam = Composition::parse(lambda_s);
            ElrMarginals m = marginal_cdfs(lam);
            json j{{"lambda", lam.to_string()},
                   {"volume", rational_string(m.volume)},
                   {"fx", piecewise_json(m.fx)},
                   {"fy", piecewise_json(m.fy)}};
            print(j);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::binary);
                out << "t,fx,fy\n";
                out.precision(17);
                for (int i = 0; i <= 100; ++i) {
                    Rational t(i, 100);
                    out << to_double(t) << ',' << to_double(m.fx.eval(t)) << ','
                        << to_double(m.fy.eval(t)) << '\n';
                }
            }
        } else if (*c_vol) {
            Composition lam = Composition::parse(lambda_s);
            Rational v = volume(lam);
            print(json{{"lambda", lam.to_string()},
                       {"volume", rational_string(v)},
                       {"value_num", numerator(v).str()},
                       {"value_den", denominator(v).str()}});
        } else if (*c_val) {
            Composition lam = Composition::parse(lambda_s);
            Rational p = prob_one_in_valley(lam, v_arg);
            print(json{{"lambda", lam.to_string()},
                       {"valley", v_arg},
                       {"probability", rational_string(p)},
                       {"estimate", to_double(p)}});
        } else if (*c_rsk) {
            Permutation sigma = Permutation::parse(word_s);
            auto [p, q] = rsk(sigma);
            json jp = json::array(), jq = json::array();
            for (const auto& row : p.rows()) jp.push_back(row);
            for (const auto& row : q.rows()) jq.push_back(row);
            print(json{{"word", sigma.to_string()}, {"P", jp}, {"Q", jq},
                       {"shape", p.shape().to_string()}});
        } else if (*c_proj) {
            Permutation sigma = Permutation::parse(word_s);
            json path = json::array();
            for (const Partition& rho : project_path(sigma)) path.push_back(rho.to_string());
            print(json{{"word", sigma.to_string()}, {"path", path}});
        } else if (*c_link) {
            Composition lam = Composition::parse(lambda_s);
            print(json{{"lambda", lam.to_string()}, {"holds", verify_linkyz(lam)}});
        } else if (*c_ym) {
            Composition lam = Composition::parse(lambda_s);
            auto law = projected_marginal(lam, k_arg, samples, seed);
            json shapes = json::array();
            for (const auto& [tau, est] : law)
                shapes.push_back(json{{"shape", tau.to_string()},
                                      {"estimate", est.estimate},
                                      {"stderr", est.stderror},
                                      {"target", est.target}});
            print(json{{"lambda", lam.to_string()}, {"k", k_arg}, {"seed", seed}, {"law", shapes}});
        } else if (*c_clt) {
            CltResult r = clt_experiment(n_arg, samples, seed);
            print(json{{"n", n_arg},
                       {"samples", samples},
                       {"seed", seed},
                       {"ks_to_normal", r.ks_to_normal}});
            if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::binary);
                out << "replicate,statistic\n";
                out.precision(17);
                for (std::size_t i = 0; i < r.standardized.size(); ++i)
                    out << i << ',' << r.standardized[i] << '\n';
            }
        } else if (*c_lln) {
            IntervalSystem u = IntervalSystem::parse(up_s, down_s);
            LlnResult r = lln_experiment(u, n_arg, samples, seed);
            print(json{{"n", n_arg},
                       {"samples", samples},
                       {"seed", seed},
                       {"mean_sup", r.mean_sup},
                       {"max_sup", r.max_sup},
                       {"degenerate", r.degenerate}});
            if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::binary);
                out << "replicate,statistic\n";
                out.precision(17);
                for (std::size_t i = 0; i < r.sups.size(); ++i) out << i << ',' << r.sups[i] << '\n';
            }
        } else if (*c_run) {
            ExperimentConfig cfg = ExperimentConfig::load(cfg_path);
            if (!out_path.empty()) cfg.out_path = out_path;
            ExperimentReport rep;
            if (cfg.experiment == "boundary-convergence")
                rep = run_boundary_convergence(cfg);
            else if (cfg.experiment == "xi-uniformity")
                rep = run_xi_uniformity(cfg);
            else
                throw ConfigMismatch("unknown experiment '" + cfg.experiment + "'");
            if (!cfg.out_path.empty())
                emit(rep, cfg.out_path.size() > 4 && cfg.out_path.substr(cfg.out_path.size() - 4) == ".csv"
                              ? EmitFormat::csv
                              : EmitFormat::json,
                     cfg.out_path);
            else
                std::cout << rep.to_json();
            return rep.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
