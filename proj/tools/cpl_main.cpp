#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpl/coloring.hpp"
#include "cpl/containment.hpp"
#include "cpl/graph.hpp"
#include "cpl/params.hpp"
#include "cpl/search.hpp"
#include "cpl/spectral.hpp"
#include "cpl/verify.hpp"

namespace {

// exit codes: 0 pass, 1 verification fail, 2 usage error, 3 resource cap
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

double env_tol() {
    if (const char* s = std::getenv("CPL_TOL")) return std::atof(s);
    return 1e-12;
}

std::string env_cache_dir() {
    if (const char* s = std::getenv("CPL_CACHE_DIR")) return s;
    return ".cpl-cache";
}

nlohmann::json params_json(const cpl::PowerCycleParams& q) {
    nlohmann::json j;
    j["k"] = q.k;
    j["p"] = q.p;
    j["s"] = q.s;
    j["r"] = q.r;
    if (q.r != 0) {
        j["m"] = q.m;
        j["t"] = q.t;
        j["pPrime"] = q.p_prime;
    }
    j["chi"] = q.chi_predicted;
    j["turanApplicable"] = q.turan_applicable;
    j["spectralApplicable"] = q.spectral_applicable;
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle-power extremal graph toolkit"};
    app.require_subcommand(1);

    double tol = env_tol();
    std::string cache_dir = env_cache_dir();
    app.add_option("--tol", tol, "numeric tolerance (env CPL_TOL)");
    app.add_option("--cache-dir", cache_dir, "search cache directory (env CPL_CACHE_DIR)");

    // params
    int pk = 0, pp = 0;
    auto* cmd_params = app.add_subcommand("params", "decomposition of (k, p)");
    cmd_params->add_option("k", pk)->required();
    cmd_params->add_option("p", pp)->required();

    // verify-lemma2
    int kmax = 14, pmax = 3, crit_kmax = 14;
    bool no_crit = false, json_out = false;
    auto* cmd_vl = app.add_subcommand("verify-lemma2",
                                      "chromatic numbers, colorings and criticality on a grid");
    cmd_vl->add_option("--kmax", kmax);
    cmd_vl->add_option("--pmax", pmax);
    cmd_vl->add_option("--crit-kmax", crit_kmax, "criticality checked only for k up to this");
    cmd_vl->add_flag("--no-criticality", no_crit);
    cmd_vl->add_flag("--json", json_out);

    // verify-spectral
    int vn = 0, vk = 0, vp = 0;
    bool vs_json = false;
    auto* cmd_vs = app.add_subcommand("verify-spectral",
                                      "spectral checks on the extremal construction");
    cmd_vs->add_option("n", vn)->required();
    cmd_vs->add_option("k", vk)->required();
    cmd_vs->add_option("p", vp)->required();
    cmd_vs->add_flag("--json", vs_json);

    // search
    std::string mode;
    int sn = 0, sk = 0, sp = 0, seeds = 4;
    long long budget = 2000;
    unsigned seed = 1;
    bool heuristic = false, s_json = false, no_cache = false;
    auto* cmd_search = app.add_subcommand("search", "ex/spex search (exhaustive or heuristic)");
    cmd_search->add_option("mode", mode)->check(CLI::IsMember({"ex", "spex"}))->required();
    cmd_search->add_option("n", sn)->required();
    cmd_search->add_option("k", sk)->required();
    cmd_search->add_option("p", sp)->required();
    cmd_search->add_flag("--heuristic", heuristic, "hill climbing instead of exhaustive sweep");
    cmd_search->add_option("--seed", seed);
    cmd_search->add_option("--seeds", seeds, "number of random restarts");
    cmd_search->add_option("--budget", budget, "steps per restart");
    cmd_search->add_flag("--json", s_json);
    cmd_search->add_flag("--no-cache", no_cache);

    // export
    std::string family, format = "graph6", out_path;
    int en = 0, ek = 0, ep = 0, er = 0;
    std::vector<int> eparts;
    auto* cmd_export = app.add_subcommand("export", "emit a constructed graph");
    cmd_export->add_option("--family", family)
        ->check(CLI::IsMember({"cycle", "cyclepower", "complete", "turan", "multipartite",
                               "extremal"}))
        ->required();
    cmd_export->add_option("-n", en);
    cmd_export->add_option("-k", ek);
    cmd_export->add_option("-p", ep);
    cmd_export->add_option("-r", er);
    cmd_export->add_option("--parts", eparts);
    cmd_export->add_option("--format", format)->check(CLI::IsMember({"graph6", "dot"}));
    cmd_export->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_params->parsed()) {
            try {
                std::cout << params_json(cpl::decompose(pk, pp)).dump(2) << "\n";
            } catch (const cpl::CompleteGraphRegime& e) {
                nlohmann::json j;
                j["regime"] = "complete-graph";
                j["note"] = e.what();
                std::cout << j.dump(2) << "\n";
                return kExitUsage;
            }
            return kExitPass;
        }

        if (cmd_vl->parsed()) {
            auto report = cpl::verify_chromatic_grid(kmax, pmax, !no_crit, crit_kmax);
            if (json_out)
                std::cout << cpl::report_to_json(report) << "\n";
            else
                cpl::print_report(report, std::cout);
            return report.pass() ? kExitPass : kExitFail;
        }

        if (cmd_vs->parsed()) {
            auto report = cpl::verify_spectral_construction(vn, vk, vp, tol);
            if (vs_json)
                std::cout << cpl::report_to_json(report) << "\n";
            else
                cpl::print_report(report, std::cout);
            return report.pass() ? kExitPass : kExitFail;
        }

        if (cmd_search->parsed()) {
            cpl::ResultCache cache{cache_dir};
            cpl::SearchRecord rec;
            bool fresh = true;
            if (heuristic) {
                if (mode == "ex") {
                    std::cerr << "heuristic mode only supports spex\n";
                    return kExitUsage;
                }
                rec = cpl::hillclimb_spex(sn, sk, sp, seeds, budget, seed);
            } else {
                try {
                    std::optional<cpl::SearchRecord> hit;
                    if (!no_cache) hit = cache.load(sn, sk, sp, mode);
                    if (hit) {
                        rec = *hit;
                        fresh = false;
                    } else {
                        rec = (mode == "ex") ? cpl::ex_bruteforce(sn, sk, sp)
                                             : cpl::spex_bruteforce(sn, sk, sp, tol);
                    }
                } catch (const cpl::CapExceeded& e) {
                    std::cerr << e.what() << "\n";
                    return kExitCap;
                }
            }
            if (!no_cache && fresh) cache.store(rec);
            if (s_json) {
                nlohmann::json j = nlohmann::json::parse(cpl::record_to_json(rec));
                j["tol"] = tol;
                j["cacheDir"] = cache_dir;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rec.mode << "(" << rec.n << ", C_" << rec.k << "^" << rec.p
                          << ") = " << rec.value << (rec.exhaustive ? " (exhaustive)" : " (heuristic)")
                          << "\nwitnesses:";
                for (const auto& w : rec.witnesses) std::cout << " " << w;
                std::cout << "\nmethod: " << rec.method << "\n";
            }
            return kExitPass;
        }

        if (cmd_export->parsed()) {
            cpl::Graph g;
            if (family == "cycle")
                g = cpl::cycle(en);
            else if (family == "cyclepower")
                g = cpl::cycle_power(ek, ep);
            else if (family == "complete")
                g = cpl::complete_graph(en);
            else if (family == "turan")
                g = cpl::turan(en, er);
            else if (family == "multipartite")
                g = cpl::complete_multipartite(eparts);
            else
                g = cpl::extremal_construction(en, ek, ep);
            emit(format == "graph6" ? cpl::graph6_encode(g) : cpl::to_dot(g), out_path);
            return kExitPass;
        }
    } catch (const cpl::SolverCapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
