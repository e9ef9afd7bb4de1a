// kkw: exact noncommutative-residue boundary terms for Dirac operators on
// 3-, 4- and 6-dimensional manifolds with boundary, with verification
// against the tabulated reference values.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kkw/report.hpp"
#include "kkw/selftest.hpp"
#include "kkw/symbol_library.hpp"

namespace {

uint64_t resolve_seed(const CLI::Option* seed_opt, uint64_t seed_value) {
    if (seed_opt->count() > 0) return seed_value;
    if (const char* env = std::getenv("KKW_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw CLI::ValidationError("KKW_SEED", "not a valid unsigned integer");
        }
    }
    return seed_value;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

kkw::Json symbols_json() {
    using namespace kkw;
    Json out = Json::array();
    struct Row {
        OperatorId op;
        int degree;
    };
    const Row rows[] = {
        {OperatorId::DINV1, -1},        {OperatorId::DINV1, -2},
        {OperatorId::DINV3, -3},        {OperatorId::DINV3, -4},
        {OperatorId::NABLA2, 2},        {OperatorId::NABLA2, 1},
        {OperatorId::NABLA2, 0},        {OperatorId::NABLA2_DINV1, 1},
        {OperatorId::NABLA2_DINV1, 0},  {OperatorId::NABLA2_DINV3, -1},
        {OperatorId::NABLA2_DINV3, -2},
    };
    for (auto& row : rows) {
        SymbolExpr s = get_symbol(row.op, row.degree);
        Json comps = Json::array();
        for (auto& [deg, pm] : s.components())
            for (auto& [pattern, radial] : pm)
                comps.push_back({{"pattern", pattern.to_string()},
                                 {"radial", radial.to_string()}});
        out.push_back({{"operator", operator_name(row.op)},
                       {"degree", row.degree},
                       {"components", std::move(comps)}});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact boundary-term engine for spectral Einstein functionals"};
    app.require_subcommand(1);

    int dim = 0;
    std::string case_filter, path_choice = "both", format = "text", out_path;
    uint64_t seed = 20240801;
    int jobs = 1;
    bool corrupt_pairing = false;

    auto add_common = [&](CLI::App* cmd, bool needs_dim) {
        if (needs_dim)
            cmd->add_option("--dim", dim, "manifold dimension")
                ->required()
                ->check(CLI::IsMember({3, 4, 6}));
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "write the report to a file");
        return cmd->add_option("--seed", seed, "report seed (KKW_SEED as fallback)");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute the boundary term");
    CLI::Option* compute_seed = add_common(compute, true);
    compute->add_option("--case", case_filter, "restrict to one case label");
    compute->add_option("--path", path_choice, "computation path")
        ->check(CLI::IsMember({"full", "transcribed", "both"}));
    compute->add_option("--jobs", jobs, "worker count (results are order-deterministic)")
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "compare against the reference values");
    CLI::Option* verify_seed = add_common(verify, true);

    CLI::App* selftest = app.add_subcommand("selftest", "run the oracle-equivalence suites");
    CLI::Option* selftest_seed =
        selftest->add_option("--seed", seed, "suite seed (KKW_SEED as fallback)");
    selftest->add_flag("--corrupt-pairing-table", corrupt_pairing,
                       "negative control: corrupt the trace pairings")
        ->group("");

    CLI::App* symbols = app.add_subcommand("symbols", "dump the transcribed symbol table");
    symbols->add_option("--out", out_path, "write the dump to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        kkw::PairingTable pairings = kkw::boundary_pairing_table();
        kkw::OpaqueTraceRegistry registry = kkw::default_opaque_registry();

        if (compute->parsed()) {
            uint64_t s = resolve_seed(compute_seed, seed);
            std::vector<kkw::CasePath> paths;
            if (path_choice == "full" || path_choice == "both")
                paths.push_back(kkw::CasePath::FULL_SYMBOLIC);
            if (path_choice == "transcribed" || path_choice == "both")
                paths.push_back(kkw::CasePath::TRANSCRIBED_INTEGRAND);
            kkw::Json j =
                kkw::compute_report_json(dim, paths, case_filter, s, pairings, registry);
            emit(format == "json" ? j.dump(2) : kkw::render_text(j), out_path);
            return 0;
        }
        if (verify->parsed()) {
            uint64_t s = resolve_seed(verify_seed, seed);
            kkw::VerifyReport rep = kkw::build_verify_report(dim, pairings, registry);
            kkw::Json j = kkw::verify_report_json(rep, s);
            emit(format == "json" ? j.dump(2) : kkw::render_text(j), out_path);
            return 0;
        }
        if (selftest->parsed()) {
            uint64_t s = resolve_seed(selftest_seed, seed);
            kkw::SelftestResult res = kkw::run_selftest(s, corrupt_pairing);
            std::string text = "seed " + std::to_string(s) + "\n";
            for (auto& line : res.lines) text += line + "\n";
            text += res.passed ? "all suites passed\n" : "suite failures detected\n";
            emit(text, out_path);
            return res.passed ? 0 : 1;
        }
        if (symbols->parsed()) {
            emit(symbols_json().dump(2), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        kkw::Json err;
        err["error"] = e.what();
        std::cerr << err.dump() << std::endl;
        return 1;
    }
    return 2;
}
