#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bq/bargmann.hpp"
#include "bq/json_io.hpp"
#include "bq/pseudodiff.hpp"
#include "bq/suite.hpp"

namespace {

using bq::Matrix;
using bq::SymbolField;
using bq::UnitaryDual;
using bq::Vector;

Vector make_window(const bq::FiniteGroup& g, const std::string& how, bq::Rng& rng) {
    if (how == "delta-e") {
        Vector v = Vector::Zero(g.order);
        v(g.identity) = 1.0;
        return v;
    }
    if (how == "random") return rng.unit_vector(g.order);
    if (how.rfind("file:", 0) == 0) {
        auto j = nlohmann::json::parse(bq::read_text_file(how.substr(5)));
        Vector v = bq::vector_from_json(j);
        if (v.size() != g.order)
            throw std::invalid_argument("window length does not match the group");
        return v;
    }
    throw CLI::ValidationError("--omega", "expected delta-e, random or file:<path>");
}

SymbolField make_symbol(const bq::FiniteGroup& g, const UnitaryDual& dual,
                        const std::string& how, bq::Rng& rng,
                        bq::Orientation orient) {
    if (how == "one") return bq::symbol_one(dual, g.order, orient);
    if (how == "random") return bq::random_symbol(dual, g.order, rng, orient);
    if (how.rfind("file:", 0) == 0) {
        auto j = nlohmann::json::parse(bq::read_text_file(how.substr(5)));
        SymbolField f = bq::symbol_from_json(dual, g.order, j);
        if (f.orientation != orient)
            f = f.reindexed();
        return f;
    }
    throw CLI::ValidationError("--symbol", "expected one, random or file:<path>");
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void export_matrix(const Matrix& m, const std::string& path) {
    if (ends_with(path, ".csv")) {
        Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
        Eigen::VectorXd ev = es.eigenvalues().reverse();
        bq::write_text_file(path, bq::spectrum_csv(ev));
    } else {
        bq::write_text_file(path, bq::matrix_to_json(m).dump(2) + "\n");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive phase-space quantization toolkit for finite groups"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list-groups", "show the group catalog");

    std::string group_arg, suite_arg = "all", json_path;
    double tol = 1e-10;
    std::uint64_t seed = 7;
    auto* verify_cmd =
        app.add_subcommand("verify", "run a verification suite on a group");
    verify_cmd->add_option("--group", group_arg, "group spec, e.g. cyclic(4)")
        ->required();
    verify_cmd->add_option("--suite", suite_arg,
                           "plancherel|weyl|wigner|coherent|berezin|pseudodiff|"
                           "bargmann|toeplitz|all");
    verify_cmd->add_option("--tol", tol,
                           "baseline tolerance (checks with pinned tolerances "
                           "keep them)");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--json", json_path, "write the JSON report here");

    std::string what, omega_arg = "delta-e", symbol_arg = "one", out_path;
    auto* compute_cmd =
        app.add_subcommand("compute", "compute one object and export it");
    compute_cmd
        ->add_option("--what", what, "berezin|op|symbol|projection|toeplitz")
        ->required();
    compute_cmd->add_option("--group", group_arg, "group spec")->required();
    compute_cmd->add_option("--omega", omega_arg, "delta-e|random|file:<path>");
    compute_cmd->add_option("--symbol", symbol_arg, "one|random|file:<path>");
    compute_cmd->add_option("--seed", seed, "random seed");
    compute_cmd->add_option("--out", out_path, "output path (.csv for spectra)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) {
            std::cout << bq::list_groups_text();
            return 0;
        }

        if (verify_cmd->parsed()) {
            bq::SuiteReport report =
                bq::run_suite(bq::parse_group_spec(group_arg), suite_arg, tol, seed);
            std::cout << bq::suite_report_text(report);
            if (!json_path.empty())
                bq::write_text_file(json_path, bq::suite_report_json(report));
            return report.ok() ? 0 : 1;
        }

        // compute
        bq::FiniteGroup g = bq::build_group(bq::parse_group_spec(group_arg));
        UnitaryDual dual = bq::build_dual(g);
        bq::Rng rng(bq::mix_seed(seed, 1));
        Vector omega = make_window(g, omega_arg, rng);

        if (what == "berezin") {
            SymbolField f =
                make_symbol(g, dual, symbol_arg, rng, bq::Orientation::DualFirst);
            export_matrix(bq::berezin_kernel(g, dual, omega, f).op, out_path);
        } else if (what == "op") {
            SymbolField a =
                make_symbol(g, dual, symbol_arg, rng, bq::Orientation::GroupFirst);
            export_matrix(bq::op_quantize(g, dual, a), out_path);
        } else if (what == "symbol") {
            SymbolField f =
                make_symbol(g, dual, symbol_arg, rng, bq::Orientation::DualFirst);
            SymbolField a = bq::symbol_from_berezin(g, dual, omega, f);
            bq::write_text_file(out_path, bq::symbol_to_json(a).dump(2) + "\n");
        } else if (what == "projection") {
            export_matrix(bq::projection_matrix(g, dual, omega), out_path);
        } else if (what == "toeplitz") {
            SymbolField f =
                make_symbol(g, dual, symbol_arg, rng, bq::Orientation::DualFirst);
            export_matrix(bq::toeplitz(g, dual, omega, f, /*normalize=*/true),
                          out_path);
        } else {
            std::cerr << "unknown --what: " << what << "\n";
            return 2;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
