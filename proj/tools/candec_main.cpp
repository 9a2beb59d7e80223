#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <candec/decompose.hpp>
#include <candec/errors.hpp>
#include <candec/json_io.hpp>

#include "render.hpp"
#include "worked_examples.hpp"

namespace {

using namespace candec;

struct Job {
    std::string side_text = "schur";
    int n = 1;
    int r = 0;
    std::string input_path;
    std::string output_path;
    std::string coeffs_path;
    std::string order_path;
    bool json_output = false;
    bool with_inverse = false;
    bool explicit_inverse = false;
    bool stable = false;
    std::uint64_t seed = 0;
    Limits limits{};
};

void add_shape_options(CLI::App* cmd, Job& job) {
    cmd->add_option("--side", job.side_text, "schur or partition")->required();
    cmd->add_option("--n", job.n, "dimension of the underlying space")->required();
    cmd->add_option("--r", job.r, "tensor exponent")->required();
}

void add_cap_options(CLI::App* cmd, Job& job) {
    cmd->add_option("--max-group", job.limits.max_group,
                    "largest group order to enumerate");
    cmd->add_option("--max-dim", job.limits.max_dimension,
                    "largest tensor dimension to touch");
    cmd->add_option("--max-oracle-rows", job.limits.max_oracle_rows,
                    "largest deduplicated oracle system");
}

void emit(const Job& job, const std::string& text) {
    if (job.output_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(job.output_path, text);
    }
}

std::vector<Permutation> read_order_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::vector<Permutation> order;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        order.push_back(Permutation::parse(line));
    }
    return order;
}

Invariant read_invariant_checked(const Job& job) {
    Invariant X = read_invariant_json(read_text_file(job.input_path));
    if (X.n != job.n || X.r != job.r) {
        throw DomainError("input file has n=" + std::to_string(X.n) +
                          ", r=" + std::to_string(X.r) +
                          " but the command line says n=" + std::to_string(job.n) +
                          ", r=" + std::to_string(job.r));
    }
    return X;
}

int run_basis(const Job& job) {
    BasisSet basis =
        enumerate_basis(side_from_string(job.side_text), job.n, job.r, job.limits);
    emit(job, job.json_output ? write_basis_json(basis) : render_basis_text(basis));
    return 0;
}

int run_map(const Job& job, const std::string& word) {
    const Side side = side_from_string(job.side_text);
    const Permutation p = Permutation::parse(word);
    EntrySelector sel;
    if (side == Side::Schur) {
        if (p.degree() != job.r) {
            throw DomainError("place-side words must have degree r");
        }
        sel = job.stable ? schur_selector_stable(p, job.n)
                         : schur_selector_in(p, job.n);
    } else {
        if (job.stable) {
            throw DomainError("--stable-fastpath applies to the schur side");
        }
        if (p.degree() != job.n) {
            throw DomainError("value-side words must have degree n");
        }
        sel = partition_selector(p, job.r);
    }
    emit(job, render_selector_text(sel));
    return 0;
}

int run_matrix(const Job& job) {
    const Side side = side_from_string(job.side_text);
    std::optional<std::vector<Permutation>> order;
    if (!job.order_path.empty()) order = read_order_file(job.order_path);
    Subsystem sys = build_subsystem(
        side, job.n, job.r, job.limits,
        job.stable ? SelectorScheme::StablePlace : SelectorScheme::Canonical,
        order ? &*order : nullptr);
    emit(job, render_matrix_report(sys, job.with_inverse));
    return 0;
}

int run_decompose(const Job& job) {
    const Side side = side_from_string(job.side_text);
    const Invariant X = read_invariant_checked(job);
    DecomposeOptions options;
    options.scheme =
        job.stable ? SelectorScheme::StablePlace : SelectorScheme::Canonical;
    options.use_explicit_inverse = job.explicit_inverse;
    options.limits = job.limits;
    std::optional<std::vector<Permutation>> order;
    if (!job.order_path.empty()) {
        order = read_order_file(job.order_path);
        options.order_override = &*order;
    }
    const CoefficientVector c = decompose(X, side, options);
    emit(job, write_coefficients_json(side, job.n, job.r, c));
    return 0;
}

int run_verify(const Job& job) {
    const Side side = side_from_string(job.side_text);
    const Invariant X = read_invariant_checked(job);
    const CoefficientsFile file =
        read_coefficients_json(read_text_file(job.coeffs_path));
    if (file.side != side || file.n != job.n || file.r != job.r) {
        throw DomainError("coefficients file does not match side/n/r");
    }
    const BasisSet basis = enumerate_basis(side, job.n, job.r, job.limits);
    const CoefficientVector c = align_coefficients(basis, file.values);
    const auto violations = verify_residual(X, side, c, job.limits);
    if (violations.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    std::ostringstream out;
    out << violations.size() << " violating coordinate"
        << (violations.size() == 1 ? "" : "s") << ":";
    const std::size_t shown = std::min<std::size_t>(violations.size(), 10);
    for (std::size_t a = 0; a < shown; ++a) {
        out << " (" << multi_index_unrank(violations[a].row, job.n, job.r).to_string()
            << "|" << multi_index_unrank(violations[a].col, job.n, job.r).to_string()
            << ")";
    }
    out << "\n";
    std::cerr << out.str();
    return 2;
}

int run_oracle(const Job& job) {
    const Side side = side_from_string(job.side_text);
    const Invariant X = read_invariant_checked(job);
    const OracleResult result = oracle_full_solve(X, side, job.limits);
    if (!result.in_span) {
        std::cerr << "input is not in the span of the canonical basis\n";
        return 2;
    }
    emit(job, write_coefficients_json(side, job.n, job.r, result.coefficients));
    return 0;
}

int run_random(const Job& job) {
    const Side side = side_from_string(job.side_text);
    auto [X, c] = random_invariant(side, job.n, job.r, job.seed, job.limits);
    emit(job, write_invariant_json(X));
    if (!job.coeffs_path.empty()) {
        write_text_file(job.coeffs_path,
                        write_coefficients_json(side, job.n, job.r, c));
    }
    return 0;
}

int run_examples() {
    bool all_ok = true;
    for (const WorkedExample& example : run_worked_examples()) {
        if (example.ok()) {
            std::cout << "ok " << example.name << "\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << example.name << "\n--- expected ---\n"
                      << example.expected << "--- actual ---\n"
                      << example.actual;
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decomposition over canonical permutation bases"};
    app.require_subcommand(1);
    Job job;
    std::string word;

    CLI::App* basis = app.add_subcommand("basis", "list a canonical basis");
    add_shape_options(basis, job);
    add_cap_options(basis, job);
    basis->add_flag("--json", job.json_output, "emit JSON instead of text");

    CLI::App* map = app.add_subcommand("map", "print the selector of an element");
    add_shape_options(map, job);
    map->add_option("word", word, "one-line word, e.g. 2,1,3")->required();
    map->add_flag("--stable-fastpath", job.stable,
                  "use the n >= r selector (schur side)");

    CLI::App* matrix = app.add_subcommand("matrix", "emit the subsystem matrix");
    add_shape_options(matrix, job);
    add_cap_options(matrix, job);
    matrix->add_flag("--inverse", job.with_inverse,
                     "also emit A^-1 and the solved formulas");
    matrix->add_option("--order-file", job.order_path,
                       "file listing the basis in a custom row order");
    matrix->add_flag("--stable-fastpath", job.stable,
                     "use the n >= r selector scheme (schur side)");

    CLI::App* dec = app.add_subcommand("decompose",
                                       "express an invariant over the basis");
    add_shape_options(dec, job);
    add_cap_options(dec, job);
    dec->add_option("--input", job.input_path, "invariant JSON file")->required();
    dec->add_option("--output", job.output_path, "coefficients JSON path");
    dec->add_flag("--explicit-inverse", job.explicit_inverse,
                  "solve by multiplying with A^-1 instead of back substitution");
    dec->add_flag("--stable-fastpath", job.stable,
                  "use the n >= r selector scheme (schur side)");
    dec->add_option("--order-file", job.order_path,
                    "file listing the basis in a custom row order");

    CLI::App* verify = app.add_subcommand("verify",
                                          "check a coefficients file against an invariant");
    add_shape_options(verify, job);
    add_cap_options(verify, job);
    verify->add_option("--input", job.input_path, "invariant JSON file")->required();
    verify->add_option("--coeffs", job.coeffs_path, "coefficients JSON file")
        ->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "independent full-system check of an invariant");
    add_shape_options(oracle, job);
    add_cap_options(oracle, job);
    oracle->add_option("--input", job.input_path, "invariant JSON file")->required();
    oracle->add_option("--output", job.output_path, "coefficients JSON path");

    CLI::App* random = app.add_subcommand(
        "random", "deterministic seeded invariant in the span");
    add_shape_options(random, job);
    add_cap_options(random, job);
    random->add_option("--seed", job.seed, "PRNG seed")->required();
    random->add_option("--output", job.output_path, "invariant JSON path");
    random->add_option("--coeffs-out", job.coeffs_path,
                       "also write the generating coefficients here");

    CLI::App* examples = app.add_subcommand(
        "examples", "self-check every embedded worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 3;
    }

    try {
        if (app.got_subcommand(basis)) return run_basis(job);
        if (app.got_subcommand(map)) return run_map(job, word);
        if (app.got_subcommand(matrix)) return run_matrix(job);
        if (app.got_subcommand(dec)) return run_decompose(job);
        if (app.got_subcommand(verify)) return run_verify(job);
        if (app.got_subcommand(oracle)) return run_oracle(job);
        if (app.got_subcommand(random)) return run_random(job);
        if (app.got_subcommand(examples)) return run_examples();
    } catch (const NotInSpanError& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const CapExceeded& error) {
        std::cerr << error.what() << "\n";
        return 4;
    } catch (const DomainError& error) {
        std::cerr << error.what() << "\n";
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
