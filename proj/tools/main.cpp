#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roughmat/approx.hpp"
#include "roughmat/axioms.hpp"
#include "roughmat/covering.hpp"
#include "roughmat/decompose.hpp"
#include "roughmat/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;  // infeasible, reject, invalid covering
constexpr int kInputError = 2;     // parse or usage problems

// Reads the whole input; "-" means standard input.
std::string slurp(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open file '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

roughmat::BoolMatrix load_matrix(const std::string& path) {
    std::istringstream in(slurp(path));
    return roughmat::parse_matrix(in);
}

roughmat::SetFamily load_family(const std::string& path) {
    std::istringstream in(slurp(path));
    return roughmat::parse_covering(in);
}

std::vector<std::string> split_set_list(const std::string& spec) {
    std::vector<std::string> names;
    if (spec.empty()) return names;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = spec.find(',', start);
        const std::string name = spec.substr(start, comma - start);
        if (name.empty()) throw std::runtime_error("empty element name in --set list");
        names.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return names;
}

std::string join_names(const roughmat::Universe& u, const roughmat::SetVec& s) {
    std::string out;
    for (std::size_t i = 0; i < s.len(); ++i) {
        if (!s.test(i)) continue;
        if (!out.empty()) out += ',';
        out += u.name(i);
    }
    return out;
}

std::size_t exact_bound_from_env() {
    const char* raw = std::getenv("RM_EXACT_BOUND");
    if (raw == nullptr || *raw == '\0') return roughmat::kDefaultExactBound;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
        throw std::runtime_error("RM_EXACT_BOUND must be a positive integer, got '" + std::string(raw) + "'");
    }
    return static_cast<std::size_t>(value);
}

int run_characteristic(const std::string& path, const std::string& which) {
    roughmat::Covering covering = roughmat::validate_covering(load_family(path));
    const roughmat::BoolMatrix m =
        which == "gamma" ? roughmat::gamma(covering) : roughmat::pi(covering);
    std::cout << roughmat::print_matrix(m);
    return kOk;
}

int run_approx(const std::string& path, const std::string& op, const std::string& set_spec) {
    roughmat::Covering covering = roughmat::validate_covering(load_family(path));
    const roughmat::Universe& u = covering.universe();

    roughmat::SetVec query(u.size());
    for (const std::string& name : split_set_list(set_spec)) {
        const auto idx = u.find(name);
        if (!idx) {
            std::cerr << "unknown element '" << name << "'\n";
            return kInputError;
        }
        query.set(*idx);
    }
    const roughmat::OpKind kind = *roughmat::parse_op_kind(op);
    const roughmat::SetVec result = roughmat::matrix_approx(covering, kind, query);
#ifndef NDEBUG
    if (!(roughmat::oracle_approx(covering, kind, query) == result)) {
        throw std::logic_error("matrix/oracle disagreement for --op " + op);
    }
#endif
    std::cout << join_names(u, result) << "\n";
    return kOk;
}

int run_decompose(const std::string& path, const std::string& mode) {
    const roughmat::BoolMatrix b = load_matrix(path);
    if (b.rows() != b.cols()) {
        std::cerr << "decompose needs a square matrix, got " << b.rows() << "x" << b.cols() << "\n";
        return kInputError;
    }
    roughmat::DecomposeResult result{};
    if (mode == "paper") {
        result = roughmat::decompose_paper(b);
    } else if (mode == "exact") {
        result = roughmat::decompose_exact(b, exact_bound_from_env());
    } else {
        result = roughmat::decompose_greedy(b);
    }
    if (!result) {
        std::cerr << result.reason << "\n";
        return kDomainFailure;
    }
    std::cout << roughmat::print_matrix(result.decomposition->a);
    for (const roughmat::SetVec& block : result.decomposition->blocks) {
        bool first = true;
        for (std::size_t i = 0; i < block.len(); ++i) {
            if (!block.test(i)) continue;
            if (!first) std::cout << ' ';
            std::cout << 'x' << (i + 1);
            first = false;
        }
        std::cout << '\n';
    }
    return kOk;
}

int run_check(const std::string& path, const std::string& axiom) {
    const roughmat::BoolMatrix a = load_matrix(path);
    if (a.rows() != a.cols()) {
        std::cerr << "check needs a square matrix, got " << a.rows() << "x" << a.cols() << "\n";
        return kInputError;
    }
    roughmat::CheckResult result;
    if (axiom == "second") {
        result = roughmat::check_second_upper(a);
    } else if (axiom == "fifth") {
        result = roughmat::check_fifth_upper(a);
    } else {
        result = roughmat::check_sixth_upper(a);
    }
    if (!result) {
        std::cout << "REJECT " << result.reason << "\n";
        return kDomainFailure;
    }
    std::cout << "ACCEPT\n";
    if (result.relation) std::cout << roughmat::print_matrix(*result.relation);
    std::cout << roughmat::print_covering(*result.witness);
    return kOk;
}

int run_reduct(const std::string& path, const std::string& kind) {
    roughmat::SetFamily family = load_family(path);
    if (kind == "union") {
        roughmat::Covering covering = roughmat::validate_covering(std::move(family));
        std::cout << roughmat::print_covering(roughmat::reduct(covering));
    } else {
        std::cout << roughmat::print_covering(roughmat::gir(family));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covering rough-set characteristic matrices, approximation operators and B = A*A^T factorization"};
    app.require_subcommand(1);

    std::string file;
    std::string which = "gamma";
    std::string op;
    std::string set_spec;
    std::string mode = "paper";
    std::string axiom;
    std::string kind;

    auto* characteristic = app.add_subcommand("characteristic", "Print the gamma or pi matrix of a covering");
    characteristic->add_option("file", file, "covering file, or - for stdin")->required();
    characteristic->add_option("--which", which, "gamma|pi")
        ->required()
        ->check(CLI::IsMember({"gamma", "pi"}));

    auto* approx = app.add_subcommand("approx", "Apply an approximation operator to a set");
    approx->add_option("file", file, "covering file, or - for stdin")->required();
    approx->add_option("--op", op, "sh|sl|ih|il|xh|xl")
        ->required()
        ->check(CLI::IsMember({"sh", "sl", "ih", "il", "xh", "xl"}));
    approx->add_option("--set", set_spec, "comma-separated element names (empty for the empty set)")
        ->required();

    auto* decompose = app.add_subcommand("decompose", "Factor a square boolean matrix as A*A^T");
    decompose->add_option("file", file, "matrix file, or - for stdin")->required();
    decompose->add_option("--mode", mode, "paper|exact|greedy (default paper)")
        ->check(CLI::IsMember({"paper", "exact", "greedy"}));

    auto* check = app.add_subcommand("check", "Test a singleton-image matrix against an operator axiom");
    check->add_option("file", file, "matrix file, or - for stdin")->required();
    check->add_option("--axiom", axiom, "second|fifth|sixth")
        ->required()
        ->check(CLI::IsMember({"second", "fifth", "sixth"}));

    auto* reduct = app.add_subcommand("reduct", "Reduce a covering (union-reducible or contained blocks)");
    reduct->add_option("file", file, "covering file, or - for stdin")->required();
    reduct->add_option("--kind", kind, "union|gir")
        ->required()
        ->check(CLI::IsMember({"union", "gir"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (app.got_subcommand(characteristic)) return run_characteristic(file, which);
        if (app.got_subcommand(approx)) return run_approx(file, op, set_spec);
        if (app.got_subcommand(decompose)) return run_decompose(file, mode);
        if (app.got_subcommand(check)) return run_check(file, axiom);
        return run_reduct(file, kind);
    } catch (const roughmat::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        // Domain-level refusals: invalid covering, relation predicate
        // violations, size bounds.
        std::cerr << e.what() << "\n";
        return kDomainFailure;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
