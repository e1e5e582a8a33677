// Acceptance suite: one pass/fail line per criterion. Criterion 10 drives the
// command-line binary, whose path arrives as argv[1].

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "roughmat/approx.hpp"
#include "roughmat/axioms.hpp"
#include "roughmat/covering.hpp"
#include "roughmat/decompose.hpp"
#include "roughmat/io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace roughmat;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double elapsed_ms = 0.0;
    double limit_ms = -1.0;  // negative: no runtime requirement
};

class Check {
public:
    explicit Check(Outcome& outcome) : outcome_(outcome) {}

    void expect(bool cond, const std::string& what) {
        if (!cond && outcome_.pass) {
            outcome_.pass = false;
            outcome_.detail = what;
        }
    }

private:
    Outcome& outcome_;
};

// ---- shared fixtures -------------------------------------------------------

const char* kPiGolden =
    "6 6\n"
    "1 0 0 0 0 0\n"
    "1 1 0 0 0 0\n"
    "1 0 1 1 0 0\n"
    "0 0 0 1 0 0\n"
    "0 0 0 1 1 1\n"
    "0 0 0 1 1 1\n";

const char* kGammaGolden =
    "6 6\n"
    "1 1 1 1 0 0\n"
    "1 1 1 1 0 0\n"
    "1 1 1 1 0 0\n"
    "1 1 1 1 1 1\n"
    "0 0 0 1 1 1\n"
    "0 0 0 1 1 1\n";

const char* kExampleCoveringFile = "a b c d e f\na b\na c d\na b c d\nd e f\n";

BoolMatrix decomposition_example_b() {
    return testutil::mat("11010;11010;00110;11110;00000");
}

BoolMatrix counterexample6() {
    BoolMatrix b = BoolMatrix::identity(6);
    const std::pair<int, int> edges[] = {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5},
                                         {4, 5}, {1, 5}, {1, 6}, {5, 6}};
    for (auto [i, j] : edges) {
        b.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        b.set(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
    }
    return b;
}

// The shared random covering population for criteria 6 and 7.
std::vector<Covering> shared_coverings() {
    std::mt19937 rng(0xC0FFEE);
    std::vector<Covering> out;
    out.reserve(500);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i) % 6;        // 2..7
        const std::size_t blocks = 2 + static_cast<std::size_t>(i) % 5;   // 2..6
        out.push_back(testutil::random_covering(rng, n, blocks));
    }
    return out;
}

std::vector<SetVec> queries_for(std::mt19937& rng, std::size_t n) {
    std::vector<SetVec> out;
    if (n <= 5) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            out.push_back(SetVec::from_mask(n, mask));
        }
    } else {
        for (int i = 0; i < 50; ++i) out.push_back(testutil::random_subset(rng, n));
    }
    return out;
}

// ---- criteria --------------------------------------------------------------

void criterion_pi_golden(Outcome& out, Check& check) {
    out.limit_ms = 1.0;
    const Universe u = testutil::universe({"a", "b", "c", "d", "e", "f"});
    const SetFamily family =
        testutil::family(u, {{"a", "b"}, {"a", "c", "d"}, {"a", "b", "c", "d"}, {"d", "e", "f"}});
    // Warm pass, then the timed pass.
    (void)pi(validate_covering(family));
    const auto start = Clock::now();
    const Covering covering = validate_covering(family);
    const BoolMatrix result = pi(covering);
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    check.expect(print_matrix(result) == kPiGolden, "pi differs from the printed 6x6 matrix");
}

void criterion_operator_tables(Outcome& out, Check& check) {
    out.limit_ms = 10.0;
    struct Row {
        OpKind kind;
        const char* x;
        const char* expected;
    };
    static const Row rows[] = {
        {OpKind::IH, "100000", "111000"}, {OpKind::IH, "011000", "011000"},
        {OpKind::IH, "100110", "111111"}, {OpKind::IH, "010111", "011111"},
        {OpKind::IL, "100000", "100000"}, {OpKind::IL, "011000", "000000"},
        {OpKind::IL, "100110", "100100"}, {OpKind::IL, "010111", "000111"},
        {OpKind::IL, "111110", "111100"},
        {OpKind::SH, "100000", "111100"}, {OpKind::SH, "011000", "111100"},
        {OpKind::SH, "100110", "111111"}, {OpKind::SH, "111100", "111111"},
        {OpKind::SH, "110111", "111111"},
        {OpKind::SL, "100000", "000000"}, {OpKind::SL, "110000", "000000"},
        {OpKind::SL, "000111", "000011"}, {OpKind::SL, "111100", "111000"},
        {OpKind::SL, "110111", "000011"},
        {OpKind::XH, "100000", "111100"}, {OpKind::XH, "110000", "111100"},
        {OpKind::XH, "111000", "111100"}, {OpKind::XH, "000111", "101111"},
        {OpKind::XH, "100111", "111111"},
        {OpKind::XL, "111111", "111111"},
    };
    const Covering c = testutil::example_covering();
    (void)matrix_approx(c, OpKind::SH, testutil::bits("100000"));  // warm
    const auto start = Clock::now();
    std::size_t covered = 0;
    for (const Row& row : rows) {
        const SetVec x = testutil::bits(row.x);
        const SetVec expected = testutil::bits(row.expected);
        const bool ok = matrix_approx(c, row.kind, x) == expected &&
                        oracle_approx(c, row.kind, x) == expected;
        check.expect(ok, "row " + to_string(row.kind) + " " + row.x + " mismatched");
        covered += ok ? 1 : 0;
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    check.expect(covered == 25, "expected 25 table rows, saw " + std::to_string(covered));
}

void criterion_family_product(Outcome&, Check& check) {
    const BoolMatrix expected = testutil::mat("11100;11110;11110;01110;00000");
    const BoolMatrix m1 = testutil::mat("100;110;101;011;000");
    const BoolMatrix m2 = testutil::mat("010;110;011;101;000");
    check.expect(bool_product(m1, transpose(m1)) == expected, "M1 * M1^T mismatched");
    check.expect(bool_product(m2, transpose(m2)) == expected, "M2 * M2^T mismatched");
}

void criterion_decomposition_golden(Outcome&, Check& check) {
    const BoolMatrix b = decomposition_example_b();
    const DecomposeResult r = decompose_paper(b);
    check.expect(static_cast<bool>(r), "paper mode reported infeasible");
    if (!r) return;
    const std::vector<SetVec> expected = {testutil::bits("11010"), testutil::bits("00110")};
    check.expect(r.decomposition->blocks == expected, "blocks differ from {x1,x2,x4},{x3,x4}");
    check.expect(verify_decomposition(b, *r.decomposition), "decomposition failed verification");
}

void criterion_feasibility_exhaustive(Outcome& out, Check& check) {
    out.limit_ms = 5000.0;
    const auto start = Clock::now();
    for (std::uint32_t code = 0; code < 512; ++code) {
        BoolMatrix b(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (code & (std::uint32_t{1} << (i * 3 + j))) b.set(i, j);
            }
        }
        // Width 3 suffices (a 3-vertex graph has at most 3 maximal cliques)
        // and absorbs narrower candidates via zero columns.
        const bool oracle = oracles::factorizable_by_enumeration(b, 3);
        if (is_decomposable(b) != oracle) {
            check.expect(false, "disagreement on matrix code " + std::to_string(code));
            return;
        }
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void criterion_oracle_equivalence(Outcome& out, Check& check) {
    out.limit_ms = 60000.0;
    const auto start = Clock::now();
    std::mt19937 rng(0xFACADE);
    const std::vector<Covering> coverings = shared_coverings();
    constexpr OpKind kinds[] = {OpKind::SH, OpKind::SL, OpKind::IH, OpKind::IL, OpKind::XH, OpKind::XL};
    for (const Covering& c : coverings) {
        const std::size_t n = c.universe().size();
        for (const SetVec& x : queries_for(rng, n)) {
            for (OpKind kind : kinds) {
                if (!(matrix_approx(c, kind, x) == oracle_approx(c, kind, x))) {
                    check.expect(false, "matrix/oracle mismatch for " + to_string(kind));
                    return;
                }
            }
            const bool sl_dual = oracle_approx(c, OpKind::SL, x) ==
                                 oracle_approx(c, OpKind::SH, x.complement()).complement();
            const bool il_dual = oracle_approx(c, OpKind::IL, x) ==
                                 oracle_approx(c, OpKind::IH, x.complement()).complement();
            if (!sl_dual || !il_dual) {
                check.expect(false, "SL/IL duality identity failed");
                return;
            }
        }
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void criterion_structural_invariants(Outcome&, Check& check) {
    std::mt19937 rng(0xFACADE);
    for (const Covering& c : shared_coverings()) {
        const BoolMatrix g = gamma(c);
        const BoolMatrix p = pi(c);
        if (!is_symmetric(g) || !has_unit_diagonal(g)) {
            check.expect(false, "gamma not symmetric with unit diagonal");
            return;
        }
        if (!has_unit_diagonal(p) || !is_idempotent(p)) {
            check.expect(false, "pi not reflexive idempotent");
            return;
        }
        if (!leq(p, g)) {
            check.expect(false, "pi exceeds gamma somewhere");
            return;
        }
        if (!(pi(reduct(c)) == p)) {
            check.expect(false, "pi changed under reduct");
            return;
        }
        // Removing a block contained in another one leaves gamma unchanged:
        // append a random sub-block, gamma must not move; and dropping all
        // contained blocks (gir) must not move it either.
        SetVec sub = c.blocks()[rng() % c.size()];
        for (std::size_t i = 0; i < sub.len() && sub.count() > 1; ++i) {
            if (sub.test(i) && rng() % 2) sub.set(i, false);
        }
        std::vector<SetVec> extended = c.blocks();
        extended.push_back(sub);
        const Covering c2 = validate_covering(SetFamily(c.universe(), std::move(extended)));
        if (!(gamma(c2) == g) || !(gamma(validate_covering(gir(c.family()))) == g)) {
            check.expect(false, "gamma moved when toggling contained blocks");
            return;
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const Covering partition = testutil::random_partition(rng, n, 1 + trial % 4);
        const BoolMatrix m = membership_matrix(partition.family());
        const BoolMatrix product = bool_product(m, transpose(m));
        if (!is_idempotent(product)) {
            check.expect(false, "partition product is not idempotent");
            return;
        }
        // gamma(U/R) equals the relational matrix of the equivalence R.
        BoolMatrix mr(n, n);
        for (const SetVec& cell : partition.blocks()) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (cell.test(i) && cell.test(j)) mr.set(i, j);
                }
            }
        }
        if (!(gamma(partition) == mr)) {
            check.expect(false, "gamma of a partition differs from the equivalence matrix");
            return;
        }
    }
}

void criterion_optimality_counterexample(Outcome&, Check& check) {
    const BoolMatrix b = counterexample6();
    const DecomposeResult paper = decompose_paper(b);
    const DecomposeResult exact = decompose_exact(b);
    check.expect(paper && paper.decomposition->block_count() == 4, "paper mode should give 4 blocks");
    check.expect(exact && exact.decomposition->block_count() == 3, "exact mode should give 3 blocks");
    if (!paper || !exact) return;
    check.expect(verify_decomposition(b, *paper.decomposition), "paper decomposition failed verification");
    check.expect(verify_decomposition(b, *exact.decomposition), "exact decomposition failed verification");

    std::mt19937 rng(0xBEEF);
    std::uniform_int_distribution<std::size_t> size(2, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = size(rng);
        std::uniform_int_distribution<std::size_t> cols(1, n);
        const BoolMatrix a = testutil::random_matrix(rng, n, cols(rng), 0.45);
        const BoolMatrix m = bool_product(a, transpose(a));
        const DecomposeResult r = decompose_exact(m);
        if (!r || r.decomposition->block_count() != oracles::minimum_cover_by_enumeration(m) ||
            !verify_decomposition(m, *r.decomposition)) {
            check.expect(false, "exact mode missed the enumerated minimum on trial " + std::to_string(trial));
            return;
        }
    }
}

void criterion_axiom_checkers(Outcome& out, Check& check) {
    out.limit_ms = 60000.0;
    const auto start = Clock::now();

    const auto additive_image = [](const BoolMatrix& a, const SetVec& x) {
        SetVec img(a.cols());
        for (std::size_t i = 0; i < x.len(); ++i) {
            if (x.test(i)) img |= a.row(i);
        }
        return img;
    };
    const auto witness_realizes = [&](const CheckResult& r, const BoolMatrix& a, OpKind kind) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << a.rows()); ++mask) {
            const SetVec x = SetVec::from_mask(a.rows(), mask);
            if (!(oracle_approx(*r.witness, kind, x) == additive_image(a, x))) return false;
        }
        return true;
    };

    for (std::uint32_t code = 0; code < 512; ++code) {
        BoolMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (code & (std::uint32_t{1} << (i * 3 + j))) a.set(i, j);
            }
        }
        const CheckResult second = check_second_upper(a);
        const CheckResult fifth = check_fifth_upper(a);
        if (second.accepted != (is_symmetric(a) && has_unit_diagonal(a)) ||
            fifth.accepted != (is_idempotent(a) && has_unit_diagonal(a))) {
            check.expect(false, "acceptance set mismatch at code " + std::to_string(code));
            return;
        }
        if ((second.accepted && !witness_realizes(second, a, OpKind::SH)) ||
            (fifth.accepted && !witness_realizes(fifth, a, OpKind::IH))) {
            check.expect(false, "witness failed re-verification at code " + std::to_string(code));
            return;
        }
    }

    std::mt19937 rng(0xABBA);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 4;  // up to 5
        const Covering c = testutil::random_covering(rng, n, 2 + trial % 4);
        const BoolMatrix p = pi(c);
        const BoolMatrix a = bool_product(transpose(p), p);
        const CheckResult r = check_sixth_upper(a);
        if (!r.accepted || !r.relation ||
            !(bool_product(*r.relation, transpose(*r.relation)) == a) ||
            !witness_realizes(r, a, OpKind::XH)) {
            check.expect(false, "sixth-upper failed on trial " + std::to_string(trial));
            return;
        }
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---- criterion 10: the command-line contract -------------------------------

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char ch : s) {
        if (ch == '\'') {
            quoted += "'\\''";
        } else {
            quoted += ch;
        }
    }
    return quoted + "'";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

class CliHarness {
public:
    explicit CliHarness(std::string cli) : cli_(std::move(cli)) {
        dir_ = std::filesystem::temp_directory_path() /
               ("roughmat-accept-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir_);
    }

    ~CliHarness() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }

    std::filesystem::path write(const std::string& name, const std::string& content) {
        const auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        out << content;
        return path;
    }

    RunResult run(const std::vector<std::string>& args, const std::string& stdin_data = "") {
        const auto in_path = dir_ / "stdin.txt";
        const auto out_path = dir_ / "stdout.txt";
        const auto err_path = dir_ / "stderr.txt";
        {
            std::ofstream in(in_path, std::ios::binary);
            in << stdin_data;
        }
        std::string command = shell_quote(cli_);
        for (const std::string& arg : args) command += " " + shell_quote(arg);
        command += " < " + shell_quote(in_path.string()) + " > " + shell_quote(out_path.string()) +
                   " 2> " + shell_quote(err_path.string());
        const int status = std::system(command.c_str());
        RunResult result;
        result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        result.out = read_file(out_path);
        result.err = read_file(err_path);
        return result;
    }

private:
    std::string cli_;
    std::filesystem::path dir_;
};

void criterion_cli_contract(Outcome&, Check& check, const std::string& cli_path) {
    if (cli_path.empty() || !std::filesystem::exists(cli_path)) {
        check.expect(false, "CLI binary not found; pass its path as argv[1]");
        return;
    }
    CliHarness cli(cli_path);
    const auto covering_path = cli.write("example.cov", kExampleCoveringFile);

    // characteristic: both matrices, plus stdin via '-'.
    RunResult r = cli.run({"characteristic", covering_path.string(), "--which", "pi"});
    check.expect(r.exit_code == 0 && r.out == kPiGolden, "characteristic --which pi golden mismatch");
    r = cli.run({"characteristic", covering_path.string(), "--which", "gamma"});
    check.expect(r.exit_code == 0 && r.out == kGammaGolden, "characteristic --which gamma golden mismatch");
    r = cli.run({"characteristic", "-", "--which", "pi"}, kExampleCoveringFile);
    check.expect(r.exit_code == 0 && r.out == kPiGolden, "characteristic over stdin mismatch");

    // approx: table rows and the empty set.
    r = cli.run({"approx", covering_path.string(), "--op", "ih", "--set", "a"});
    check.expect(r.exit_code == 0 && r.out == "a,b,c\n", "approx ih {a} mismatch");
    r = cli.run({"approx", covering_path.string(), "--op", "sl", "--set", "d,e,f"});
    check.expect(r.exit_code == 0 && r.out == "e,f\n", "approx sl {d,e,f} mismatch");
    r = cli.run({"approx", covering_path.string(), "--op", "xh", "--set", ""});
    check.expect(r.exit_code == 0 && r.out == "\n", "approx xh {} mismatch");

    // decompose: worked example, counterexample in both modes, infeasible pair.
    const auto b_path = cli.write("b.mat", print_matrix(decomposition_example_b()));
    r = cli.run({"decompose", b_path.string(), "--mode", "paper"});
    check.expect(r.exit_code == 0 &&
                     r.out == "5 2\n1 0\n1 0\n0 1\n1 1\n0 0\nx1 x2 x4\nx3 x4\n",
                 "decompose paper golden mismatch");

    const auto cx_path = cli.write("cx.mat", print_matrix(counterexample6()));
    r = cli.run({"decompose", cx_path.string(), "--mode", "paper"});
    check.expect(r.exit_code == 0 &&
                     r.out == "6 4\n1 1 1 0\n1 0 0 0\n1 1 0 1\n0 0 0 1\n0 1 1 1\n0 0 1 0\n"
                              "x1 x2 x3\nx1 x3 x5\nx1 x5 x6\nx3 x4 x5\n",
                 "decompose paper counterexample golden mismatch");
    r = cli.run({"decompose", cx_path.string(), "--mode", "exact"});
    check.expect(r.exit_code == 0 &&
                     r.out == "6 3\n1 1 0\n1 0 0\n1 0 1\n0 0 1\n0 1 1\n0 1 0\n"
                              "x1 x2 x3\nx1 x5 x6\nx3 x4 x5\n",
                 "decompose exact counterexample golden mismatch");

    const auto flip_path = cli.write("flip.mat", "2 2\n0 1\n1 0\n");
    r = cli.run({"decompose", flip_path.string(), "--mode", "paper"});
    check.expect(r.exit_code == 1 && r.out.empty() &&
                     r.err == "no decomposition exists: B_12=1 but B_11=0\n",
                 "infeasible decompose should exit 1 with the violated condition");

    // check: fifth accepts pi with the successor-set witness, second rejects.
    const auto pi_path = cli.write("pi.mat", kPiGolden);
    r = cli.run({"check", pi_path.string(), "--axiom", "fifth"});
    check.expect(r.exit_code == 0 &&
                     r.out == "ACCEPT\nx1 x2 x3 x4 x5 x6\nx1 x2 x3\nx2\nx3\nx3 x4 x5 x6\nx5 x6\n",
                 "check fifth golden mismatch");
    r = cli.run({"check", pi_path.string(), "--axiom", "second"});
    check.expect(r.exit_code == 1 && r.out == "REJECT not symmetric at (x1,x2)\n",
                 "check second should reject pi");
    {
        const Covering example = testutil::example_covering();
        const BoolMatrix p = pi(example);
        const auto ptp_path = cli.write("ptp.mat", print_matrix(bool_product(transpose(p), p)));
        r = cli.run({"check", ptp_path.string(), "--axiom", "sixth"});
        check.expect(r.exit_code == 0 && r.out.rfind("ACCEPT\n", 0) == 0,
                     "check sixth should accept pi^T pi");
    }

    // reduct: union mode drops K3, gir keeps the two maximal blocks.
    r = cli.run({"reduct", covering_path.string(), "--kind", "union"});
    check.expect(r.exit_code == 0 && r.out == "a b c d e f\na b\na c d\nd e f\n",
                 "reduct union golden mismatch");
    r = cli.run({"reduct", covering_path.string(), "--kind", "gir"});
    check.expect(r.exit_code == 0 && r.out == "a b c d e f\na b c d\nd e f\n",
                 "reduct gir golden mismatch");

    // Exit code 1: a family that fails the covering axioms.
    const auto family_path = cli.write("family.cov", "a b c d e\na b c\nb d\nc d\n");
    r = cli.run({"characteristic", family_path.string(), "--which", "gamma"});
    check.expect(r.exit_code == 1 && r.err == "invalid covering: element e is uncovered\n",
                 "uncovered element should exit 1");

    // Exit code 2: parse errors, unknown elements, usage errors.
    const auto broken_path = cli.write("broken.mat", "2 2\n1 x\n0 1\n");
    r = cli.run({"decompose", broken_path.string()});
    check.expect(r.exit_code == 2 && r.err == "parse error at line 2, column 3: expected 0 or 1, got 'x'\n",
                 "matrix parse error should exit 2");
    r = cli.run({"approx", covering_path.string(), "--op", "ih", "--set", "a,z"});
    check.expect(r.exit_code == 2 && r.err == "unknown element 'z'\n", "unknown element should exit 2");
    r = cli.run({"approx", covering_path.string(), "--op", "zz", "--set", "a"});
    check.expect(r.exit_code == 2, "bad --op value should exit 2");
    r = cli.run({"nonsense"});
    check.expect(r.exit_code == 2, "unknown subcommand should exit 2");

    // Canonical print/parse round trip on 100 random files of each format.
    std::mt19937 rng(0xD15C0);
    for (int trial = 0; trial < 100; ++trial) {
        const BoolMatrix m = testutil::random_matrix(rng, 1 + trial % 9, 1 + (trial / 3) % 9);
        const std::string text = print_matrix(m);
        std::istringstream in(text);
        if (!(parse_matrix(in) == m) || print_matrix(m) != text) {
            check.expect(false, "matrix round trip failed on trial " + std::to_string(trial));
            return;
        }
        const Covering c = testutil::random_covering(rng, 2 + trial % 6, 1 + trial % 5);
        const std::string cov_text = print_covering(c.family());
        std::istringstream cov_in(cov_text);
        const SetFamily back = parse_covering(cov_in);
        if (!(back.blocks() == c.blocks()) || print_covering(back) != cov_text) {
            check.expect(false, "covering round trip failed on trial " + std::to_string(trial));
            return;
        }
    }

    // RM_EXACT_BOUND reaches the exact solver through the environment.
    const auto id7_path = cli.write("id7.mat", print_matrix(BoolMatrix::identity(7)));
    ::setenv("RM_EXACT_BOUND", "6", 1);
    r = cli.run({"decompose", id7_path.string(), "--mode", "exact"});
    check.expect(r.exit_code == 1 && r.err.find("exact mode supports at most 6 vertices") == 0,
                 "RM_EXACT_BOUND=6 should refuse a 7-vertex exact run");
    ::setenv("RM_EXACT_BOUND", "8", 1);
    r = cli.run({"decompose", id7_path.string(), "--mode", "exact"});
    check.expect(r.exit_code == 0, "RM_EXACT_BOUND=8 should allow a 7-vertex exact run");
    ::unsetenv("RM_EXACT_BOUND");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    struct Entry {
        int id;
        const char* name;
        std::function<void(Outcome&, Check&)> run;
    };
    const std::vector<Entry> entries = {
        {1, "pi golden reproduction", criterion_pi_golden},
        {2, "operator tables via both paths", criterion_operator_tables},
        {3, "family product golden, both column orders", criterion_family_product},
        {4, "decomposition golden", criterion_decomposition_golden},
        {5, "feasibility theorem, exhaustive 3x3", criterion_feasibility_exhaustive},
        {6, "oracle equivalence property suite", criterion_oracle_equivalence},
        {7, "structural invariants", criterion_structural_invariants},
        {8, "optimality counterexample and exact minima", criterion_optimality_counterexample},
        {9, "axiom checkers", criterion_axiom_checkers},
        {10, "command-line contract",
         [&cli_path](Outcome& out, Check& check) { criterion_cli_contract(out, check, cli_path); }},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        Outcome outcome;
        Check check(outcome);
        const auto start = Clock::now();
        try {
            entry.run(outcome, check);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (outcome.elapsed_ms == 0.0) {
            outcome.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }
        if (outcome.limit_ms >= 0.0 && outcome.elapsed_ms >= outcome.limit_ms && outcome.pass) {
            outcome.pass = false;
            outcome.detail = "runtime " + std::to_string(outcome.elapsed_ms) + " ms exceeds " +
                             std::to_string(outcome.limit_ms) + " ms";
        }
        std::printf("%s  %2d. %-45s %10.2f ms%s\n", outcome.pass ? "PASS" : "FAIL", entry.id, entry.name,
                    outcome.elapsed_ms, outcome.detail.empty() ? "" : ("  [" + outcome.detail + "]").c_str());
        if (!outcome.pass) ++failures;
    }
    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
