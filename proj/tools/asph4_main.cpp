#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asph4/io.hpp"
#include "asph4/synthesis.hpp"

namespace {

using namespace asph4;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) return false;
    out << content;
    return true;
}

std::optional<sl2z::Sl2Matrix> matrix_from_csv(const std::string& text) {
    std::vector<long long> entries;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            entries.push_back(std::stoll(token));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (entries.size() != 4) return std::nullopt;
    try {
        return sl2z::Sl2Matrix(entries[0], entries[1], entries[2], entries[3]);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

int run_synthesize(long long chi, std::optional<long long> sigma, const std::string& out_path,
                   const std::string& dot_path) {
    blocks::AssemblyGraph g;
    try {
        if (sigma) {
            if (*sigma < 0) {
                std::cerr << "error: sigma targets must be nonnegative\n";
                return kExitUsage;
            }
            const long long rest = chi - 13 * *sigma;
            if (rest < 0 || rest % 2 != 0) {
                std::cerr << "error: need chi = 13*sigma + 2*m with m >= 0; chi=" << chi
                          << " sigma=" << *sigma << " is infeasible\n";
                return kExitUsage;
            }
            g = synthesis::synthesize_chi_sigma(*sigma, rest / 2);
        } else {
            g = synthesis::synthesize_chi(chi);
        }
    } catch (const synthesis::EvenTarget& e) {
        std::cerr << "error: " << e.what() << " (the construction realizes odd chi >= 13)\n";
        return kExitUsage;
    } catch (const synthesis::TargetBelow13& e) {
        std::cerr << "error: " << e.what() << " (the construction realizes odd chi >= 13)\n";
        return kExitUsage;
    }

    if (!out_path.empty() && !write_file(out_path, io::serialize(g))) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    if (!dot_path.empty() && !write_file(dot_path, io::to_dot(g))) {
        std::cerr << "error: cannot write " << dot_path << "\n";
        return kExitUsage;
    }

    auto report = blocks::verify(g);
    if (sigma) {
        report.notes.push_back("stated signature target: " + std::to_string(*sigma) +
                               " up to global orientation; the ledger sums claimed block values");
        if (!report.connected)
            report.notes.push_back(
                "this target admits no connected wiring with these blocks; the result is a "
                "disjoint union");
    } else {
        report.notes.push_back(
            "stated signature target for this family: 1 up to global orientation; the ledger "
            "sums claimed block values");
    }
    std::cout << "assembly.blocks: " << g.instances().size() << "\n";
    std::cout << "assembly.gluings: " << g.gluings().size() << "\n";
    std::cout << report.to_text();
    return report.pass() ? kExitPass : kExitVerificationFailure;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    blocks::AssemblyGraph g;
    try {
        g = io::parse(buffer.str());
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const blocks::IllegalGluing& e) {
        std::cout << "report.legal: false\n";
        std::cout << "note: " << e.what() << "\n";
        std::cout << "result: FAIL\n";
        return kExitVerificationFailure;
    }
    const auto report = blocks::verify(g);
    std::cout << "assembly.blocks: " << g.instances().size() << "\n";
    std::cout << "assembly.gluings: " << g.gluings().size() << "\n";
    std::cout << report.to_text();
    return report.pass() ? kExitPass : kExitVerificationFailure;
}

int run_capplan() {
    const auto plan = synthesis::build_cap_plan();
    std::cout << synthesis::cap_plan_table(plan);
    std::cout << "\nlantern curve intersections, geometric(algebraic):\n";
    std::cout << curves::curve_system_table(curves::lantern_curve_system());
    const bool ok = plan.total_before == 20 && plan.total_after == 4;
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitPass : kExitVerificationFailure;
}

int run_relations() {
    const auto cs = curves::lantern_curve_system();
    const std::vector<std::pair<std::string, bool>> certificates = {
        {"phi_twist_decomposition", sl2z::verify_phi_decomposition()},
        {"braid_lantern", mcg::verify_braid_lantern()},
        {"h1_lantern", mcg::verify_h1_lantern(cs)},
        {"seven_twist_identity", mcg::verify_seven_twist_identity(cs)},
    };
    bool all = true;
    for (const auto& [name, ok] : certificates) {
        std::cout << "certificate." << name << ": " << (ok ? "true" : "false") << "\n";
        all = all && ok;
    }
    std::cout << "result: " << (all ? "PASS" : "FAIL") << "\n";
    return all ? kExitPass : kExitVerificationFailure;
}

int run_conjugacy(const std::vector<long long>& entries) {
    std::optional<sl2z::Sl2Matrix> a, b;
    try {
        a = sl2z::Sl2Matrix(entries[0], entries[1], entries[2], entries[3]);
        b = sl2z::Sl2Matrix(entries[4], entries[5], entries[6], entries[7]);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto ca = sl2z::classify(*a);
    const auto cb = sl2z::classify(*b);
    std::cout << "matrix.a: " << a->to_string() << "\n";
    std::cout << "matrix.b: " << b->to_string() << "\n";
    std::cout << "class.a: " << ca.to_string() << "\n";
    std::cout << "class.b: " << cb.to_string() << "\n";
    const bool conjugate = ca == cb;
    std::cout << "result: " << (conjugate ? "conjugate" : "not conjugate") << "\n";
    return conjugate ? kExitPass : kExitVerificationFailure;
}

int run_bound(const std::string& matrix_csv, const std::string& out_path) {
    const auto matrix = matrix_from_csv(matrix_csv);
    if (!matrix) {
        std::cerr << "error: --matrix expects four comma-separated integers with determinant 1\n";
        return kExitUsage;
    }
    const auto cls = sl2z::classify(*matrix);
    std::cout << "matrix: " << matrix->to_string() << "\n";
    std::cout << "class: " << cls.to_string() << "\n";
    const auto result = synthesis::euler_bound(blocks::BoundaryLabel::torus(cls));
    if (!result.bound) {
        std::cout << "bound: none\n";
        std::cout << "note: " << result.note << "\n";
        std::cout << "result: PASS\n";
        return kExitPass;
    }
    std::cout << "bound.chi: " << *result.bound << "\n";
    std::cout << "bound.route: " << result.route << "\n";
    const auto& witness = *result.witness;
    std::cout << "witness.blocks: " << witness.instances().size() << "\n";
    const auto report = blocks::verify(witness);
    const bool ok = report.legal && report.connected &&
                    report.chi_total == *result.bound && witness.free_slots().size() == 1;
    std::cout << "witness.legal: " << (report.legal ? "true" : "false") << "\n";
    std::cout << "witness.chi: " << report.chi_total << "\n";
    if (!out_path.empty() && !write_file(out_path, io::serialize(witness))) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"assembles and certifies aspherical 4-manifold block decompositions"};
    app.require_subcommand(1);

    auto* synth = app.add_subcommand("synthesize", "build a closed assembly for a target chi");
    long long chi = 0;
    long long sigma_value = 0;
    std::string out_path, dot_path;
    synth->add_option("--chi", chi, "target Euler characteristic")->required();
    auto* sigma_opt = synth->add_option("--sigma", sigma_value, "target claimed signature");
    synth->add_option("--out", out_path, "write the assembly file here");
    synth->add_option("--dot", dot_path, "write a DOT rendering here");

    auto* verify_cmd = app.add_subcommand("verify", "check an assembly file");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "assembly file")->required();

    app.add_subcommand("relations", "run the relation certificates");
    auto* capplan_cmd = app.add_subcommand("capplan", "print the cap derivation step table");

    auto* conj = app.add_subcommand("conjugacy", "decide SL(2,Z) conjugacy of two matrices");
    std::vector<long long> entries;
    conj->add_option("entries", entries, "a b c d  a b c d (row-major)")
        ->expected(8)
        ->required();

    auto* bound_cmd = app.add_subcommand("bound", "Euler bound for capping a torus bundle");
    std::string matrix_csv;
    std::string bound_out;
    bound_cmd->add_option("--matrix", matrix_csv, "monodromy a,b,c,d")->required();
    bound_cmd->add_option("--out", bound_out, "write the witness assembly here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (synth->parsed())
        return run_synthesize(chi, sigma_opt->count() ? std::optional<long long>(sigma_value)
                                                      : std::nullopt,
                              out_path, dot_path);
    if (verify_cmd->parsed()) return run_verify(verify_path);
    if (conj->parsed()) return run_conjugacy(entries);
    if (bound_cmd->parsed()) return run_bound(matrix_csv, bound_out);
    if (capplan_cmd->parsed()) return run_capplan();
    return run_relations();
}
