#include "lincycle/cli.hpp"

#include "lincycle/certificate.hpp"
#include "lincycle/cover.hpp"
#include "lincycle/fuzz.hpp"
#include "lincycle/generate.hpp"
#include "lincycle/search.hpp"
#include "lincycle/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace lincycle::cli {

namespace {

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write " + path);
    f << text;
}

Hypergraph load_instance(const std::string& path)
{
    try {
        return parse_hypergraph(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<double> parse_probabilities(const std::string& list)
{
    std::vector<double> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            double p = std::stod(item, &used);
            if (used != item.size() || !(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument(item);
            out.push_back(p);
        } catch (const std::exception&) {
            throw InputError("bad probability \"" + item + "\"");
        }
    }
    if (out.empty())
        throw InputError("empty probability list");
    return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text)
{
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            auto n = std::stoul(text);
            return {n, n};
        }
        return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("bad range \"" + text + "\", expected a..b");
    }
}

AssertLevel parse_level(const std::string& s)
{
    if (s == "none")
        return AssertLevel::None;
    if (s == "full")
        return AssertLevel::Full;
    return AssertLevel::Cheap;
}

bool use_color(const std::ostream& out)
{
    return &out == &std::cout && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

struct BudgetFlags
{
    std::uint64_t nodes = SearchBudget::kDefaultNodes;
    double secs = SearchBudget::kDefaultSeconds;

    void add(CLI::App* app)
    {
        app->add_option("--budget-nodes", nodes, "Search-node limit per search")
            ->check(CLI::PositiveNumber);
        app->add_option("--budget-secs", secs, "Wall-clock limit per search, seconds")
            ->check(CLI::PositiveNumber);
    }
    SearchBudget budget() const { return SearchBudget(nodes, secs); }
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cover mixed 2/3-uniform hypergraphs by at most alpha(H) edge-disjoint "
                 "linear cycles"};
    app.name("lincycle");
    app.require_subcommand(1);

    // solve
    std::string solve_in, solve_out, solve_assert = "cheap";
    BudgetFlags solve_budget;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a cover certificate");
    solve_cmd->add_option("instance", solve_in, "Instance file")->required();
    solve_cmd->add_option("--assert", solve_assert, "Internal checks")
        ->check(CLI::IsMember({"none", "cheap", "full"}));
    solve_cmd->add_option("--out", solve_out, "Certificate output path (default stdout)");
    solve_budget.add(solve_cmd);

    // verify
    std::string verify_in, verify_cert, verify_alpha = "compute", verify_format = "text";
    BudgetFlags verify_budget;
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
    verify_cmd->add_option("instance", verify_in, "Instance file")->required();
    verify_cmd->add_option("certificate", verify_cert, "Certificate JSON")->required();
    verify_cmd->add_option("--alpha", verify_alpha, "Recompute alpha or trust the certificate")
        ->check(CLI::IsMember({"compute", "trust"}));
    verify_cmd->add_option("--format", verify_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    verify_budget.add(verify_cmd);

    // alpha
    std::string alpha_in;
    BudgetFlags alpha_budget;
    auto* alpha_cmd = app.add_subcommand("alpha", "Print the independence number and a witness");
    alpha_cmd->add_option("instance", alpha_in, "Instance file")->required();
    alpha_budget.add(alpha_cmd);

    // gen
    GenSpec gen;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Write a random instance");
    gen_cmd->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::Range(0, 64));
    gen_cmd->add_option("--p3", gen.p3, "Probability of each 3-subset")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--p2", gen.p2, "Probability of each 2-subset")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("--out", gen_out, "Output path (default stdout)");

    // fuzz
    FuzzOptions fz;
    std::string fz_range = "1..8", fz_p3 = "0.3", fz_p2 = "0", fz_assert = "cheap", fz_save;
    BudgetFlags fz_budget;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Solve and verify random instances");
    fuzz_cmd->add_option("--count", fz.count, "Number of instances");
    fuzz_cmd->add_option("--n-range", fz_range, "Vertex count range a..b");
    fuzz_cmd->add_option("--p3", fz_p3, "Comma-separated 3-subset probabilities");
    fuzz_cmd->add_option("--p2", fz_p2, "Comma-separated 2-subset probabilities");
    fuzz_cmd->add_option("--seed", fz.seed, "Master seed");
    fuzz_cmd->add_option("--assert", fz_assert, "Internal checks")
        ->check(CLI::IsMember({"none", "cheap", "full"}));
    fuzz_cmd->add_option("--save-failures", fz_save, "Directory for failing cases");
    fuzz_cmd->add_option("--jobs", fz.jobs, "Worker threads")->check(CLI::PositiveNumber);
    fz_budget.add(fuzz_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd) {
            const Hypergraph h = load_instance(solve_in);
            SolveOptions opts{solve_budget.budget(), parse_level(solve_assert)};
            const auto cert = solve(h, opts);
            write_output(solve_out, serialize_certificate(cert), out);
            return kOk;
        }
        if (*verify_cmd) {
            const Hypergraph h = load_instance(verify_in);
            CoverCertificate cert;
            try {
                cert = parse_certificate(read_file(verify_cert));
            } catch (const CertificateError& e) {
                throw InputError(verify_cert + ": " + e.what());
            }
            VerificationReport report;
            try {
                report = verify(h, cert,
                                verify_alpha == "trust" ? AlphaMode::TrustBound : AlphaMode::Compute,
                                verify_budget.budget());
            } catch (const InstanceMismatch& e) {
                throw InputError(e.what());
            }
            if (verify_format == "json")
                out << report.to_json().dump(2) << '\n';
            else
                out << report.to_text(use_color(out));
            if (report.ok)
                return kOk;
            for (const auto& c : report.checks)
                if (!c.passed && !c.skipped)
                    return kVerificationFailed;
            return kBudgetExhausted;
        }
        if (*alpha_cmd) {
            const Hypergraph h = load_instance(alpha_in);
            auto r = alpha(h, alpha_budget.budget());
            out << "alpha: " << r.value << "\nwitness:";
            for (VertexId v : to_vector(r.witness.vertices))
                out << ' ' << v;
            out << '\n';
            return kOk;
        }
        if (*gen_cmd) {
            write_output(gen_out, serialize(generate(gen)), out);
            return kOk;
        }
        if (*fuzz_cmd) {
            std::tie(fz.n_min, fz.n_max) = parse_range(fz_range);
            if (fz.n_min > fz.n_max || fz.n_max > kMaxVertices)
                throw InputError("bad range \"" + fz_range + "\"");
            fz.p3 = parse_probabilities(fz_p3);
            fz.p2 = parse_probabilities(fz_p2);
            fz.level = parse_level(fz_assert);
            fz.budget = fz_budget.budget();
            if (!fz_save.empty())
                fz.save_failures = fz_save;
            const auto summary = run_fuzz(fz);
            out << summary.to_text();
            err << "wall time: " << summary.seconds << " s\n";
            return summary.ok() ? kOk : kFuzzFailures;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExhausted;
    } catch (const AssertionFailure& e) {
        err << "internal assertion failed: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace lincycle::cli
