#include "lincycle/cli.hpp"
#include "lincycle/fuzz.hpp"
#include "lincycle/generate.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace lincycle;
namespace fs = std::filesystem;

namespace {

struct RunResult
{
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "lincycle");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir
{
public:
    TempDir()
    {
        static int counter = 0;
        path_ = fs::temp_directory_path()
                / ("lincycle_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("generate: probability one gives the complete family")
{
    auto h = generate({5, 0.0, 1.0, 42});
    CHECK(h == complete_triples(5));
    CHECK(generate({5, 1.0, 0.0, 42}) == complete_pairs(5));
    CHECK(generate({6, 0.0, 0.0, 1}).num_edges() == 0);
    CHECK_THROWS_AS(generate({5, 1.5, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({65, 0.0, 0.0, 1}), std::invalid_argument);
}

TEST_CASE("generate: pure function of its spec")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec s{9, 0.2, 0.3, seed};
        CHECK(generate(s) == generate(s));
    }
    CHECK_FALSE(generate({9, 0.2, 0.3, 1}) == generate({9, 0.2, 0.3, 2}));
}

TEST_CASE("fuzz: instance specs cycle through probability combinations")
{
    FuzzOptions opts;
    opts.p3 = {0.1, 0.5};
    opts.p2 = {0.0, 0.2, 0.4};
    opts.n_min = 3;
    opts.n_max = 7;
    for (std::size_t i = 0; i < 12; ++i) {
        auto s = fuzz_instance_spec(opts, i);
        CHECK(s.p3 == opts.p3[(i % 6) / 3]);
        CHECK(s.p2 == opts.p2[i % 3]);
        CHECK(s.n >= 3);
        CHECK(s.n <= 7);
    }
}

TEST_CASE("fuzz: single vertex instances")
{
    FuzzOptions opts;
    opts.count = 5;
    opts.n_min = opts.n_max = 1;
    auto summary = run_fuzz(opts);
    CHECK(summary.ok());
    CHECK(summary.instances == 5);
    CHECK(summary.sizes.at({1, 1}) == 5);
    CHECK(summary.to_text().find("  alpha=1 cycles=1 instances=5") != std::string::npos);
}

TEST_CASE("fuzz: tampered certificates are reported and saved")
{
    TempDir dir;
    FuzzOptions opts;
    opts.count = 4;
    opts.n_min = 3;
    opts.n_max = 5;
    opts.save_failures = dir.path();
    opts.tamper = [](CoverCertificate& c) { c.cycles.pop_back(); };
    auto summary = run_fuzz(opts);
    CHECK_FALSE(summary.ok());
    CHECK(summary.failures.size() == 4);
    CHECK(fs::exists(dir.path() / "case_0.hg"));
    CHECK(fs::exists(dir.path() / "case_0.cert.json"));
    CHECK(slurp(dir.path() / "case_0.reason.txt").find("vertex-coverage") != std::string::npos);
    CHECK(summary.to_text().find("failures: 4") != std::string::npos);
}

TEST_CASE("fuzz: results do not depend on the job count")
{
    FuzzOptions opts;
    opts.count = 60;
    opts.n_max = 9;
    opts.p3 = {0.2, 0.6};
    opts.p2 = {0.0, 0.2};
    opts.seed = 99;
    auto one = run_fuzz(opts);
    opts.jobs = 3;
    auto three = run_fuzz(opts);
    CHECK(one.to_text() == three.to_text());
    CHECK(one.ok());
}

TEST_CASE("cli: solve")
{
    TempDir dir;
    auto k5 = dir.write("k5.hg", serialize(complete_pairs(5)));
    auto r = run_cli({"solve", k5});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("\"alpha_bound\": 1") != std::string::npos);

    auto k4 = dir.write("k4.hg", serialize(complete_pairs(4)));
    r = run_cli({"solve", k4});
    CHECK(r.code == cli::kOk);
    auto k4cert = parse_certificate(r.out);
    REQUIRE(k4cert.cycles.size() == 1);
    CHECK(std::get<EdgeSequence>(k4cert.cycles[0]).edges.size() == 4);

    auto empty = dir.write("e.hg", "3 0\n");
    r = run_cli({"solve", empty, "--assert", "full"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("{\"kind\":\"vertex\",\"v\":2}") != std::string::npos);

    auto fano = dir.write("fano.hg", serialize(oracle::fano()));
    r = run_cli({"solve", fano, "--budget-nodes", "1"});
    CHECK(r.code == cli::kBudgetExhausted);
    CHECK(r.err.find("budget exhausted") != std::string::npos);

    auto bad = dir.write("bad.hg", "3 1\n0 0 1\n");
    r = run_cli({"solve", bad});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("line 2") != std::string::npos);

    CHECK(run_cli({"solve", (dir.path() / "missing.hg").string()}).code == cli::kInputError);
    CHECK(run_cli({"solve"}).code == cli::kInputError);
    CHECK(run_cli({"solve", k5, "--assert", "loud"}).code == cli::kInputError);
}

TEST_CASE("cli: verify exit codes")
{
    TempDir dir;
    auto inst = dir.write("f.hg", serialize(oracle::fano()));
    auto cert = dir.path() / "f.cert.json";
    REQUIRE(run_cli({"solve", inst, "--out", cert.string()}).code == cli::kOk);

    auto ok = run_cli({"verify", inst, cert.string()});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("certificate OK") != std::string::npos);

    auto json = run_cli({"verify", inst, cert.string(), "--format", "json", "--alpha", "trust"});
    CHECK(json.code == cli::kOk);
    CHECK(json.out.find("\"provided-bound\"") != std::string::npos);

    auto other = dir.write("o.hg", "7 0\n");
    auto mismatch = run_cli({"verify", other, cert.string()});
    CHECK(mismatch.code == cli::kInputError);
    CHECK(mismatch.err.find("instance mismatch") != std::string::npos);

    auto tampered = parse_certificate(slurp(cert));
    tampered.cycles.pop_back();
    auto tcert = dir.write("t.json", serialize_certificate(tampered));
    auto rejected = run_cli({"verify", inst, tcert});
    CHECK(rejected.code == cli::kVerificationFailed);
    CHECK(rejected.out.find("certificate REJECTED") != std::string::npos);

    auto skipped = run_cli({"verify", inst, cert.string(), "--budget-nodes", "1"});
    CHECK(skipped.code == cli::kBudgetExhausted);
    CHECK(run_cli({"verify", inst, tcert, "--budget-nodes", "1"}).code
          == cli::kVerificationFailed);

    auto garbage = dir.write("g.json", "{not json");
    CHECK(run_cli({"verify", inst, garbage}).code == cli::kInputError);
}

TEST_CASE("cli: alpha, gen, fuzz")
{
    TempDir dir;
    auto fano = dir.write("fano.hg", serialize(oracle::fano()));
    auto a = run_cli({"alpha", fano});
    CHECK(a.code == cli::kOk);
    CHECK(a.out.find("alpha: 4\n") == 0);

    auto g1 = run_cli({"gen", "--n", "5", "--p3", "1", "--seed", "3"});
    CHECK(g1.code == cli::kOk);
    CHECK(g1.out.find("5 10\n") == 0);
    CHECK(run_cli({"gen", "--n", "8", "--p3", "0.3", "--p2", "0.1", "--seed", "3"}).out
          == run_cli({"gen", "--n", "8", "--p3", "0.3", "--p2", "0.1", "--seed", "3"}).out);
    CHECK(run_cli({"gen", "--n", "5", "--p3", "2"}).code == cli::kInputError);

    auto f = run_cli({"fuzz", "--count", "20", "--n-range", "1..6", "--p3", "0.2,0.8", "--p2",
                      "0,0.2", "--seed", "5"});
    CHECK(f.code == cli::kOk);
    CHECK(f.out.find("instances: 20") == 0);
    CHECK(f.err.find("wall time:") == 0);
    CHECK(run_cli({"fuzz", "--n-range", "5..2"}).code == cli::kInputError);
    CHECK(run_cli({"fuzz", "--p3", "0.2,x"}).code == cli::kInputError);
}
