#include "lincycle/fuzz.hpp"

#include "lincycle/verify.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace lincycle {

namespace {

struct Outcome
{
    std::optional<CoverCertificate> cert;
    std::optional<std::size_t> alpha;
    std::string failure;
};

Outcome run_one(const Hypergraph& h, const FuzzOptions& options)
{
    Outcome out;
    try {
        out.cert = solve(h, {options.budget, options.level});
    } catch (const BudgetExhausted& e) {
        out.failure = std::string("solve: ") + e.what();
        return out;
    } catch (const AssertionFailure& e) {
        out.failure = std::string("solve assertion: ") + e.what();
        return out;
    }
    if (options.tamper)
        options.tamper(*out.cert);

    auto report = verify(h, *out.cert, AlphaMode::Compute, options.budget);
    out.alpha = report.alpha;
    if (!report.ok) {
        std::string failed;
        for (const auto& c : report.checks)
            if (!c.passed)
                failed += (failed.empty() ? "" : "; ") + c.name + " (" + c.detail + ")";
        out.failure = "verify: " + failed;
    }
    return out;
}

void save_failure(const std::filesystem::path& dir, std::size_t index, const Hypergraph& h,
                  const Outcome& outcome)
{
    std::filesystem::create_directories(dir);
    const std::string stem = "case_" + std::to_string(index);
    std::ofstream(dir / (stem + ".hg")) << serialize(h);
    if (outcome.cert)
        std::ofstream(dir / (stem + ".cert.json")) << serialize_certificate(*outcome.cert);
    std::ofstream(dir / (stem + ".reason.txt")) << outcome.failure << '\n';
}

} // namespace

GenSpec fuzz_instance_spec(const FuzzOptions& options, std::size_t i)
{
    const std::uint64_t mix = splitmix64(options.seed + i);
    const std::size_t span = options.n_max - options.n_min + 1;
    const std::size_t combo = i % (options.p3.size() * options.p2.size());
    GenSpec spec;
    spec.n = options.n_min + static_cast<std::size_t>(mix % span);
    spec.p3 = options.p3[combo / options.p2.size()];
    spec.p2 = options.p2[combo % options.p2.size()];
    spec.seed = mix;
    return spec;
}

FuzzSummary run_fuzz(const FuzzOptions& options)
{
    if (options.p3.empty() || options.p2.empty())
        throw std::invalid_argument("need at least one p3 and one p2 value");
    if (options.n_min > options.n_max || options.n_max > kMaxVertices)
        throw std::invalid_argument("bad vertex count range");

    const auto start = std::chrono::steady_clock::now();
    std::vector<Hypergraph> instances(options.count);
    std::vector<Outcome> outcomes(options.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < options.count; i = next++) {
            instances[i] = generate(fuzz_instance_spec(options, i));
            outcomes[i] = run_one(instances[i], options);
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    FuzzSummary summary;
    summary.instances = options.count;
    for (std::size_t i = 0; i < options.count; ++i) {
        const auto& o = outcomes[i];
        if (o.cert && o.alpha)
            ++summary.sizes[{*o.alpha, o.cert->cycles.size()}];
        if (o.failure.empty())
            continue;
        summary.failures.push_back({i, fuzz_instance_spec(options, i), o.failure});
        if (options.save_failures)
            save_failure(*options.save_failures, i, instances[i], o);
    }
    summary.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

std::string FuzzSummary::to_text() const
{
    std::ostringstream os;
    os << "instances: " << instances << '\n';
    os << "failures: " << failures.size() << '\n';
    for (const auto& f : failures)
        os << "  #" << f.index << " n=" << f.spec.n << " p3=" << f.spec.p3 << " p2=" << f.spec.p2
           << " seed=" << f.spec.seed << ": " << f.reason << '\n';
    os << "cover size by alpha:\n";
    for (const auto& [key, count] : sizes)
        os << "  alpha=" << key.first << " cycles=" << key.second << " instances=" << count
           << '\n';
    return os.str();
}

} // namespace lincycle
