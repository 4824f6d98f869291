#include "lincycle/verify.hpp"

#include "lincycle/linear.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lincycle {

namespace {

constexpr const char* kValidity = "cycle-validity";
constexpr const char* kMembership = "edge-membership";
constexpr const char* kDisjoint = "edge-disjointness";
constexpr const char* kCoverage = "vertex-coverage";
constexpr const char* kAlpha = "alpha-bound";

std::vector<Edge> edges_of(const CycleCandidate& c)
{
    if (auto* ec = std::get_if<EdgeCycle>(&c))
        return {ec->e};
    if (auto* seq = std::get_if<EdgeSequence>(&c))
        return seq->edges;
    return {};
}

VertexMask vertices_of(const CycleCandidate& c)
{
    if (auto* vc = std::get_if<VertexCycle>(&c))
        return vc->v < kMaxVertices ? bit(vc->v) : 0;
    VertexMask m = 0;
    for (const Edge& e : edges_of(c))
        m |= e.mask();
    return m;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "; ") + p;
    return out;
}

class AlphaScan
{
public:
    AlphaScan(const Hypergraph& h, const SearchBudget& budget)
        : n_(h.num_vertices()), masks_(h.edge_masks()), meter_(budget, "verifier alpha")
    {
    }

    std::size_t run()
    {
        step(0, 0, 0);
        return best_;
    }

private:
    void step(VertexId v, VertexMask chosen, std::size_t size)
    {
        meter_.tick();
        if (v == n_) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + (n_ - v) <= best_)
            return;
        const VertexMask with = chosen | bit(v);
        bool ok = true;
        for (VertexMask e : masks_)
            if ((e & bit(v)) && (e & ~with) == 0) {
                ok = false;
                break;
            }
        if (ok)
            step(v + 1, with, size + 1);
        step(v + 1, chosen, size);
    }

    std::size_t n_;
    const std::vector<VertexMask>& masks_;
    BudgetMeter meter_;
    std::size_t best_ = 0;
};

} // namespace

std::size_t verifier_alpha(const Hypergraph& h, const SearchBudget& budget)
{
    return AlphaScan(h, budget).run();
}

const CheckResult& VerificationReport::check(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return c;
    throw std::out_of_range("no check named " + name);
}

std::string VerificationReport::to_text(bool color) const
{
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* yellow = color ? "\033[33m" : "";
    const char* reset = color ? "\033[0m" : "";
    std::ostringstream os;
    for (const auto& c : checks) {
        if (c.skipped)
            os << yellow << "SKIP" << reset;
        else if (c.passed)
            os << green << "PASS" << reset;
        else
            os << red << "FAIL" << reset;
        os << "  " << c.name;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << '\n';
    }
    os << (ok ? "certificate OK" : "certificate REJECTED") << '\n';
    return os.str();
}

nlohmann::ordered_json VerificationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["ok"] = ok;
    j["alpha_used"] = alpha_used == AlphaMode::Compute ? "exact" : "provided-bound";
    if (alpha)
        j["alpha"] = *alpha;
    else
        j["alpha"] = nullptr;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = c.skipped ? "skipped" : (c.passed ? "pass" : "fail");
        cj["detail"] = c.detail;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
}

VerificationReport verify(const Hypergraph& h, const CoverCertificate& cert, AlphaMode mode,
                          const SearchBudget& budget)
{
    if (!(cert.instance == h))
        throw InstanceMismatch("instance mismatch: certificate was issued for a different hypergraph");

    VerificationReport report;
    report.alpha_used = mode;
    const auto& cycles = cert.cycles;

    // 1. Each claimed cycle is a linear cycle on vertices of h.
    {
        std::vector<std::string> problems;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            auto r = validate_cycle(cycles[i]);
            if (!is_valid(r))
                problems.push_back("cycle " + std::to_string(i) + ": "
                                   + std::get<Violation>(r).describe());
            bool in_range = true;
            if (auto* vc = std::get_if<VertexCycle>(&cycles[i]))
                in_range = vc->v < h.num_vertices();
            for (const Edge& e : edges_of(cycles[i]))
                in_range = in_range && e.max_vertex() < h.num_vertices();
            if (!in_range)
                problems.push_back("cycle " + std::to_string(i) + ": vertex out of range");
        }
        report.checks.push_back({kValidity, problems.empty(), false, join(problems)});
    }

    // 2. Every edge used is an edge of h.
    {
        std::vector<std::string> problems;
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (const Edge& e : edges_of(cycles[i]))
                if (!h.contains(e))
                    problems.push_back("cycle " + std::to_string(i) + " uses non-edge "
                                       + e.to_string());
        report.checks.push_back({kMembership, problems.empty(), false, join(problems)});
    }

    // 3. No edge appears in two different cycles.
    {
        std::vector<std::string> problems;
        std::map<Edge, std::size_t> owner;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            for (const Edge& e : edges_of(cycles[i])) {
                auto [it, fresh] = owner.emplace(e, i);
                if (!fresh && it->second != i)
                    problems.push_back("edge " + e.to_string() + " in cycles "
                                       + std::to_string(it->second) + " and " + std::to_string(i));
            }
        }
        report.checks.push_back({kDisjoint, problems.empty(), false, join(problems)});
    }

    // 4. The cycles cover every vertex.
    {
        VertexMask covered = 0;
        for (const auto& c : cycles)
            covered |= vertices_of(c);
        const VertexMask missing = h.vertex_mask() & ~covered;
        std::string detail;
        if (missing) {
            detail = "uncovered: {";
            bool first = true;
            for (VertexId v : to_vector(missing)) {
                detail += (first ? "" : ",") + std::to_string(v);
                first = false;
            }
            detail += "}";
        }
        report.checks.push_back({kCoverage, missing == 0, false, detail});
    }

    // 5. At most alpha(h) cycles.
    {
        CheckResult c{kAlpha, false, false, ""};
        std::optional<std::size_t> bound;
        if (mode == AlphaMode::Compute) {
            try {
                bound = verifier_alpha(h, budget);
                report.alpha = bound;
            } catch (const BudgetExhausted& e) {
                c.skipped = true;
                c.detail = std::string("skipped: ") + e.what();
            }
        } else {
            bound = cert.alpha_bound;
        }
        if (bound) {
            c.passed = cycles.size() <= *bound;
            c.detail = std::to_string(cycles.size()) + (c.passed ? " <= " : " > ") + "alpha "
                       + std::to_string(*bound);
            if (mode == AlphaMode::TrustBound)
                c.detail += " (bound trusted from certificate)";
        }
        report.checks.push_back(std::move(c));
    }

    report.ok = true;
    for (const auto& c : report.checks)
        report.ok = report.ok && c.passed && !c.skipped;
    return report;
}

} // namespace lincycle
