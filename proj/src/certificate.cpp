#include "lincycle/certificate.hpp"

namespace lincycle {

nlohmann::ordered_json to_json(const CoverCertificate& cert)
{
    nlohmann::ordered_json j;
    j["n"] = cert.instance.num_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : cert.instance.edges())
        edges.push_back(std::vector<VertexId>(e.begin(), e.end()));
    j["edges"] = std::move(edges);
    auto cycles = nlohmann::ordered_json::array();
    for (const auto& c : cert.cycles)
        cycles.push_back(to_json(c));
    j["cycles"] = std::move(cycles);
    j["alpha_bound"] = cert.alpha_bound;
    nlohmann::ordered_json stats;
    stats["alpha_exact"] = cert.stats.alpha_exact;
    stats["recursion_depth"] = cert.stats.recursion_depth;
    stats["red_edges_lifted"] = cert.stats.red_edges_lifted;
    stats["search_nodes"] = cert.stats.search_nodes;
    j["stats"] = std::move(stats);
    return j;
}

std::string serialize_certificate(const CoverCertificate& cert)
{
    // One line per cycle; everything else compact.
    const auto j = to_json(cert);
    std::string out = "{\n";
    out += "  \"n\": " + j["n"].dump() + ",\n";
    out += "  \"edges\": " + j["edges"].dump() + ",\n";
    out += "  \"cycles\": [";
    const auto& cycles = j["cycles"];
    for (std::size_t i = 0; i < cycles.size(); ++i)
        out += std::string(i ? "," : "") + "\n    " + cycles[i].dump();
    out += cycles.empty() ? "],\n" : "\n  ],\n";
    out += "  \"alpha_bound\": " + j["alpha_bound"].dump() + ",\n";
    out += "  \"stats\": " + j["stats"].dump() + "\n";
    out += "}\n";
    return out;
}

namespace {

std::size_t get_count(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw CertificateError(std::string("certificate needs a non-negative integer \"") + key
                               + "\"");
    return j[key].get<std::size_t>();
}

} // namespace

CoverCertificate parse_certificate(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw CertificateError("certificate must be a JSON object");

    CoverCertificate cert;
    try {
        const std::size_t n = get_count(j, "n");
        if (!j.contains("edges") || !j["edges"].is_array())
            throw CertificateError("certificate needs an \"edges\" array");
        std::vector<Edge> edges;
        for (const auto& e : j["edges"]) {
            auto cand = cycle_from_json({{"kind", "edge"}, {"e", e}});
            edges.push_back(std::get<EdgeCycle>(cand).e);
        }
        cert.instance = Hypergraph(n, std::move(edges));

        if (!j.contains("cycles") || !j["cycles"].is_array())
            throw CertificateError("certificate needs a \"cycles\" array");
        for (const auto& c : j["cycles"])
            cert.cycles.push_back(cycle_from_json(c));

        cert.alpha_bound = get_count(j, "alpha_bound");
        if (j.contains("stats") && j["stats"].is_object()) {
            const auto& s = j["stats"];
            cert.stats.alpha_exact = s.value("alpha_exact", false);
            cert.stats.recursion_depth = s.value("recursion_depth", std::size_t{0});
            cert.stats.red_edges_lifted = s.value("red_edges_lifted", std::size_t{0});
            cert.stats.search_nodes = s.value("search_nodes", std::uint64_t{0});
        }
    } catch (const CertificateError&) {
        throw;
    } catch (const std::exception& e) {
        throw CertificateError(std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

} // namespace lincycle
