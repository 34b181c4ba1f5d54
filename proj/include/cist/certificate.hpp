#ifndef CIST_CERTIFICATE_HPP
#define CIST_CERTIFICATE_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cist/condition.hpp"
#include "cist/construct.hpp"
#include "cist/trees.hpp"

namespace cist {

using json = nlohmann::ordered_json;

inline std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Vertex ids in emitted JSON are mapped back to the input's original labels;
// identity when the input was already densely labeled.
class LabelMap {
public:
    LabelMap() = default;
    explicit LabelMap(std::vector<long long> labels) : labels_(std::move(labels)) {}

    long long operator()(int id) const {
        if (labels_.empty()) return id;
        return labels_[static_cast<size_t>(id)];
    }

private:
    std::vector<long long> labels_;
};

inline json report_json(const ConditionReport& r) {
    json j;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["delta"] = r.delta;
    j["connected"] = r.connected;
    j["kappa"] = r.kappa;
    j["sigma2"] = r.sigma2 ? json(*r.sigma2) : json("inf");
    j["mu2"] = r.mu2 ? json(*r.mu2) : json("inf");
    j["fan_ok"] = r.fan_ok;
    return j;
}

inline json witness_json(const WitnessValue& w, const LabelMap& label) {
    if (std::holds_alternative<int>(w)) return label(std::get<int>(w));
    if (std::holds_alternative<std::vector<int>>(w)) {
        json arr = json::array();
        for (int v : std::get<std::vector<int>>(w)) arr.push_back(label(v));
        return arr;
    }
    json arr = json::array();
    for (auto [a, b] : std::get<std::vector<Edge>>(w)) arr.push_back({label(a), label(b)});
    return arr;
}

inline json trace_json(const ConstructionTrace& t, const LabelMap& label) {
    json j;
    j["branch"] = to_string(t.branch);
    json w = json::object();
    for (auto& [k, v] : t.witnesses) w[k] = witness_json(v, label);
    j["witnesses"] = w;
    return j;
}

inline json vertexset_json(const VertexSet& s, const LabelMap& label) {
    json arr = json::array();
    for (int v : s) arr.push_back(label(v));
    return arr;
}

inline json edges_json(const EdgeSet& es, const LabelMap& label) {
    json arr = json::array();
    for (auto [u, v] : es) arr.push_back({label(u), label(v)});
    return arr;
}

struct Certificate {
    std::string input_digest;
    ConditionReport report;
    Construction construction;
    TreePair trees;
    bool partition_ok = false;
    bool definitional_ok = false;
    bool leafrule_ok = false;

    bool all_ok() const { return partition_ok && definitional_ok && leafrule_ok; }
};

// Runs the whole pipeline: condition report, construction, tree extraction,
// and both verifiers.  Throws PreconditionFailed when the degree condition
// does not apply.
inline Certificate make_certificate(const Graph& g) {
    Certificate cert;
    cert.input_digest = fnv1a64(write_edge_list(g));
    cert.report = condition_report(g);
    cert.construction = construct(g);
    cert.partition_ok = is_cist_partition(g, cert.construction.partition).ok;
    cert.trees = partition_to_trees(g, cert.construction.partition);
    cert.definitional_ok = verify_cists_definitional(g, cert.trees).ok;
    cert.leafrule_ok = verify_cists_leafrule(g, cert.trees).ok;
    return cert;
}

inline json certificate_json(const Certificate& cert, const LabelMap& label = {}) {
    json j;
    j["schema_version"] = "1";
    j["input_digest"] = cert.input_digest;
    j["report"] = report_json(cert.report);
    j["trace"] = trace_json(cert.construction.trace, label);
    j["partition"] = {{"v1", vertexset_json(cert.construction.partition.v1, label)},
                      {"v2", vertexset_json(cert.construction.partition.v2, label)}};
    j["trees"] = {{"t1", edges_json(cert.trees.t1, label)},
                  {"t2", edges_json(cert.trees.t2, label)}};
    j["verdicts"] = {{"partition_ok", cert.partition_ok},
                     {"definitional_ok", cert.definitional_ok},
                     {"leafrule_ok", cert.leafrule_ok}};
    return j;
}

}  // namespace cist

#endif
