#include "arborflow/io.hpp"

#include <algorithm>
#include <sstream>

namespace arborflow {

std::string format_arrowflow(const std::vector<Arc>& arcs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) out << ",";
        out << arcs[i].tail << ">" << arcs[i].head;
    }
    return out.str();
}

std::vector<Arc> parse_arrowflow(const std::string& spec) {
    std::vector<Arc> arcs;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::istringstream part(token);
        int tail = 0, head = 0;
        char gt = 0;
        if (!(part >> tail >> gt >> head) || gt != '>')
            throw std::invalid_argument("parse_arrowflow: expected 'tail>head', got '" +
                                        token + "'");
        std::string rest;
        if (part >> rest)
            throw std::invalid_argument("parse_arrowflow: trailing '" + rest + "'");
        arcs.push_back({tail, head});
    }
    if (arcs.empty()) throw std::invalid_argument("parse_arrowflow: empty spec");
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

Json tree_to_json(const Tree& t) {
    Json j;
    j["schema"] = kSchema;
    j["n"] = t.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : t.edges()) edges.push_back({e.lo, e.hi});
    j["edges"] = edges;
    return j;
}

Json catalysts_to_json(const Tree& t) {
    Json j = tree_to_json(t);
    Json list = Json::array();
    for_each_catalyst(t, [&](const Catalyst& k) {
        Json item;
        item["sigma"] = std::vector<int>(k.sigma.begin() + 1, k.sigma.end());
        Json steps = Json::array();
        for (std::size_t i = 1; i < k.f.size(); ++i)
            steps.push_back(std::to_string(k.f[i].tail) + ">" + std::to_string(k.f[i].head));
        item["f"] = std::move(steps);
        item["sign"] = catalyst_sign(k);
        item["arrowflow"] = format_arrowflow(arrowflow_of(k));
        list.push_back(std::move(item));
    });
    j["count"] = list.size();
    j["catalysts"] = std::move(list);
    return j;
}

Json classes_to_json(const Tree& t) {
    Json j = tree_to_json(t);
    Json list = Json::array();
    for (const auto& [key, stat] : partition_summary(t, false)) {
        Json item;
        item["arrowflow"] = format_arrowflow(key);
        item["class"] = to_string(stat.cls);
        item["size"] = stat.size;
        item["signed_sum"] = stat.signed_sum;
        list.push_back(std::move(item));
    }
    j["classes"] = std::move(list);
    return j;
}

Json report_to_json(const IdentityReport& r) {
    Json j;
    j["schema"] = kSchema;
    j["identity"] = identity_name(r.id);
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["passes"] = r.passes;
    j["failures"] = r.failures;
    return j;
}

Json report_to_json(const std::string& label, const BatchReport& r) {
    Json j;
    j["schema"] = kSchema;
    j["check"] = label;
    j["items"] = r.items;
    j["failures"] = r.failures;
    return j;
}

} // namespace arborflow
