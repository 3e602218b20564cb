#include "geoclique/graph.hpp"

#include "geoclique/errors.hpp"
#include "geoclique/rng.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <sstream>

namespace geoclique {

std::vector<std::pair<int, int>> IntersectionGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) es.emplace_back(u, v);
    return es;
}

std::vector<int> IntersectionGraph::neighbors(int v) const {
    std::vector<int> ns;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) ns.push_back(u);
    return ns;
}

IntersectionGraph IntersectionGraph::complement() const {
    IntersectionGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    c.labels = labels;
    return c;
}

IntersectionGraph IntersectionGraph::induced(const std::vector<int>& verts) const {
    IntersectionGraph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (!labels.empty()) {
        for (int v : verts) g.labels.push_back(labels[static_cast<std::size_t>(v)]);
    }
    return g;
}

bool IntersectionGraph::is_clique(const std::vector<int>& verts) const {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!adjacent(verts[i], verts[j])) return false;
    return true;
}

std::string graph_to_dimacs(const IntersectionGraph& g) {
    std::ostringstream os;
    auto es = g.edges();
    os << "p edge " << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return os.str();
}

IntersectionGraph graph_from_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    IntersectionGraph g;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            long m = 0;
            ls >> fmt >> n >> m;
            require(fmt == "edge" && n >= 0, "bad DIMACS header");
            g = IntersectionGraph(n);
        } else if (tag == 'e') {
            require(n >= 0, "DIMACS edge before header");
            int u = 0, v = 0;
            ls >> u >> v;
            require(u >= 1 && u <= n && v >= 1 && v <= n, "DIMACS edge out of range");
            if (u != v) g.add_edge(u - 1, v - 1);
        }
    }
    require(n >= 0, "missing DIMACS header");
    return g;
}

std::string labels_to_json(const IntersectionGraph& g) {
    nlohmann::ordered_json j;
    j["labels"] = g.labels;
    return j.dump(2) + "\n";
}

void labels_from_json(IntersectionGraph& g, const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    g.labels = j.at("labels").get<std::vector<std::string>>();
    require(static_cast<int>(g.labels.size()) == g.n(), "label sidecar size mismatch");
}

IntersectionGraph random_graph(int n, double p, std::uint64_t seed) {
    IntersectionGraph g(n);
    SplitMix rng(seed);
    auto thresh = static_cast<std::uint64_t>(p * 1000000.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(1000000) < thresh) g.add_edge(u, v);
    return g;
}

} // namespace geoclique
