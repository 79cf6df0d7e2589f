#include "hamcycle/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hamcycle {

namespace {

std::vector<std::pair<int, int>> live_edges_sorted(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.alive_edge_count()));
    for (int i = 0; i < g.original_edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e.alive) edges.emplace_back(e.a, e.b);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

void write_graph_json(const Graph& g, std::ostream& out) {
    nlohmann::ordered_json j;
    j["v"] = g.vertex_count();
    auto& arr = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : live_edges_sorted(g)) arr.push_back({a, b});
    out << j.dump() << '\n';
}

void write_graph_json(const Graph& g, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
    write_graph_json(g, out);
}

Graph read_graph_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    const int v = j.at("v").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("malformed edge entry in graph JSON");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(v, edges);
}

Graph read_graph_edge_list(std::istream& in) {
    int v = 0;
    long long e = 0;
    if (!(in >> v >> e)) throw std::runtime_error("edge list must start with \"v e\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(std::max<long long>(e, 0)));
    for (long long i = 0; i < e; ++i) {
        int a = 0, b = 0;
        if (!(in >> a >> b)) throw std::runtime_error("edge list ended early");
        edges.emplace_back(a, b);
    }
    return Graph(v, edges);
}

Graph read_graph_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    char c = 0;
    while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
    }
    if (!in) throw std::runtime_error(file.string() + " is empty");
    in.unget();
    if (c == '{') return read_graph_json(in);
    return read_graph_edge_list(in);
}

}  // namespace hamcycle
