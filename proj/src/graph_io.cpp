#include "chromata/graph_io.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chromata/errors.hpp"

namespace chromata {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Graph parse_graph6(const std::string& line) {
    std::string s = strip(line);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    if (s.empty()) throw ParseError("graph6: empty payload");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");

    std::size_t pos = 0;
    long long n = 0;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~') {
            if (s.size() < 8) throw ParseError("graph6: truncated size");
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
            pos = 8;
        } else {
            if (s.size() < 4) throw ParseError("graph6: truncated size");
            n = 0;
            for (int i = 1; i < 4; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
            pos = 4;
        }
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n > 100000) throw ParseError("graph6: graph too large");

    long long bits_needed = n * (n - 1) / 2;
    long long groups = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != groups)
        throw ParseError("graph6: wrong payload length");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            int b = (group >> (5 - bit % 6)) & 1;
            if (b) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> groups(static_cast<std::size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                groups[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
        }
    }
    for (int v : groups) out.push_back(static_cast<char>(63 + v));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("edge list: bad line '" + t + "'");
        std::string rest;
        if (ls >> rest) throw ParseError("edge list: trailing tokens on '" + t + "'");
        if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_v = std::max(max_v, static_cast<int>(std::max(u, v)));
    }
    return Graph(max_v + 1, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json graph: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("json graph: expected {n, edges}");
    int n = doc.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("json graph: edge must be [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

std::string to_graph_json(const Graph& g) {
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = edges;
    return doc.dump();
}

Graph parse_graph(const GraphSource& source) {
    switch (source.format) {
        case GraphFormat::graph6: return parse_graph6(source.payload);
        case GraphFormat::edge_list: return parse_edge_list(source.payload);
        case GraphFormat::json: return parse_graph_json(source.payload);
    }
    throw ParseError("unknown graph format tag");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return to_graph6(g);
        case GraphFormat::edge_list: return to_edge_list(g);
        case GraphFormat::json: return to_graph_json(g);
    }
    throw ParseError("unknown graph format tag");
}

GraphFormat sniff_format(const std::string& text) {
    std::string t = strip(text);
    if (!t.empty() && t[0] == '{') return GraphFormat::json;
    std::istringstream ls(t);
    long long u, v;
    if (ls >> u >> v) return GraphFormat::edge_list;
    return GraphFormat::graph6;
}

const char* format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::edge_list: return "edgelist";
        case GraphFormat::json: return "json";
    }
    return "?";
}

GraphFormat format_from_name(const std::string& name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edgelist" || name == "edge-list" || name == "el") return GraphFormat::edge_list;
    if (name == "json") return GraphFormat::json;
    throw InvalidParam("unknown format name '" + name + "'");
}

}  // namespace chromata
