#include "chromata/embedding.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "chromata/errors.hpp"

namespace chromata {

namespace {

// Trace faces out of the rotation system. Dart 2e runs u->v for the stored
// edge (u,v); dart 2e+1 runs v->u. The successor of a dart entering w via
// edge e leaves w along the edge after e in rotation[w].
void trace_faces(PlaneEmbedding& emb) {
    const Graph& g = emb.graph;
    int n = g.vertex_count();
    int m = g.edge_count();

    std::vector<std::map<int, int>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
        if (static_cast<int>(rot.size()) != g.degree(v))
            throw InvalidParam("embedding: rotation size mismatch at vertex " + std::to_string(v));
        for (std::size_t i = 0; i < rot.size(); ++i) {
            auto [a, b] = g.edge(rot[i]);
            if (a != v && b != v)
                throw InvalidParam("embedding: rotation lists foreign edge");
            if (!pos[static_cast<std::size_t>(v)].emplace(rot[i], static_cast<int>(i)).second)
                throw InvalidParam("embedding: duplicate edge in rotation");
        }
    }

    auto dart_head = [&](int dart) {
        auto [u, v] = g.edge(dart / 2);
        return dart % 2 == 0 ? v : u;
    };
    auto dart_tail = [&](int dart) {
        auto [u, v] = g.edge(dart / 2);
        return dart % 2 == 0 ? u : v;
    };
    auto next_dart = [&](int dart) {
        int w = dart_head(dart);
        int e = dart / 2;
        const auto& rot = emb.rotation[static_cast<std::size_t>(w)];
        int i = pos[static_cast<std::size_t>(w)].at(e);
        int e2 = rot[static_cast<std::size_t>((i + 1) % static_cast<int>(rot.size()))];
        auto [a, b] = g.edge(e2);
        (void)b;
        return a == w ? 2 * e2 : 2 * e2 + 1;
    };

    emb.component_vertices = g.components();
    std::vector<int> comp_of_vertex(static_cast<std::size_t>(n), 0);
    for (std::size_t c = 0; c < emb.component_vertices.size(); ++c)
        for (int v : emb.component_vertices[c]) comp_of_vertex[static_cast<std::size_t>(v)] = static_cast<int>(c);

    std::vector<char> seen(static_cast<std::size_t>(2 * m), 0);
    emb.faces.clear();
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[static_cast<std::size_t>(d0)]) continue;
        PlaneEmbedding::Face face;
        face.id = static_cast<int>(emb.faces.size());
        face.component = comp_of_vertex[static_cast<std::size_t>(dart_tail(d0))];
        int d = d0;
        do {
            if (seen[static_cast<std::size_t>(d)])
                throw InvalidParam("embedding: face trace revisits a dart");
            seen[static_cast<std::size_t>(d)] = 1;
            face.vertices.push_back(dart_tail(d));
            face.edge_ids.push_back(d / 2);
            d = next_dart(d);
        } while (d != d0);
        emb.faces.push_back(std::move(face));
    }
    // Isolated vertices carry one empty face each so per-component Euler
    // counts work out on the sphere.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            PlaneEmbedding::Face face;
            face.id = static_cast<int>(emb.faces.size());
            face.component = comp_of_vertex[static_cast<std::size_t>(v)];
            face.vertices.push_back(v);
            emb.faces.push_back(std::move(face));
        }
    }

    emb.face_degrees.clear();
    for (const auto& f : emb.faces) emb.face_degrees.push_back(f.degree());

    // Genus check, component by component.
    std::vector<long long> fc(emb.component_vertices.size(), 0);
    for (const auto& f : emb.faces) fc[static_cast<std::size_t>(f.component)]++;
    std::vector<long long> ec(emb.component_vertices.size(), 0);
    for (const auto& [u, v] : g.edges()) {
        (void)v;
        ec[static_cast<std::size_t>(comp_of_vertex[static_cast<std::size_t>(u)])]++;
    }
    for (std::size_t c = 0; c < emb.component_vertices.size(); ++c) {
        long long V = static_cast<long long>(emb.component_vertices[c].size());
        if (V - ec[c] + fc[c] != 2)
            throw InvalidParam("embedding: component fails V - E + F = 2");
    }
}

using boost_graph_t =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

boost_graph_t to_boost(const Graph& g) {
    boost_graph_t bg(static_cast<std::size_t>(g.vertex_count()));
    int idx = 0;
    for (const auto& [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), idx++, bg);
    return bg;
}

}  // namespace

PlanarityResult embed_planar(const Graph& g) {
    boost_graph_t bg = to_boost(g);
    using edge_t = boost::graph_traits<boost_graph_t>::edge_descriptor;
    std::vector<std::vector<edge_t>> storage(boost::num_vertices(bg));
    auto embedding_map =
        boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    std::vector<edge_t> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding_map,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    auto index_map = boost::get(boost::edge_index, bg);
    if (!planar) {
        NonPlanarWitness w;
        for (const auto& e : kuratowski) w.edges.push_back(boost::get(index_map, e));
        std::sort(w.edges.begin(), w.edges.end());
        w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
        return w;
    }
    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const auto& e : storage[static_cast<std::size_t>(v)])
            rotation[static_cast<std::size_t>(v)].push_back(boost::get(index_map, e));
    return build_embedding(g, std::move(rotation));
}

bool is_planar(const Graph& g) {
    boost_graph_t bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

PlaneEmbedding build_embedding(const Graph& g, std::vector<std::vector<int>> rotation) {
    PlaneEmbedding emb;
    emb.graph = g;
    emb.rotation = std::move(rotation);
    trace_faces(emb);
    return emb;
}

std::vector<int> PlaneEmbedding::faces_at_vertex(int v) const {
    // Map each dart leaving v to its face, in rotation order.
    std::vector<int> out;
    std::vector<int> face_of_dart(static_cast<std::size_t>(2 * graph.edge_count()), -1);
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.edge_ids.size(); ++i) {
            int e = f.edge_ids[i];
            int tail = f.vertices[i];
            auto [a, b] = graph.edge(e);
            (void)b;
            int dart = (tail == a) ? 2 * e : 2 * e + 1;
            face_of_dart[static_cast<std::size_t>(dart)] = f.id;
        }
    }
    for (int e : rotation[static_cast<std::size_t>(v)]) {
        auto [a, b] = graph.edge(e);
        (void)b;
        int dart = (v == a) ? 2 * e : 2 * e + 1;
        out.push_back(face_of_dart[static_cast<std::size_t>(dart)]);
    }
    if (graph.degree(v) == 0) {
        for (const auto& f : faces)
            if (f.edge_ids.empty() && !f.vertices.empty() && f.vertices[0] == v)
                out.push_back(f.id);
    }
    return out;
}

std::pair<int, int> PlaneEmbedding::faces_at_edge(int e) const {
    int fa = -1, fb = -1;
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.edge_ids.size(); ++i) {
            if (f.edge_ids[i] != e) continue;
            int tail = f.vertices[i];
            auto [a, b] = graph.edge(e);
            (void)b;
            if (tail == a)
                fa = f.id;
            else
                fb = f.id;
        }
    }
    return {fa, fb};
}

std::vector<FaceInfo> face_signatures(const PlaneEmbedding& e) {
    std::vector<FaceInfo> out;
    for (const auto& f : e.faces) {
        FaceInfo info;
        info.face_id = f.id;
        info.degree = f.degree();
        for (int v : f.vertices) info.signature.push_back(e.graph.degree(v));
        std::sort(info.signature.begin(), info.signature.end());
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace chromata
