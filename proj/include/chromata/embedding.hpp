#pragma once

#include <variant>
#include <vector>

#include "chromata/graph.hpp"

namespace chromata {

/// Combinatorial plane embedding: a rotation system plus the face list it
/// induces. Every directed edge (dart) lies on exactly one face boundary and
/// V - E + F = 2 holds per connected component (sphere normalization);
/// construction enforces both.
struct PlaneEmbedding {
    struct Face {
        int id = 0;
        int component = 0;
        std::vector<int> vertices;  // boundary walk, tails of the darts
        std::vector<int> edge_ids;  // boundary walk edges, same length
        int degree() const { return static_cast<int>(edge_ids.size()); }
    };

    Graph graph;
    std::vector<std::vector<int>> rotation;  // per-vertex cyclic edge ids
    std::vector<Face> faces;
    std::vector<int> face_degrees;
    std::vector<std::vector<int>> component_vertices;

    int face_count() const { return static_cast<int>(faces.size()); }

    /// Degree of vertex in the embedded graph.
    int vertex_degree(int v) const { return graph.degree(v); }

    /// Face ids incident to v, in rotation order (one per incident dart;
    /// a face incident twice appears twice).
    std::vector<int> faces_at_vertex(int v) const;

    /// Face id on each side of edge e (equal for bridges traversed twice).
    std::pair<int, int> faces_at_edge(int e) const;
};

struct NonPlanarWitness {
    /// Edge ids forming a subdivision of K5 or K3,3.
    std::vector<int> edges;
};

using PlanarityResult = std::variant<PlaneEmbedding, NonPlanarWitness>;

/// Planarity test + embedding. The algorithm behind this is Boyer-Myrvold;
/// the contract is only that the returned rotation system passes the face
/// trace and Euler checks, or that the witness is a K5/K3,3 subdivision.
PlanarityResult embed_planar(const Graph& g);

bool is_planar(const Graph& g);

/// Builds the face structure for a caller-supplied rotation system and runs
/// the Euler/genus check. Throws InvalidParam if the rotation is not a valid
/// sphere embedding per component.
PlaneEmbedding build_embedding(const Graph& g, std::vector<std::vector<int>> rotation);

struct FaceInfo {
    int face_id = 0;
    int degree = 0;
    std::vector<int> signature;  // incident vertex degrees, sorted ascending
};

/// Every face annotated with its vertex-degree signature.
std::vector<FaceInfo> face_signatures(const PlaneEmbedding& e);

}  // namespace chromata
