#ifndef TESSCENSUS_PLANAR_MAP_HPP
#define TESSCENSUS_PLANAR_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tesscensus/schlafli.hpp"

namespace tesscensus {

using VertexId = std::int32_t;
using HalfEdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr HalfEdgeId kNoHalfEdge = -1;
/// Face id carried by half-edges on the unbuilt side of the disk.
inline constexpr FaceId kOuterFace = -1;

/// Directed side of an edge. The face lies on the same side for every
/// half-edge of one face cycle; `next` follows that cycle.
struct HalfEdge {
    VertexId origin = 0;
    HalfEdgeId twin = kNoHalfEdge;
    HalfEdgeId next = kNoHalfEdge;
    FaceId face = kOuterFace;
};

struct FaceRecord {
    HalfEdgeId first = kNoHalfEdge;
    int degree = 0;
};

/**
 * Finite disk of a tessellation {p,q} as a half-edge structure.
 *
 * Vertex 0 is the origin. The rotation system is implicit: the outgoing
 * half-edge after h around its origin is next(twin(h)). Closed faces have
 * ids >= 0; the region outside the disk is the single outer face.
 */
class PlanarMap {
public:
    /// A lone origin with no edges.
    static PlanarMap origin_only(const Schlafli& symbol);

    const Schlafli& symbol() const noexcept { return symbol_; }
    VertexId origin() const noexcept { return 0; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t half_edge_count() const noexcept { return half_edges_.size(); }
    std::size_t edge_count() const noexcept { return half_edges_.size() / 2; }
    std::size_t face_count() const noexcept { return faces_.size(); }

    const HalfEdge& half_edge(HalfEdgeId h) const { return half_edges_.at(static_cast<std::size_t>(h)); }
    VertexId dest(HalfEdgeId h) const { return half_edge(half_edge(h).twin).origin; }
    const FaceRecord& face(FaceId f) const { return faces_.at(static_cast<std::size_t>(f)); }

    int degree(VertexId v) const { return record(v).degree; }
    int closed_faces(VertexId v) const { return record(v).closed_faces; }
    /// All q edges present and, for finite p, all q incident faces closed.
    bool saturated(VertexId v) const;

    /// Outgoing half-edges of v in cyclic order.
    std::vector<HalfEdgeId> rotation(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;
    std::vector<VertexId> face_vertices(FaceId f) const;

    /// Empty when every structural invariant holds: twin involution, face
    /// cycles of length p, saturated degrees q, no loops or multi-edges.
    std::vector<std::string> consistency_violations() const;

private:
    friend class MapBuilder;
    friend PlanarMap build_tree(int q, int depth);

    struct VertexRecord {
        HalfEdgeId out = kNoHalfEdge;
        int degree = 0;
        int closed_faces = 0;
    };

    explicit PlanarMap(Schlafli symbol) : symbol_(symbol) {}
    const VertexRecord& record(VertexId v) const { return vertices_.at(static_cast<std::size_t>(v)); }

    Schlafli symbol_;
    std::vector<VertexRecord> vertices_;
    std::vector<HalfEdge> half_edges_;
    std::vector<FaceRecord> faces_;
};

}  // namespace tesscensus

#endif  // TESSCENSUS_PLANAR_MAP_HPP
