#include "tesscensus/planar_map.hpp"

#include <algorithm>

namespace tesscensus {

PlanarMap PlanarMap::origin_only(const Schlafli& symbol) {
    PlanarMap map(symbol);
    map.vertices_.emplace_back();
    return map;
}

bool PlanarMap::saturated(VertexId v) const {
    const auto& rec = record(v);
    const int q = symbol_.q();
    if (!symbol_.has_finite_faces()) return rec.degree == q;
    return rec.degree == q && rec.closed_faces == q;
}

std::vector<HalfEdgeId> PlanarMap::rotation(VertexId v) const {
    std::vector<HalfEdgeId> out;
    const HalfEdgeId start = record(v).out;
    if (start == kNoHalfEdge) return out;
    HalfEdgeId h = start;
    do {
        out.push_back(h);
        h = half_edge(half_edge(h).twin).next;
    } while (h != start && out.size() <= half_edges_.size());
    return out;
}

std::vector<VertexId> PlanarMap::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (HalfEdgeId h : rotation(v)) out.push_back(dest(h));
    return out;
}

std::vector<VertexId> PlanarMap::face_vertices(FaceId f) const {
    std::vector<VertexId> out;
    const FaceRecord& rec = face(f);
    HalfEdgeId h = rec.first;
    do {
        out.push_back(half_edge(h).origin);
        h = half_edge(h).next;
    } while (h != rec.first && out.size() <= half_edges_.size());
    return out;
}

std::vector<std::string> PlanarMap::consistency_violations() const {
    std::vector<std::string> bad;
    const auto n_half = static_cast<HalfEdgeId>(half_edges_.size());
    for (HalfEdgeId h = 0; h < n_half; ++h) {
        const HalfEdge& e = half_edges_[static_cast<std::size_t>(h)];
        if (e.twin < 0 || e.twin >= n_half || half_edge(e.twin).twin != h) {
            bad.push_back("half-edge " + std::to_string(h) + ": twin is not an involution");
            continue;
        }
        if (half_edge(e.twin).origin == e.origin) {
            bad.push_back("half-edge " + std::to_string(h) + " is a loop");
        }
        if (e.next < 0 || e.next >= n_half || half_edge(e.next).origin != dest(h)) {
            bad.push_back("half-edge " + std::to_string(h) + ": next does not start at its head");
        } else if (half_edge(e.next).face != e.face) {
            bad.push_back("half-edge " + std::to_string(h) + ": next lies on a different face");
        }
    }
    if (!bad.empty()) return bad;

    const auto p = symbol_.p();
    for (FaceId f = 0; f < static_cast<FaceId>(faces_.size()); ++f) {
        const auto verts = face_vertices(f);
        if (half_edge(face(f).first).face != f) {
            bad.push_back("face " + std::to_string(f) + ": first half-edge belongs elsewhere");
        }
        if (!p || static_cast<int>(verts.size()) != *p || face(f).degree != *p) {
            bad.push_back("face " + std::to_string(f) + " has degree " + std::to_string(verts.size()));
        }
    }

    for (VertexId v = 0; v < static_cast<VertexId>(vertices_.size()); ++v) {
        const auto rot = rotation(v);
        const auto& rec = record(v);
        if (static_cast<int>(rot.size()) != rec.degree) {
            bad.push_back("vertex " + std::to_string(v) + ": rotation has " + std::to_string(rot.size()) +
                          " edges, degree is " + std::to_string(rec.degree));
        }
        const auto faces = std::count_if(rot.begin(), rot.end(),
                                         [&](HalfEdgeId h) { return half_edge(h).face != kOuterFace; });
        if (faces != rec.closed_faces) {
            bad.push_back("vertex " + std::to_string(v) + ": closed face count mismatch");
        }
        if (rec.degree > symbol_.q() || (saturated(v) && rec.degree != symbol_.q())) {
            bad.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(rec.degree));
        }
        auto nbrs = neighbors(v);
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
            bad.push_back("vertex " + std::to_string(v) + " has a multi-edge");
        }
    }
    return bad;
}

}  // namespace tesscensus
