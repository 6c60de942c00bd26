#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

#include "tesscensus/oracle.hpp"

namespace tesscensus {

/**
 * Grows a disk face by face along its outer boundary.
 *
 * The boundary is the outer face cycle. For every boundary vertex the
 * builder keeps the outer half-edge leaving it and the one entering it, so
 * the boundary predecessor and successor are O(1).
 *
 * A new face is attached on the outer side of a boundary edge. Any boundary
 * vertex that the face would bring to q closed faces cannot receive another
 * edge, so the face must continue along the boundary through it; the chain
 * of such vertices is absorbed and the face is closed with fresh vertices
 * (or a single chord when the chain already has p vertices).
 */
class MapBuilder {
public:
    explicit MapBuilder(const Schlafli& s) : map_(s), p_(*s.p()), q_(s.q()) {}

    void seed() {
        for (int i = 0; i < p_; ++i) new_vertex();
        std::vector<HalfEdgeId> outer(static_cast<std::size_t>(p_));
        for (int i = 0; i < p_; ++i) outer[static_cast<std::size_t>(i)] = new_edge(i, (i + 1) % p_);
        const FaceId f = 0;
        map_.faces_.push_back({twin(outer[0]), p_});
        for (int i = 0; i < p_; ++i) {
            const HalfEdgeId o = outer[static_cast<std::size_t>(i)];
            const HalfEdgeId o_next = outer[static_cast<std::size_t>((i + 1) % p_)];
            const HalfEdgeId o_prev = outer[static_cast<std::size_t>((i + p_ - 1) % p_)];
            he(o).next = o_next;
            he(twin(o)).face = f;
            he(twin(o)).next = twin(o_prev);
            boundary_out_[static_cast<std::size_t>(i)] = o;
            boundary_in_[static_cast<std::size_t>((i + 1) % p_)] = o;
            vert(i).closed_faces = 1;
        }
    }

    std::size_t vertex_count() const { return map_.vertices_.size(); }
    bool saturated(VertexId v) const { return map_.saturated(v); }

    /// Attaches faces around v until it has q of them.
    void complete(VertexId v) {
        while (map_.vertices_[static_cast<std::size_t>(v)].closed_faces < q_) attach_face(v);
    }

    std::vector<int> distances() const {
        std::vector<int> dist(vertex_count(), -1);
        std::queue<VertexId> frontier;
        dist[0] = 0;
        frontier.push(0);
        while (!frontier.empty()) {
            const VertexId u = frontier.front();
            frontier.pop();
            for (VertexId w : map_.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    frontier.push(w);
                }
            }
        }
        return dist;
    }

    /// Largest n with every vertex at distance <= n saturated; -1 if the origin is not.
    int saturated_depth() const {
        const auto dist = distances();
        int min_unsaturated = -1;
        for (VertexId v = 0; v < static_cast<VertexId>(dist.size()); ++v) {
            const int d = dist[static_cast<std::size_t>(v)];
            if (d >= 0 && !map_.saturated(v) && (min_unsaturated < 0 || d < min_unsaturated)) min_unsaturated = d;
        }
        return min_unsaturated - 1;
    }

    /// Unsaturated vertices at distance <= level, nearest first.
    std::vector<VertexId> unsaturated_within(int level) const {
        const auto dist = distances();
        std::vector<VertexId> out;
        for (VertexId v = 0; v < static_cast<VertexId>(dist.size()); ++v) {
            const int d = dist[static_cast<std::size_t>(v)];
            if (d >= 0 && d <= level && !map_.saturated(v)) out.push_back(v);
        }
        std::stable_sort(out.begin(), out.end(), [&](VertexId x, VertexId y) {
            return dist[static_cast<std::size_t>(x)] < dist[static_cast<std::size_t>(y)];
        });
        return out;
    }

    PlanarMap take() { return std::move(map_); }

private:
    HalfEdge& he(HalfEdgeId h) { return map_.half_edges_[static_cast<std::size_t>(h)]; }
    HalfEdgeId twin(HalfEdgeId h) const { return map_.half_edges_[static_cast<std::size_t>(h)].twin; }
    VertexId origin_of(HalfEdgeId h) const { return map_.half_edges_[static_cast<std::size_t>(h)].origin; }
    PlanarMap::VertexRecord& vert(VertexId v) { return map_.vertices_[static_cast<std::size_t>(v)]; }
    int closed(VertexId v) const { return map_.vertices_[static_cast<std::size_t>(v)].closed_faces; }

    VertexId new_vertex() {
        map_.vertices_.emplace_back();
        boundary_out_.push_back(kNoHalfEdge);
        boundary_in_.push_back(kNoHalfEdge);
        return static_cast<VertexId>(map_.vertices_.size() - 1);
    }

    // Creates the edge {a,b}; returns the half-edge a -> b. Faces and next
    // pointers are left for the caller.
    HalfEdgeId new_edge(VertexId a, VertexId b) {
        const auto h = static_cast<HalfEdgeId>(map_.half_edges_.size());
        map_.half_edges_.push_back({a, h + 1, kNoHalfEdge, kOuterFace});
        map_.half_edges_.push_back({b, h, kNoHalfEdge, kOuterFace});
        if (vert(a).out == kNoHalfEdge) vert(a).out = h;
        if (vert(b).out == kNoHalfEdge) vert(b).out = h + 1;
        ++vert(a).degree;
        ++vert(b).degree;
        return h;
    }

    bool adjacent(VertexId a, VertexId b) const {
        for (VertexId w : map_.neighbors(a)) {
            if (w == b) return true;
        }
        return false;
    }

    [[noreturn]] void inconsistent(const std::string& why) const {
        throw BadSymbol("cannot extend the " + map_.symbol().to_string() + " disk: " + why);
    }

    // New face on the outer side of the boundary edge entering v.
    void attach_face(VertexId v) {
        const HalfEdgeId entering = boundary_in_[static_cast<std::size_t>(v)];
        if (entering == kNoHalfEdge) inconsistent("vertex is not on the boundary");

        std::deque<HalfEdgeId> chain{entering};
        VertexId first = origin_of(entering);
        VertexId last = v;
        int count = 2;
        while (closed(first) + 1 == q_) {
            const HalfEdgeId e = boundary_in_[static_cast<std::size_t>(first)];
            chain.push_front(e);
            first = origin_of(e);
            if (++count > p_ || first == last) inconsistent("boundary chain longer than a face");
        }
        while (closed(last) + 1 == q_) {
            const HalfEdgeId e = boundary_out_[static_cast<std::size_t>(last)];
            chain.push_back(e);
            last = origin_of(twin(e));
            if (++count > p_ || last == first) inconsistent("boundary chain longer than a face");
        }

        const auto f = static_cast<FaceId>(map_.faces_.size());
        const HalfEdgeId before = boundary_in_[static_cast<std::size_t>(first)];
        const HalfEdgeId after = boundary_out_[static_cast<std::size_t>(last)];

        for (std::size_t i = 0; i < chain.size(); ++i) {
            he(chain[i]).face = f;
            if (i + 1 < chain.size()) he(chain[i]).next = chain[i + 1];
        }
        for (std::size_t i = 1; i < chain.size(); ++i) {
            const VertexId inner = origin_of(chain[i]);
            ++vert(inner).closed_faces;
            boundary_out_[static_cast<std::size_t>(inner)] = kNoHalfEdge;
            boundary_in_[static_cast<std::size_t>(inner)] = kNoHalfEdge;
        }
        ++vert(first).closed_faces;
        ++vert(last).closed_faces;

        // Outer path first -> w_1 -> ... -> w_k -> last.
        const int fresh = p_ - count;
        if (fresh == 0 && adjacent(first, last)) inconsistent("closing chord duplicates an edge");
        std::vector<VertexId> path{first};
        for (int i = 0; i < fresh; ++i) path.push_back(new_vertex());
        path.push_back(last);

        std::vector<HalfEdgeId> outer;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) outer.push_back(new_edge(path[i], path[i + 1]));

        he(before).next = outer.front();
        for (std::size_t i = 0; i + 1 < outer.size(); ++i) he(outer[i]).next = outer[i + 1];
        he(outer.back()).next = after;

        he(chain.back()).next = twin(outer.back());
        for (std::size_t i = outer.size(); i-- > 0;) {
            const HalfEdgeId inner = twin(outer[i]);
            he(inner).face = f;
            he(inner).next = i > 0 ? twin(outer[i - 1]) : chain.front();
        }

        for (std::size_t i = 0; i < outer.size(); ++i) {
            boundary_out_[static_cast<std::size_t>(path[i])] = outer[i];
            boundary_in_[static_cast<std::size_t>(path[i + 1])] = outer[i];
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) vert(path[i]).closed_faces = 1;

        map_.faces_.push_back({chain.front(), p_});
    }

    PlanarMap map_;
    int p_;
    int q_;
    std::vector<HalfEdgeId> boundary_out_;
    std::vector<HalfEdgeId> boundary_in_;
};

PlanarMap build_map(const Schlafli& s, int min_saturated_depth, std::size_t vertex_budget, bool fill_budget,
                    BuildOrder order) {
    if (!s.has_finite_faces()) throw BadSymbol("build_map needs finite p; use build_tree for " + s.to_string());
    if (!s.admissible()) throw BadSymbol(s.to_string() + " is spherical");
    if (min_saturated_depth < 0) throw std::invalid_argument("build_map: negative depth");

    MapBuilder builder(s);
    builder.seed();
    const auto worst_growth = static_cast<std::size_t>(s.q() * (*s.p() - 2));
    const auto fits = [&] { return builder.vertex_count() + worst_growth <= vertex_budget; };

    if (order == BuildOrder::Sweep) {
        std::size_t cursor = 0;
        std::size_t next_check = 0;
        while (true) {
            while (cursor < builder.vertex_count() && builder.saturated(static_cast<VertexId>(cursor))) ++cursor;
            if (cursor >= next_check) {
                // Roughly once per layer: distances only settle layer by layer.
                if (!fill_budget && builder.saturated_depth() >= min_saturated_depth) break;
                next_check = builder.vertex_count();
            }
            if (!fits()) break;
            builder.complete(static_cast<VertexId>(cursor));
        }
    } else {
        // Complete the unsaturated vertices nearest the origin first, one
        // distance level at a time; a level is done once a fresh BFS finds
        // no unsaturated vertex at or below it.
        bool out_of_budget = false;
        for (int level = 0; !out_of_budget && (fill_budget || level <= min_saturated_depth); ++level) {
            while (!out_of_budget) {
                const auto pending = builder.unsaturated_within(level);
                if (pending.empty()) break;
                for (VertexId v : pending) {
                    if (builder.saturated(v)) continue;
                    if (!fits()) {
                        out_of_budget = true;
                        break;
                    }
                    builder.complete(v);
                }
            }
        }
    }

    const int achieved = builder.saturated_depth();
    if (achieved < min_saturated_depth) throw BudgetExceeded(vertex_budget, achieved, min_saturated_depth);
    return builder.take();
}

PlanarMap build_tree(int q, int depth) {
    if (q < 3) throw BadDegree("vertex degree q must be >= 3, got " + std::to_string(q));
    if (depth < 0) throw std::invalid_argument("build_tree: negative depth");
    PlanarMap map(Schlafli::infinite(q));

    // rotation[v] lists outgoing half-edges: parent edge first, then children.
    std::vector<std::vector<HalfEdgeId>> rotation(1);
    map.vertices_.emplace_back();
    std::vector<VertexId> layer{0};
    for (int g = 0; g <= depth; ++g) {
        std::vector<VertexId> next_layer;
        for (VertexId u : layer) {
            const int children = g == 0 ? q : q - 1;
            for (int i = 0; i < children; ++i) {
                const auto w = static_cast<VertexId>(map.vertices_.size());
                map.vertices_.emplace_back();
                rotation.emplace_back();
                const auto h = static_cast<HalfEdgeId>(map.half_edges_.size());
                map.half_edges_.push_back({u, h + 1, kNoHalfEdge, kOuterFace});
                map.half_edges_.push_back({w, h, kNoHalfEdge, kOuterFace});
                rotation[static_cast<std::size_t>(u)].push_back(h);
                rotation[static_cast<std::size_t>(w)].push_back(h + 1);
                next_layer.push_back(w);
            }
        }
        layer = std::move(next_layer);
    }

    for (std::size_t v = 0; v < rotation.size(); ++v) {
        const auto& rot = rotation[v];
        auto& rec = map.vertices_[v];
        rec.degree = static_cast<int>(rot.size());
        rec.out = rot.empty() ? kNoHalfEdge : rot.front();
        // Walking the single outer face: arrive along twin(x), leave along x's successor.
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const HalfEdgeId x = rot[i];
            const HalfEdgeId succ = rot[(i + 1) % rot.size()];
            map.half_edges_[static_cast<std::size_t>(map.half_edges_[static_cast<std::size_t>(x)].twin)].next = succ;
        }
    }
    return map;
}

}  // namespace tesscensus
