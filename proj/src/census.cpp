#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <utility>

#include "tesscensus/oracle.hpp"

namespace tesscensus {

std::string to_string(const VertexProfile& profile) {
    return "parents=" + std::to_string(profile.parents) + " children=" + std::to_string(profile.children) +
           " fraternal=" + std::to_string(profile.fraternal) +
           " consortial=" + std::to_string(profile.consortial);
}

StructureViolation::StructureViolation(VertexId vertex, int generation, VertexProfile profile)
    : Error("vertex " + std::to_string(vertex) + " in generation " + std::to_string(generation) +
            " fits no vertex type (" + to_string(profile) + ")"),
      vertex_(vertex),
      generation_(generation),
      profile_(profile) {}

CensusReport bfs_census(const PlanarMap& map) {
    CensusReport report{.symbol = map.symbol()};
    report.generation.assign(map.vertex_count(), -1);
    std::queue<VertexId> frontier;
    report.generation[0] = 0;
    frontier.push(map.origin());
    int min_unsaturated = -1;
    int max_generation = 0;
    while (!frontier.empty()) {
        const VertexId u = frontier.front();
        frontier.pop();
        const int du = report.generation[static_cast<std::size_t>(u)];
        max_generation = std::max(max_generation, du);
        if (!map.saturated(u) && (min_unsaturated < 0 || du < min_unsaturated)) min_unsaturated = du;
        for (VertexId w : map.neighbors(u)) {
            if (report.generation[static_cast<std::size_t>(w)] < 0) {
                report.generation[static_cast<std::size_t>(w)] = du + 1;
                frontier.push(w);
            }
        }
    }
    report.trusted_depth = std::max(0, min_unsaturated < 0 ? max_generation : min_unsaturated - 1);

    report.v.assign(static_cast<std::size_t>(report.trusted_depth) + 1, 0);
    for (int g : report.generation) {
        if (g >= 0 && g <= report.trusted_depth) ++report.v[static_cast<std::size_t>(g)];
    }
    return report;
}

namespace {

std::vector<VertexId> parents_of(const PlanarMap& map, const CensusReport& report, VertexId v) {
    std::vector<VertexId> out;
    const int g = report.generation[static_cast<std::size_t>(v)];
    for (VertexId w : map.neighbors(v)) {
        if (report.generation[static_cast<std::size_t>(w)] == g - 1) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int face_span_parameter(const Schlafli& s) {
    const int p = *s.p();
    return p == 3 ? 1 : p / 2;
}

}  // namespace

VertexProfile vertex_profile(const PlanarMap& map, const CensusReport& report, VertexId v) {
    VertexProfile profile;
    const int g = report.generation.at(static_cast<std::size_t>(v));
    const auto my_parents = parents_of(map, report, v);
    for (VertexId w : map.neighbors(v)) {
        const int gw = report.generation[static_cast<std::size_t>(w)];
        if (gw == g - 1) {
            ++profile.parents;
        } else if (gw == g + 1) {
            ++profile.children;
        } else if (gw == g) {
            const auto their_parents = parents_of(map, report, w);
            std::vector<VertexId> shared;
            std::set_intersection(my_parents.begin(), my_parents.end(), their_parents.begin(),
                                  their_parents.end(), std::back_inserter(shared));
            ++(shared.empty() ? profile.consortial : profile.fraternal);
        }
    }
    return profile;
}

CensusReport classify(const PlanarMap& map, CensusReport report) {
    const std::size_t depth = static_cast<std::size_t>(report.trusted_depth) + 1;
    report.a.assign(depth, 0);
    report.b.assign(depth, 0);
    report.c.assign(depth, 0);
    report.types.assign(map.vertex_count(), VertexType::Unclassified);
    report.types[0] = VertexType::Origin;

    const auto p = map.symbol().p();
    for (VertexId v = 1; v < static_cast<VertexId>(map.vertex_count()); ++v) {
        const int g = report.generation[static_cast<std::size_t>(v)];
        if (g < 1 || g > report.trusted_depth) continue;
        const VertexProfile pr = vertex_profile(map, report, v);

        VertexType type = VertexType::Unclassified;
        if (!p || *p % 2 == 0) {
            if (pr.fraternal == 0 && pr.consortial == 0) {
                if (pr.parents == 1) type = VertexType::A;
                if (pr.parents == 2 && p) type = VertexType::B;
            }
        } else if (*p == 3) {
            // Classified in the graph with the fraternal edges deleted.
            if (pr.fraternal == 2 && pr.consortial == 0) {
                if (pr.parents == 1) type = VertexType::A;
                if (pr.parents == 2) type = VertexType::B;
            }
        } else if (pr.fraternal == 0) {
            if (pr.parents == 1 && pr.consortial == 0) type = VertexType::A;
            if (pr.parents == 2 && pr.consortial == 0) type = VertexType::B;
            if (pr.parents == 1 && pr.consortial == 1) type = VertexType::C;
        }

        const auto gi = static_cast<std::size_t>(g);
        switch (type) {
            case VertexType::A: ++report.a[gi]; break;
            case VertexType::B: ++report.b[gi]; break;
            case VertexType::C: ++report.c[gi]; break;
            default: throw StructureViolation(v, g, pr);
        }
        report.types[static_cast<std::size_t>(v)] = type;
    }
    report.classified = true;
    return report;
}

AuditReport audit_faces(const PlanarMap& map, const CensusReport& report) {
    if (!report.classified) throw std::logic_error("audit_faces: census must be classified first");
    AuditReport audit;
    const auto p = map.symbol().p();
    if (!p) return audit;
    const int span = face_span_parameter(map.symbol());
    const auto gen = [&](VertexId v) { return report.generation[static_cast<std::size_t>(v)]; };
    const auto type = [&](VertexId v) { return report.types[static_cast<std::size_t>(v)]; };

    std::map<VertexId, int> latest_vertex_of;
    std::map<std::pair<VertexId, VertexId>, int> latest_edge_of;
    std::map<std::pair<VertexId, VertexId>, int> earliest_edge_of;

    for (FaceId f = 0; f < static_cast<FaceId>(map.face_count()); ++f) {
        const auto verts = map.face_vertices(f);
        const bool inside = std::all_of(verts.begin(), verts.end(), [&](VertexId v) {
            return gen(v) >= 0 && gen(v) <= report.trusted_depth;
        });
        if (!inside) continue;
        ++audit.items_checked;

        const auto n = verts.size();
        int lo = gen(verts[0]), hi = gen(verts[0]);
        for (VertexId v : verts) {
            lo = std::min(lo, gen(v));
            hi = std::max(hi, gen(v));
        }
        // Returns the extreme positions if they form a vertex or an edge of the face.
        const auto extreme = [&](int level) -> std::vector<std::size_t> {
            std::vector<std::size_t> at;
            for (std::size_t i = 0; i < n; ++i) {
                if (gen(verts[i]) == level) at.push_back(i);
            }
            if (at.size() == 1) return at;
            if (at.size() == 2 && (at[1] - at[0] == 1 || (at[0] == 0 && at[1] == n - 1))) return at;
            return {};
        };
        const auto earliest = extreme(lo);
        const auto latest = extreme(hi);
        const std::string where = "face " + std::to_string(f);
        if (earliest.empty()) audit.violations.push_back(where + ": no unique earliest vertex or edge");
        if (latest.empty()) audit.violations.push_back(where + ": no unique latest vertex or edge");
        if (earliest.empty() || latest.empty()) continue;
        if (hi - lo != span) {
            audit.violations.push_back(where + ": spans " + std::to_string(hi - lo) + " generations");
        }
        if (earliest.size() + latest.size() != (*p % 2 == 0 ? 2u : 3u)) {
            audit.violations.push_back(where + ": earliest/latest shape does not fit the face degree");
        }

        const auto edge_key = [&](const std::vector<std::size_t>& at) {
            VertexId x = verts[at[0]], y = verts[at[1]];
            return std::make_pair(std::min(x, y), std::max(x, y));
        };
        if (latest.size() == 1) {
            const VertexId top = verts[latest[0]];
            ++latest_vertex_of[top];
            if (type(top) != VertexType::B) {
                audit.violations.push_back(where + ": latest vertex " + std::to_string(top) + " is not type-B");
            }
        } else {
            const auto key = edge_key(latest);
            ++latest_edge_of[key];
            if (*p >= 5 && (type(key.first) != VertexType::C || type(key.second) != VertexType::C)) {
                audit.violations.push_back(where + ": latest edge does not join two type-C vertices");
            }
        }
        if (earliest.size() == 2) ++earliest_edge_of[edge_key(earliest)];
    }

    for (VertexId v = 1; v < static_cast<VertexId>(map.vertex_count()); ++v) {
        if (gen(v) < 1 || gen(v) > report.trusted_depth) continue;
        if (type(v) == VertexType::B) {
            ++audit.items_checked;
            const auto it = latest_vertex_of.find(v);
            const int count = it == latest_vertex_of.end() ? 0 : it->second;
            if (count != 1) {
                audit.violations.push_back("type-B vertex " + std::to_string(v) + " is the latest vertex of " +
                                           std::to_string(count) + " faces");
            }
        }
    }
    if (*p >= 5 && *p % 2 == 1) {
        // Consortial edges: latest edge of one face, earliest edge of one face.
        for (VertexId v = 1; v < static_cast<VertexId>(map.vertex_count()); ++v) {
            if (type(v) != VertexType::C) continue;
            for (VertexId w : map.neighbors(v)) {
                if (w < v || gen(w) != gen(v)) continue;
                ++audit.items_checked;
                const auto key = std::make_pair(v, w);
                if (latest_edge_of[key] != 1) {
                    audit.violations.push_back("consortial edge " + std::to_string(v) + "-" + std::to_string(w) +
                                               " is the latest edge of " + std::to_string(latest_edge_of[key]) +
                                               " faces");
                }
                if (gen(v) + span <= report.trusted_depth && earliest_edge_of[key] != 1) {
                    audit.violations.push_back("consortial edge " + std::to_string(v) + "-" + std::to_string(w) +
                                               " is the earliest edge of " +
                                               std::to_string(earliest_edge_of[key]) + " faces");
                }
            }
        }
    }
    return audit;
}

AuditReport audit_filial_edges(const PlanarMap& map, const CensusReport& report) {
    if (!report.classified) throw std::logic_error("audit_filial_edges: census must be classified first");
    AuditReport audit;
    const int q = map.symbol().q();
    const auto p = map.symbol().p();
    const bool reduced = p && *p == 3;
    const auto depth = static_cast<std::size_t>(report.trusted_depth);

    std::vector<std::int64_t> direct(depth + 1, 0), from_parents(depth + 1, 0), from_children(depth + 1, 0);
    const auto gen = [&](VertexId v) { return report.generation[static_cast<std::size_t>(v)]; };
    for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(map.half_edge_count()); h += 2) {
        const int g0 = gen(map.half_edge(h).origin);
        const int g1 = gen(map.dest(h));
        const int hi = std::max(g0, g1);
        if (g0 >= 0 && g1 >= 0 && std::abs(g0 - g1) == 1 && hi <= report.trusted_depth) {
            ++direct[static_cast<std::size_t>(hi)];
        }
    }
    for (VertexId v = 0; v < static_cast<VertexId>(map.vertex_count()); ++v) {
        const int g = gen(v);
        if (g < 0 || g > report.trusted_depth) continue;
        const VertexProfile pr = vertex_profile(map, report, v);
        from_parents[static_cast<std::size_t>(g)] += pr.parents;
        if (g + 1 <= report.trusted_depth) from_children[static_cast<std::size_t>(g) + 1] += pr.children;
    }

    for (std::size_t n = 1; n <= depth; ++n) {
        ++audit.items_checked;
        const std::int64_t lhs = report.a[n] + 2 * report.b[n] + report.c[n];
        std::int64_t rhs = 0;
        if (n == 1) {
            rhs = q;
        } else if (reduced) {
            rhs = (q - 3) * report.a[n - 1] + (q - 4) * report.b[n - 1];
        } else {
            rhs = (q - 1) * report.a[n - 1] + (q - 2) * (report.b[n - 1] + report.c[n - 1]);
        }
        if (direct[n] != from_parents[n] || direct[n] != from_children[n] || direct[n] != lhs || lhs != rhs) {
            audit.violations.push_back("generation " + std::to_string(n) + ": filial edges direct=" +
                                       std::to_string(direct[n]) + " parents=" + std::to_string(from_parents[n]) +
                                       " children=" + std::to_string(from_children[n]) +
                                       " types=" + std::to_string(lhs) + " recurrence=" + std::to_string(rhs));
        }
    }
    return audit;
}

void write_map_dump(std::ostream& os, const PlanarMap& map, const CensusReport& report) {
    os << "# tesscensus-map p=" << map.symbol().p_string() << " q=" << map.symbol().q()
       << " vertices=" << map.vertex_count() << " trusted_depth=" << report.trusted_depth << '\n';
    for (VertexId v = 0; v < static_cast<VertexId>(map.vertex_count()); ++v) {
        const auto vi = static_cast<std::size_t>(v);
        const char type = vi < report.types.size() ? static_cast<char>(report.types[vi]) : '-';
        os << v << ' ' << report.generation[vi] << ' ' << type << ' ' << (map.saturated(v) ? 1 : 0) << " :";
        for (VertexId w : map.neighbors(v)) os << ' ' << w;
        os << '\n';
    }
}

}  // namespace tesscensus
