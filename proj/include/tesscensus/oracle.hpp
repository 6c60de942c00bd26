#ifndef TESSCENSUS_ORACLE_HPP
#define TESSCENSUS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tesscensus/errors.hpp"
#include "tesscensus/planar_map.hpp"

namespace tesscensus {

inline constexpr std::size_t kDefaultVertexBudget = 200000;

/// Which unsaturated boundary vertex the builder completes next.
enum class BuildOrder {
    /// Nearest to the origin first; reaches a given saturated depth with the fewest vertices.
    Generation,
    /// Oldest vertex first, sweeping the boundary ring by ring.
    Sweep,
};

/**
 * Grows a disk of {p,q} around the origin by layered face completion until
 * every vertex within min_saturated_depth of the origin is saturated.
 *
 * Construction uses only the local rules (q faces per vertex, p vertices per
 * face) and merges vertices by boundary adjacency, never by coordinates.
 * With fill_budget the disk keeps growing until the vertex budget is spent.
 *
 * Throws BadSymbol for p = inf or inadmissible symbols, and BudgetExceeded
 * when the budget runs out first.
 */
PlanarMap build_map(const Schlafli& s, int min_saturated_depth,
                    std::size_t vertex_budget = kDefaultVertexBudget, bool fill_budget = false,
                    BuildOrder order = BuildOrder::Generation);

/// The q-regular tree with generations 0..depth saturated.
PlanarMap build_tree(int q, int depth);

enum class VertexType : char { Origin = 'O', A = 'A', B = 'B', C = 'C', Unclassified = '-' };

struct CensusReport {
    Schlafli symbol;
    /// Largest n such that every vertex at distance <= n is saturated (>= 0).
    int trusted_depth = 0;
    /// v(0..trusted_depth).
    std::vector<std::int64_t> v{};
    /// Per-generation type counts, filled by classify; same length as v.
    std::vector<std::int64_t> a{}, b{}, c{};
    bool classified = false;
    /// BFS distance per vertex; -1 if unreachable.
    std::vector<int> generation{};
    /// Per-vertex type after classify.
    std::vector<VertexType> types{};
};

/// Neighbor counts of one vertex relative to its generation.
struct VertexProfile {
    int parents = 0;
    int children = 0;
    int fraternal = 0;   // same generation, sharing a parent
    int consortial = 0;  // same generation, no shared parent

    friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

std::string to_string(const VertexProfile& profile);

/// A saturated vertex whose profile fits none of the vertex types.
class StructureViolation : public Error {
public:
    StructureViolation(VertexId vertex, int generation, VertexProfile profile);
    const char* kind() const noexcept override { return "StructureViolation"; }
    VertexId vertex() const noexcept { return vertex_; }
    int generation() const noexcept { return generation_; }
    const VertexProfile& profile() const noexcept { return profile_; }

private:
    VertexId vertex_;
    int generation_;
    VertexProfile profile_;
};

CensusReport bfs_census(const PlanarMap& map);

VertexProfile vertex_profile(const PlanarMap& map, const CensusReport& report, VertexId v);

/// Fills a, b, c and types. Throws StructureViolation on an unclassifiable vertex.
CensusReport classify(const PlanarMap& map, CensusReport report);

struct AuditReport {
    std::size_t items_checked = 0;
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/**
 * Earliest/latest audit over closed faces inside the trusted region: every
 * face has exactly one distance-minimal vertex or edge (and likewise for the
 * maximum), and every type-B vertex is the latest vertex of exactly one face
 * whose earliest element sits where the face degree predicts.
 */
AuditReport audit_faces(const PlanarMap& map, const CensusReport& report);

/// Counts the filial edges between generations n-1 and n three ways: directly,
/// from the parents of generation n, and from the type counts of generation n-1.
AuditReport audit_filial_edges(const PlanarMap& map, const CensusReport& report);

/**
 * Line-oriented adjacency dump:
 *   # tesscensus-map p=<p> q=<q> vertices=<n> trusted_depth=<d>
 *   <id> <generation> <type> <saturated 0|1> : <neighbors in rotation order>
 */
void write_map_dump(std::ostream& os, const PlanarMap& map, const CensusReport& report);

}  // namespace tesscensus

#endif  // TESSCENSUS_ORACLE_HPP
