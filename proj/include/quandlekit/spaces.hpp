#pragma once
#include <array>
#include <string>
#include <vector>

#include "quandlekit/chain.hpp"
#include "quandlekit/rack.hpp"
#include "quandlekit/smith.hpp"

namespace quandlekit {

// Cube-cell data for the classifying spaces: labels per degree plus the two
// face maps per direction.  Relations d_i^e d_j^f = d_{j-1}^f d_i^e (i < j,
// apply the right map first) are checked exhaustively at build time.
struct PreCubicSet {
    Rack carrier;
    int shift = 0;  // label length minus degree: 0 plain, 1 extended
    int max_degree = 0;
    std::vector<std::vector<std::vector<int>>> cells;  // [degree][index] = label

    // 1 <= i <= degree; eps 0 drops coordinate i+shift, eps 1 also acts with
    // it on the earlier coordinates.
    std::vector<int> face(int degree, int i, int eps, const std::vector<int>& label) const;
    bool relations_hold() const;
};

PreCubicSet build_rack_space_cells(const Rack& x, int max_degree);           // degree <= 4
PreCubicSet build_extended_rack_space_cells(const Rack& x, int max_degree);  // degree <= 3

// Signed face sum Sum_i (-1)^i (d_i^0 - d_i^1) from degree to degree-1.
// For the plain set this is exactly the free rack boundary; the extended set
// gives the degree-(n+1) boundary negated.
IntMat cellular_boundary_matrix(const PreCubicSet& s, int degree);

// 1-skeleton of the extended space: edge (a,b) runs a -> a*b.
struct LabeledGraph {
    int vertex_count = 0;
    struct Edge {
        int from, to, a, b;
        bool operator==(const Edge&) const = default;
    };
    std::vector<Edge> edges;  // sorted by label (a,b)
    bool loops_deleted = false;
};

LabeledGraph rack_graph(const Rack& x);
LabeledGraph quandle_graph(const Rack& x);  // drops the (a,a)-labeled loops

int component_count(const LabeledGraph& g);  // weakly connected
// Every edge is undone by acting with the inverse datum, so weak and strong
// components coincide; checked, not assumed.
bool weak_equals_strong(const LabeledGraph& g);

std::string dot_export(const LabeledGraph& g);

// Cell inventory of the extended space after attaching disks along the
// degenerate squares and cones over the degenerate cubes.
struct CellCensus {
    bool action_variant = false;
    std::array<long long, 4> original{};  // dimensions 0..3: |X|^(d+1)
    long long capping = 0;                // dimension-2 disks D_(a,a)
    long long cone = 0;                   // dimension-3 cells over degenerate triples
    std::vector<std::array<int, 2>> capping_labels;
    std::vector<std::array<int, 3>> cone_labels;
    // Cylinder-side data for the (a,a,b) cones, a != b: the square plus the
    // two disks its cone is glued along.
    struct Attaching {
        std::array<int, 3> square;
        std::array<int, 2> lower_disk;  // (a,a)
        std::array<int, 2> upper_disk;  // (a*b,a*b)
        bool operator==(const Attaching&) const = default;
    };
    std::vector<Attaching> attachments;
};

CellCensus extended_quandle_census(const Rack& x);  // rejects non-quandles
// Variant where only the rack-tuple part counts as degenerate: no capping
// disks, cones only over (a,b,b).
CellCensus action_quandle_census(const Rack& x);

std::string census_to_json(const CellCensus& c);

enum class SpaceKind { Rack, ExtendedRack, ExtendedQuandle };
SpaceKind space_from_string(const std::string& s);

// Homology of the realization in space degree i, via the chain complexes:
// the plain space matches rack homology degree i, the extended spaces match
// rack/quandle homology degree i+1.
HomologyGroup space_homology(const Rack& x, SpaceKind kind, int i, int coefficients_mod = 0,
                             int bound = -1);

}  // namespace quandlekit
