#pragma once
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quandlekit {

// Edge quadruple at a crossing, counterclockwise from the incoming under-edge:
// slot 0 = under-in, slot 2 = under-out, slots 1/3 carry the over-strand.
struct Crossing {
    std::array<int, 4> e;
};

struct PdParseError : std::runtime_error {
    size_t position;
    PdParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Oriented link diagram with derived arcs, faces, signs and components.
// Regions are (edge, side) cycles, side 0 = right of the edge, 1 = left.
// Immutable; rewrites return new diagrams renumbered canonically.
class Diagram {
public:
    static Diagram parse(const std::string& text);
    static Diagram from_quads(std::vector<Crossing> quads, int free_loops);  // renumbers

    std::string to_pd_text() const;
    std::string to_json() const;

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int free_loop_count() const { return free_loops_; }
    int component_count() const { return components_; }
    int arc_count() const { return edge_arc_count_ + free_loops_; }
    int region_count() const { return static_cast<int>(regions_.size()); }
    int infinity_region() const { return infinity_; }
    int writhe() const;

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int sign(int c) const { return signs_[c]; }
    int arc_of_edge(int e) const { return arc_of_[e]; }
    int under_in_edge(int c) const { return crossings_[c].e[0]; }
    int under_out_edge(int c) const { return crossings_[c].e[2]; }
    int over_in_edge(int c) const { return signs_[c] > 0 ? crossings_[c].e[3] : crossings_[c].e[1]; }
    int over_out_edge(int c) const { return signs_[c] > 0 ? crossings_[c].e[1] : crossings_[c].e[3]; }

    const std::vector<std::vector<std::pair<int, int>>>& regions() const { return regions_; }
    int right_region(int e) const { return right_region_[e]; }
    int left_region(int e) const { return left_region_[e]; }
    // Local sector to the right of both strands; its color labels crossing
    // contributions of chains and state sums.
    int source_region(int c) const;
    // Free loops bound an inner region; the k-th loop is arc edge_arc_count+k.
    int loop_outer_region(int k) const { return loop_regions_[k].first; }
    int loop_inner_region(int k) const { return loop_regions_[k].second; }

    Diagram with_infinity(int region) const;

    Diagram r1_insert(int arc, int chirality) const;
    Diagram r2_insert(int arc_over, int arc_under) const;
    static Diagram connected_sum(const Diagram& d1, const Diagram& d2, int arc1, int arc2);

    // Lowest edge id on the arc that borders the given region, or -1.
    int arc_edge_on_region(int arc, int region) const;

private:
    Diagram() = default;
    void derive();  // orientation, arcs, faces, signs, components; throws on bad input

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;

    std::vector<std::pair<int, int>> head_, tail_;        // per edge, (crossing, slot)
    std::vector<int> signs_;
    std::vector<int> arc_of_;                             // per edge (1-based), arc id
    int edge_arc_count_ = 0;
    int components_ = 0;
    std::vector<std::vector<std::pair<int, int>>> regions_;
    std::vector<int> right_region_, left_region_;         // per edge
    std::vector<std::pair<int, int>> loop_regions_;       // per free loop (outer, inner)
    std::vector<std::vector<int>> face_at_;               // [crossing][slot] -> region
    int infinity_ = 0;
};

}  // namespace quandlekit
