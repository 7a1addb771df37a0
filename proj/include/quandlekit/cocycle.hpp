#pragma once
#include <map>
#include <string>
#include <vector>

#include "quandlekit/chain.hpp"
#include "quandlekit/coloring.hpp"
#include "quandlekit/diagram.hpp"
#include "quandlekit/rack.hpp"

namespace quandlekit {

// Z_m valued function on tuples of fixed length; absent tuples map to 0.
// Search results live on the non-degenerate basis, so they vanish on
// degenerate tuples; hand-built functions need not.
struct Cocycle {
    int degree = 2;  // 2 or 3
    int mod = 2;
    std::map<std::vector<int>, int> entries;  // nonzero values in [1, mod)

    int eval(const std::vector<int>& t) const;
    bool operator==(const Cocycle&) const = default;
};

Cocycle zero_cocycle(int degree, int mod);
Cocycle add(const Cocycle& a, const Cocycle& b);  // pointwise, same degree and mod

// theta(r,x,y) = phi(x,y) for every r in the carrier.
Cocycle pullback_to_shadow(const Cocycle& phi, int carrier_size);

// Exact check of the cocycle condition on the quotient complex: the values,
// read as a cochain on the non-degenerate basis, pair to zero with every
// boundary of the next degree.
bool is_cocycle(const Rack& x, const Cocycle& c, int bound = -1);

// Spanning set of the mod-m quandle cocycles in the given degree, each
// flagged when it is a coboundary.
struct FoundCocycles {
    std::vector<Cocycle> basis;
    std::vector<bool> coboundary;
};
FoundCocycles find_cocycles(const Rack& x, int degree, int mod, int bound = -1);

// Multiset of Z_m weights, one per (shadow) coloring.
struct StateSumResult {
    int mod = 0;
    std::map<int, long long> multiplicity;  // weight in [0, mod) -> count
    bool operator==(const StateSumResult&) const = default;
    long long total() const;
};

// Weight of one coloring: over the crossings, sign times phi at (under color
// on the source side, over color).
StateSumResult statesum_2cocycle(const Diagram& d, const Rack& x, const Cocycle& phi);
// Weight of one shadow coloring: sign times theta at the crossing triple.
StateSumResult shadow_statesum_3cocycle(const Diagram& d, const Rack& x, const Cocycle& theta);

// Group-ring operations on weight multisets.
StateSumResult convolve(const StateSumResult& a, const StateSumResult& b);
StateSumResult scale(const StateSumResult& a, long long factor);

// Composite-image checks for splicing two knots at their outer arcs: counts,
// shadow counts, and per-cocycle state-sums.  Hypotheses (connected faithful
// carrier, single-component diagrams) are refused by name, not assumed.
struct ConnectedSumReport {
    bool applicable = false;
    std::string refusal;
    long long col1 = 0, col2 = 0, col_sum = 0;
    long long scol1 = 0, scol2 = 0, scol_sum = 0;
    bool counts_ok = false;
    bool shadow_counts_ok = false;
    std::vector<bool> statesum_ok;  // one per supplied cocycle
    bool passed() const;
};

ConnectedSumReport verify_connected_sum(const Rack& x, const Diagram& d1, const Diagram& d2,
                                        const std::vector<Cocycle>& test_cocycles = {});

std::string cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const std::string& text);
Cocycle load_cocycle_file(const std::string& path);

std::string statesum_to_json(const StateSumResult& r);  // sorted [weight, count] pairs

}  // namespace quandlekit
