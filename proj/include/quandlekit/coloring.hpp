#pragma once
#include <string>
#include <vector>

#include "quandlekit/chain.hpp"
#include "quandlekit/diagram.hpp"
#include "quandlekit/rack.hpp"

namespace quandlekit {

// Arc labeling: at a positive crossing the outgoing under color is
// (incoming under) * (over); negative crossings invert the action.
struct Coloring {
    std::vector<int> arc_color;  // indexed by arc id
    bool operator==(const Coloring&) const = default;
};

// Region labels on top of a coloring.  Crossing an arc of color a from its
// right side to its left sends a region label r to r*a.
struct ShadowColoring {
    Coloring coloring;
    std::vector<int> region_color;  // indexed by region id
    bool operator==(const ShadowColoring&) const = default;
};

// Complete list, sorted lexicographically by arc colors; the result set does
// not depend on `order` (the branching sequence over arcs), which exists for
// order-invariance tests.
std::vector<Coloring> enumerate_colorings(const Diagram& d, const Rack& x);
std::vector<Coloring> enumerate_colorings(const Diagram& d, const Rack& x,
                                          const std::vector<int>& order);
long long count_colorings(const Diagram& d, const Rack& x);

// Propagates base_color from the infinity region across the arcs; every
// adjacency is re-checked afterwards, failure is an internal error.
ShadowColoring extend_to_shadow(const Diagram& d, const Rack& x, const Coloring& c,
                                int base_color);

// All colorings x all base colors, coloring-major order.
std::vector<ShadowColoring> enumerate_shadow_colorings(const Diagram& d, const Rack& x);
long long count_shadow_colorings(const Diagram& d, const Rack& x);

// One signed triple (r, x, y) per crossing: r the source-region label, x the
// under color on the source-region side, y the over color.
struct CycleTerm {
    int sign;
    int r, x, y;
    bool operator==(const CycleTerm&) const = default;
};

std::vector<CycleTerm> fundamental_cycle(const Diagram& d, const ShadowColoring& sc);

// Image of the terms in the degree-3 chain group of cx; tuples outside the
// basis (degenerate ones, for a quotient complex) contribute nothing.
std::vector<mpz_class> cycle_vector(const ChainComplex& cx, const std::vector<CycleTerm>& terms);

std::string coloring_to_json(const Coloring& c);
std::string shadow_to_json(const ShadowColoring& sc);
std::string cycle_to_json(const std::vector<CycleTerm>& terms);

}  // namespace quandlekit
