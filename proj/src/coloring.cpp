#include "quandlekit/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace quandlekit {

namespace {

struct Relation {
    int a_in, a_over, a_out, sign;
};

std::vector<Relation> crossing_relations(const Diagram& d) {
    std::vector<Relation> rels;
    rels.reserve(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c)
        rels.push_back({d.arc_of_edge(d.under_in_edge(c)), d.arc_of_edge(d.over_in_edge(c)),
                        d.arc_of_edge(d.under_out_edge(c)), d.sign(c)});
    return rels;
}

int forward(const Rack& x, int a, int b, int sign) {
    return sign > 0 ? x.op(a, b) : x.inv_op(a, b);
}

int backward(const Rack& x, int z, int b, int sign) {
    return sign > 0 ? x.inv_op(z, b) : x.op(z, b);
}

// Fills forced arcs; false on a violated relation.
bool propagate(const Rack& x, const std::vector<Relation>& rels, std::vector<int>& col) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rels) {
            int a = col[r.a_in], b = col[r.a_over], z = col[r.a_out];
            if (a >= 0 && b >= 0) {
                int want = forward(x, a, b, r.sign);
                if (z < 0) {
                    col[r.a_out] = want;
                    changed = true;
                } else if (z != want) {
                    return false;
                }
            } else if (z >= 0 && b >= 0 && a < 0) {
                col[r.a_in] = backward(x, z, b, r.sign);
                changed = true;
            }
        }
    }
    return true;
}

template <class Emit>
void search(const Rack& x, const std::vector<Relation>& rels, const std::vector<int>& order,
            std::vector<int> col, Emit&& emit) {
    if (!propagate(x, rels, col)) return;
    int pick = -1;
    for (int a : order)
        if (col[a] < 0) {
            pick = a;
            break;
        }
    if (pick < 0) {
        emit(col);
        return;
    }
    for (int v = 0; v < x.size(); ++v) {
        std::vector<int> next = col;
        next[pick] = v;
        search(x, rels, order, std::move(next), emit);
    }
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return order;
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& d, const Rack& x,
                                          const std::vector<int>& order) {
    std::vector<Coloring> out;
    search(x, crossing_relations(d), order, std::vector<int>(d.arc_count(), -1),
           [&](const std::vector<int>& col) { out.push_back({col}); });
    std::sort(out.begin(), out.end(),
              [](const Coloring& a, const Coloring& b) { return a.arc_color < b.arc_color; });
    return out;
}

std::vector<Coloring> enumerate_colorings(const Diagram& d, const Rack& x) {
    return enumerate_colorings(d, x, identity_order(d.arc_count()));
}

long long count_colorings(const Diagram& d, const Rack& x) {
    long long count = 0;
    search(x, crossing_relations(d), identity_order(d.arc_count()),
           std::vector<int>(d.arc_count(), -1), [&](const std::vector<int>&) { ++count; });
    return count;
}

ShadowColoring extend_to_shadow(const Diagram& d, const Rack& x, const Coloring& c,
                                int base_color) {
    // Any region can be reached from any other through edge sides; the
    // diagram is connected, so propagation colors everything.
    struct Adjacency {
        int right, left, color;
    };
    std::vector<Adjacency> adj;
    for (int e = 1; e <= d.edge_count(); ++e)
        adj.push_back({d.right_region(e), d.left_region(e), c.arc_color[d.arc_of_edge(e)]});
    int first_loop_arc = d.arc_count() - d.free_loop_count();
    for (int k = 0; k < d.free_loop_count(); ++k)
        adj.push_back(
            {d.loop_outer_region(k), d.loop_inner_region(k), c.arc_color[first_loop_arc + k]});

    std::vector<int> reg(d.region_count(), -1);
    reg[d.infinity_region()] = base_color;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : adj) {
            if (reg[a.right] >= 0 && reg[a.left] < 0) {
                reg[a.left] = x.op(reg[a.right], a.color);
                changed = true;
            } else if (reg[a.left] >= 0 && reg[a.right] < 0) {
                reg[a.right] = x.inv_op(reg[a.left], a.color);
                changed = true;
            }
        }
    }
    for (const auto& a : adj)
        if (reg[a.right] < 0 || reg[a.left] < 0 || x.op(reg[a.right], a.color) != reg[a.left])
            throw std::logic_error("region propagation failed to close");
    return {c, reg};
}

std::vector<ShadowColoring> enumerate_shadow_colorings(const Diagram& d, const Rack& x) {
    std::vector<ShadowColoring> out;
    for (const Coloring& c : enumerate_colorings(d, x))
        for (int base = 0; base < x.size(); ++base) out.push_back(extend_to_shadow(d, x, c, base));
    return out;
}

long long count_shadow_colorings(const Diagram& d, const Rack& x) {
    return static_cast<long long>(enumerate_shadow_colorings(d, x).size());
}

std::vector<CycleTerm> fundamental_cycle(const Diagram& d, const ShadowColoring& sc) {
    std::vector<CycleTerm> out;
    out.reserve(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        int s = d.sign(c);
        int under_edge = s > 0 ? d.under_in_edge(c) : d.under_out_edge(c);
        out.push_back({s, sc.region_color[d.source_region(c)],
                       sc.coloring.arc_color[d.arc_of_edge(under_edge)],
                       sc.coloring.arc_color[d.arc_of_edge(d.over_in_edge(c))]});
    }
    return out;
}

std::vector<mpz_class> cycle_vector(const ChainComplex& cx, const std::vector<CycleTerm>& terms) {
    std::vector<mpz_class> v(cx.dim(3), 0);
    for (const auto& t : terms) {
        int i = cx.index_of(3, {t.r, t.x, t.y});
        if (i >= 0) v[i] += t.sign;
    }
    return v;
}

std::string coloring_to_json(const Coloring& c) {
    return nlohmann::json(c.arc_color).dump();
}

std::string shadow_to_json(const ShadowColoring& sc) {
    nlohmann::json j;
    j["arcs"] = sc.coloring.arc_color;
    j["regions"] = sc.region_color;
    return j.dump();
}

std::string cycle_to_json(const std::vector<CycleTerm>& terms) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& t : terms) j.push_back({t.sign, t.r, t.x, t.y});
    return j.dump();
}

}  // namespace quandlekit
