#include "quandlekit/spaces.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace quandlekit {

namespace {

std::vector<std::vector<int>> tuples(int n, int len) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<std::vector<int>> next;
        next.reserve(out.size() * n);
        for (const auto& t : out)
            for (int v = 0; v < n; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

PreCubicSet build_cells(const Rack& x, int shift, int max_degree, int cap) {
    if (max_degree < 0 || max_degree > cap) throw std::invalid_argument("degree out of range");
    PreCubicSet s{x, shift, max_degree, {}};
    for (int d = 0; d <= max_degree; ++d) s.cells.push_back(tuples(x.size(), d + shift));
    if (!s.relations_hold()) throw std::logic_error("pre-cubic face relations violated");
    return s;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<int> PreCubicSet::face(int degree, int i, int eps,
                                   const std::vector<int>& label) const {
    if (degree < 1 || degree > max_degree || i < 1 || i > degree)
        throw std::invalid_argument("face index out of range");
    int drop = i + shift - 1;  // 0-based position acted with and removed
    std::vector<int> out;
    out.reserve(label.size() - 1);
    for (int k = 0; k < static_cast<int>(label.size()); ++k) {
        if (k == drop) continue;
        int v = label[k];
        if (eps == 1 && k < drop) v = carrier.op(v, label[drop]);
        out.push_back(v);
    }
    return out;
}

bool PreCubicSet::relations_hold() const {
    for (int d = 2; d <= max_degree; ++d)
        for (const auto& t : cells[d])
            for (int i = 1; i < d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    for (int e = 0; e < 2; ++e)
                        for (int f = 0; f < 2; ++f)
                            if (face(d - 1, i, e, face(d, j, f, t)) !=
                                face(d - 1, j - 1, f, face(d, i, e, t)))
                                return false;
    return true;
}

PreCubicSet build_rack_space_cells(const Rack& x, int max_degree) {
    return build_cells(x, 0, max_degree, 4);
}

PreCubicSet build_extended_rack_space_cells(const Rack& x, int max_degree) {
    return build_cells(x, 1, max_degree, 3);
}

IntMat cellular_boundary_matrix(const PreCubicSet& s, int degree) {
    if (degree < 1 || degree > s.max_degree) throw std::invalid_argument("degree out of range");
    std::map<std::vector<int>, int> row;
    for (int i = 0; i < static_cast<int>(s.cells[degree - 1].size()); ++i)
        row[s.cells[degree - 1][i]] = i;
    IntMat m(static_cast<int>(s.cells[degree - 1].size()),
             static_cast<int>(s.cells[degree].size()));
    for (int j = 0; j < static_cast<int>(s.cells[degree].size()); ++j) {
        const auto& t = s.cells[degree][j];
        for (int i = 1; i <= degree; ++i) {
            int sign = (i % 2 == 0) ? 1 : -1;
            m.at(row.at(s.face(degree, i, 0, t)), j) += sign;
            m.at(row.at(s.face(degree, i, 1, t)), j) -= sign;
        }
    }
    return m;
}

LabeledGraph rack_graph(const Rack& x) {
    LabeledGraph g{x.size(), {}, false};
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b) g.edges.push_back({a, x.op(a, b), a, b});
    return g;
}

LabeledGraph quandle_graph(const Rack& x) {
    LabeledGraph g{x.size(), {}, true};
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b)
            if (a != b) g.edges.push_back({a, x.op(a, b), a, b});
    return g;
}

int component_count(const LabeledGraph& g) {
    Dsu dsu(g.vertex_count);
    for (const auto& e : g.edges) dsu.join(e.from, e.to);
    int count = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (dsu.find(v) == v) ++count;
    return count;
}

bool weak_equals_strong(const LabeledGraph& g) {
    int n = g.vertex_count;
    std::vector<std::vector<int>> fwd(n), rev(n);
    for (const auto& e : g.edges) {
        fwd[e.from].push_back(e.to);
        rev[e.to].push_back(e.from);
    }
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    // iterative postorder, then reverse sweep over the transpose
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < fwd[v].size()) {
                int w = fwd[v][next++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    int strong = 0;
    std::fill(seen.begin(), seen.end(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (seen[*it]) continue;
        ++strong;
        std::vector<int> stack{*it};
        seen[*it] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : rev[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return strong == component_count(g);
}

std::string dot_export(const LabeledGraph& g) {
    std::string out = "digraph G {\n";
    for (int v = 0; v < g.vertex_count; ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& e : g.edges)
        out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + " [label=\"(" +
               std::to_string(e.a) + "," + std::to_string(e.b) + ")\"];\n";
    out += "}\n";
    return out;
}

CellCensus extended_quandle_census(const Rack& x) {
    if (!x.quandle()) throw std::invalid_argument("census requires a quandle");
    int n = x.size();
    CellCensus c;
    c.original = {n, static_cast<long long>(n) * n, static_cast<long long>(n) * n * n,
                  static_cast<long long>(n) * n * n * n};
    for (int a = 0; a < n; ++a) c.capping_labels.push_back({a, a});
    c.capping = n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                if (a == b || b == d) c.cone_labels.push_back({a, b, d});
    c.cone = static_cast<long long>(c.cone_labels.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b)
                c.attachments.push_back(
                    {{a, a, b}, {a, a}, {x.op(a, b), x.op(a, b)}});
    return c;
}

CellCensus action_quandle_census(const Rack& x) {
    if (!x.quandle()) throw std::invalid_argument("census requires a quandle");
    int n = x.size();
    CellCensus c;
    c.action_variant = true;
    c.original = {n, static_cast<long long>(n) * n, static_cast<long long>(n) * n * n,
                  static_cast<long long>(n) * n * n * n};
    // only the tuple part after the action coordinate can degenerate
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c.cone_labels.push_back({a, b, b});
    c.cone = static_cast<long long>(c.cone_labels.size());
    return c;
}

std::string census_to_json(const CellCensus& c) {
    nlohmann::json j;
    for (int d = 0; d < 4; ++d) {
        nlohmann::json entry;
        entry["original"] = c.original[d];
        entry["capping"] = d == 2 ? c.capping : 0;
        entry["cone"] = d == 3 ? c.cone : 0;
        j[std::to_string(d)] = entry;
    }
    return j.dump();
}

SpaceKind space_from_string(const std::string& s) {
    if (s == "rack") return SpaceKind::Rack;
    if (s == "extended_rack") return SpaceKind::ExtendedRack;
    if (s == "extended_quandle") return SpaceKind::ExtendedQuandle;
    throw std::invalid_argument("unknown space kind: " + s);
}

HomologyGroup space_homology(const Rack& x, SpaceKind kind, int i, int coefficients_mod,
                             int bound) {
    switch (kind) {
        case SpaceKind::Rack:
            return homology(x, Theory::R, i, coefficients_mod, bound);
        case SpaceKind::ExtendedRack:
            return homology(x, Theory::R, i + 1, coefficients_mod, bound);
        default:
            return homology(x, Theory::Q, i + 1, coefficients_mod, bound);
    }
}

}  // namespace quandlekit
