#include "quandlekit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace quandlekit {

namespace {

size_t skip_ws(const std::string& s, size_t p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    return p;
}

int parse_int(const std::string& s, size_t& p) {
    p = skip_ws(s, p);
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw PdParseError("expected an integer", start);
    return std::stoi(s.substr(start, p - start));
}

void expect(const std::string& s, size_t& p, char c) {
    p = skip_ws(s, p);
    if (p >= s.size() || s[p] != c)
        throw PdParseError(std::string("expected '") + c + "'", p);
    ++p;
}

std::vector<Crossing> parse_pd_body(const std::string& text, int& free_loops) {
    std::vector<Crossing> quads;
    free_loops = 0;
    size_t p = skip_ws(text, 0);
    if (text.compare(p, 3, "PD[") == 0) {
        p += 3;
        p = skip_ws(text, p);
        if (p < text.size() && text[p] == ']') {
            ++p;
            p = skip_ws(text, p);
            if (p != text.size()) throw PdParseError("trailing input after PD[]", p);
            free_loops = 1;  // the 0-crossing unknot
            return quads;
        }
        while (true) {
            p = skip_ws(text, p);
            if (text.compare(p, 1, "X") != 0) throw PdParseError("expected 'X['", p);
            ++p;
            expect(text, p, '[');
            Crossing c{};
            for (int i = 0; i < 4; ++i) {
                if (i) expect(text, p, ',');
                c.e[i] = parse_int(text, p);
            }
            expect(text, p, ']');
            quads.push_back(c);
            p = skip_ws(text, p);
            if (p < text.size() && text[p] == ',') {
                ++p;
                continue;
            }
            expect(text, p, ']');
            break;
        }
        p = skip_ws(text, p);
        if (p != text.size()) throw PdParseError("trailing input after PD[...]", p);
        return quads;
    }
    // line-based form: four integers per line
    std::stringstream ls(text);
    std::string line;
    while (std::getline(ls, line)) {
        std::stringstream fields(line);
        std::vector<int> vals;
        int v;
        while (fields >> v) vals.push_back(v);
        if (vals.empty()) continue;
        if (vals.size() != 4) throw PdParseError("line needs exactly 4 edge ids", 0);
        quads.push_back(Crossing{{vals[0], vals[1], vals[2], vals[3]}});
    }
    if (quads.empty()) throw PdParseError("no crossings found", 0);
    return quads;
}

}  // namespace

Diagram Diagram::parse(const std::string& text) {
    Diagram d;
    d.crossings_ = parse_pd_body(text, d.free_loops_);
    d.derive();
    return d;
}

void Diagram::derive() {
    const int nc = static_cast<int>(crossings_.size());
    const int ne = 2 * nc;
    if (nc == 0 && free_loops_ == 0) throw PdParseError("empty diagram", 0);

    // occurrence check: ids 1..2n, each exactly twice
    std::vector<std::vector<std::pair<int, int>>> occ(ne + 1);
    for (int c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s) {
            int e = crossings_[c].e[s];
            if (e < 1 || e > ne)
                throw PdParseError("edge id " + std::to_string(e) +
                                       " outside 1.." + std::to_string(ne),
                                   0);
            occ[e].push_back({c, s});
        }
    for (int e = 1; e <= ne; ++e)
        if (occ[e].size() != 2)
            throw PdParseError("edge " + std::to_string(e) + " occurs " +
                                   std::to_string(occ[e].size()) + " times, expected 2",
                               0);

    // orientation: role of each occurrence, head = strand enters the crossing
    std::vector<std::array<int, 4>> role(nc, {0, 0, 0, 0});  // 0 unknown, 1 head, 2 tail
    auto flip = [](int r) { return r == 1 ? 2 : 1; };
    for (int c = 0; c < nc; ++c) {
        role[c][0] = 1;
        role[c][2] = 2;
    }
    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int e = 1; e <= ne; ++e) {
                auto [c1, s1] = occ[e][0];
                auto [c2, s2] = occ[e][1];
                int &r1 = role[c1][s1], &r2 = role[c2][s2];
                if (r1 && !r2) r2 = flip(r1), changed = true;
                else if (r2 && !r1) r1 = flip(r2), changed = true;
                else if (r1 && r2 && r1 == r2)
                    throw PdParseError("inconsistent orientation at edge " + std::to_string(e), 0);
            }
            for (int c = 0; c < nc; ++c) {
                int &r1 = role[c][1], &r3 = role[c][3];
                if (r1 && !r3) r3 = flip(r1), changed = true;
                else if (r3 && !r1) r1 = flip(r3), changed = true;
                else if (r1 && r3 && r1 == r3)
                    throw PdParseError("inconsistent over-strand orientation at crossing " +
                                           std::to_string(c),
                                       0);
            }
        }
    };
    propagate();
    // components running entirely over stay undetermined; orient the lowest
    // unresolved edge head-first so numbering order decides
    for (int e = 1; e <= ne; ++e) {
        auto [c1, s1] = occ[e][0];
        if (role[c1][s1]) continue;
        role[c1][s1] = 1;
        propagate();
    }

    head_.assign(ne + 1, {-1, -1});
    tail_.assign(ne + 1, {-1, -1});
    for (int e = 1; e <= ne; ++e)
        for (auto [c, s] : occ[e])
            (role[c][s] == 1 ? head_ : tail_)[e] = {c, s};

    // signs: positive when the over-strand enters at slot 3
    signs_.assign(nc, 0);
    for (int c = 0; c < nc; ++c) signs_[c] = role[c][3] == 1 ? 1 : -1;

    // arcs: edges joined where the strand passes over (slots 1 and 3)
    std::vector<int> parent(ne + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int c = 0; c < nc; ++c) parent[find(crossings_[c].e[1])] = find(crossings_[c].e[3]);
    arc_of_.assign(ne + 1, -1);
    int next_arc = 0;
    // deterministic arc ids: order classes by their minimal edge
    std::map<int, int> min_edge;
    for (int e = 1; e <= ne; ++e) {
        int r = find(e);
        if (!min_edge.count(r)) min_edge[r] = e;
    }
    std::vector<std::pair<int, int>> order;  // (min edge, root)
    for (auto [r, m] : min_edge) order.push_back({m, r});
    std::sort(order.begin(), order.end());
    std::map<int, int> id_of_root;
    for (auto [m, r] : order) id_of_root[r] = next_arc++;
    for (int e = 1; e <= ne; ++e) arc_of_[e] = id_of_root[find(e)];
    edge_arc_count_ = next_arc;

    // components: strand continuation joins 0-2 and 1-3
    std::vector<int> cparent(ne + 1);
    std::iota(cparent.begin(), cparent.end(), 0);
    auto cfind = [&](int a) {
        while (cparent[a] != a) a = cparent[a] = cparent[cparent[a]];
        return a;
    };
    for (int c = 0; c < nc; ++c) {
        cparent[cfind(crossings_[c].e[0])] = cfind(crossings_[c].e[2]);
        cparent[cfind(crossings_[c].e[1])] = cfind(crossings_[c].e[3]);
    }
    std::vector<bool> seen(ne + 1, false);
    components_ = free_loops_;
    for (int e = 1; e <= ne; ++e)
        if (!seen[cfind(e)]) {
            seen[cfind(e)] = true;
            ++components_;
        }

    // faces: orbits of (c,s) -> rotate(other occurrence of edge at (c,s))
    face_at_.assign(nc, std::vector<int>(4, -1));
    std::vector<std::vector<std::pair<int, int>>> raw_faces;
    for (int c0 = 0; c0 < nc; ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (face_at_[c0][s0] >= 0) continue;
            int id = static_cast<int>(raw_faces.size());
            std::vector<std::pair<int, int>> cyc;
            int c = c0, s = s0;
            while (face_at_[c][s] < 0) {
                face_at_[c][s] = id;
                cyc.push_back({c, s});
                int e = crossings_[c].e[s];
                auto other = occ[e][0] == std::make_pair(c, s) ? occ[e][1] : occ[e][0];
                c = other.first;
                s = (other.second + 1) % 4;
            }
            if (std::make_pair(c, s) != std::make_pair(c0, s0))
                throw PdParseError("face tracing did not close", 0);
            raw_faces.push_back(std::move(cyc));
        }
    if (nc > 0) {
        int euler = nc - ne + static_cast<int>(raw_faces.size());
        if (euler != 2)
            throw PdParseError("not a planar connected diagram: V-E+F = " +
                                   std::to_string(euler),
                               0);
        if (free_loops_ > 0)
            throw PdParseError("free loops beside crossings are unsupported", 0);
    }

    // regions as (edge, side) cycles; side is right(0) when the occurrence at
    // that step is the edge's tail
    std::vector<std::vector<std::pair<int, int>>> sided(raw_faces.size());
    for (size_t f = 0; f < raw_faces.size(); ++f)
        for (auto [c, s] : raw_faces[f]) {
            int e = crossings_[c].e[s];
            int side = role[c][s] == 2 ? 0 : 1;
            sided[f].push_back({e, side});
        }
    // deterministic numbering: sort by least (edge, side); rotate cycles
    std::vector<int> face_order(raw_faces.size());
    std::iota(face_order.begin(), face_order.end(), 0);
    auto face_key = [&](int f) {
        auto mn = sided[f][0];
        size_t at = 0;
        for (size_t i = 1; i < sided[f].size(); ++i)
            if (sided[f][i] < mn) mn = sided[f][i], at = i;
        return std::make_tuple(mn.first, mn.second, at);
    };
    std::sort(face_order.begin(), face_order.end(), [&](int a, int b) {
        auto ka = face_key(a), kb = face_key(b);
        if (std::get<0>(ka) != std::get<0>(kb)) return std::get<0>(ka) < std::get<0>(kb);
        return std::get<1>(ka) < std::get<1>(kb);
    });
    std::vector<int> new_id(raw_faces.size());
    regions_.clear();
    for (size_t i = 0; i < face_order.size(); ++i) {
        int f = face_order[i];
        new_id[f] = static_cast<int>(i);
        auto key = face_key(f);
        std::vector<std::pair<int, int>> rot;
        size_t start = std::get<2>(key);
        for (size_t k = 0; k < sided[f].size(); ++k)
            rot.push_back(sided[f][(start + k) % sided[f].size()]);
        regions_.push_back(std::move(rot));
    }
    for (int c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s) face_at_[c][s] = new_id[face_at_[c][s]];

    right_region_.assign(ne + 1, -1);
    left_region_.assign(ne + 1, -1);
    for (int e = 1; e <= ne; ++e) {
        auto [tc, ts] = tail_[e];
        auto [hc, hs] = head_[e];
        right_region_[e] = face_at_[tc][ts];
        left_region_[e] = face_at_[hc][hs];
    }

    loop_regions_.clear();
    if (nc == 0) {
        // lone unknotted circle: outer region 0, inner region 1
        regions_ = {{}, {}};
        loop_regions_.push_back({0, 1});
        infinity_ = 0;
        components_ = free_loops_;
    } else {
        infinity_ = right_region_[ne];
    }
}

int Diagram::writhe() const {
    int w = 0;
    for (int s : signs_) w += s;
    return w;
}

int Diagram::source_region(int c) const {
    return signs_[c] > 0 ? face_at_[c][1] : face_at_[c][2];
}

Diagram Diagram::with_infinity(int region) const {
    if (region < 0 || region >= region_count())
        throw std::invalid_argument("region index out of range");
    Diagram d = *this;
    d.infinity_ = region;
    return d;
}

int Diagram::arc_edge_on_region(int arc, int region) const {
    for (const auto& [e, side] : regions_[region])
        if (arc_of_[e] == arc) return e;
    return -1;
}

std::string Diagram::to_pd_text() const {
    std::string out = "PD[";
    for (size_t i = 0; i < crossings_.size(); ++i) {
        if (i) out += ",";
        out += "X[" + std::to_string(crossings_[i].e[0]) + "," +
               std::to_string(crossings_[i].e[1]) + "," + std::to_string(crossings_[i].e[2]) +
               "," + std::to_string(crossings_[i].e[3]) + "]";
    }
    out += "]";
    return out;
}

std::string Diagram::to_json() const {
    nlohmann::json j;
    j["pd"] = to_pd_text();
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : crossings_) j["crossings"].push_back(c.e);
    j["signs"] = signs_;
    j["components"] = components_;
    j["free_loops"] = free_loops_;
    auto arcs = nlohmann::json::array();
    for (int a = 0; a < arc_count(); ++a) {
        auto edges = nlohmann::json::array();
        for (int e = 1; e <= edge_count(); ++e)
            if (arc_of_[e] == a) edges.push_back(e);
        arcs.push_back(edges);
    }
    j["arcs"] = arcs;
    auto regions = nlohmann::json::array();
    for (const auto& face : regions_) {
        auto f = nlohmann::json::array();
        for (auto [e, side] : face) f.push_back({e, side});
        regions.push_back(f);
    }
    j["regions"] = regions;
    j["infinity_region"] = infinity_;
    return j.dump();
}

namespace {

// Rebuild with edges renumbered 1..2n walking each strand from its lowest
// edge, components ordered by lowest edge; crossings sorted by under-in id.
std::vector<Crossing> renumber(const std::vector<Crossing>& quads) {
    const int nc = static_cast<int>(quads.size());
    const int ne = 2 * nc;
    if (nc == 0) return quads;
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s) occ[quads[c].e[s]].push_back({c, s});

    std::map<int, int> role;  // occurrence key c*4+s -> 1 head / 2 tail
    auto key = [](int c, int s) { return c * 4 + s; };
    auto flip = [](int r) { return r == 1 ? 2 : 1; };
    for (int c = 0; c < nc; ++c) {
        role[key(c, 0)] = 1;
        role[key(c, 2)] = 2;
    }
    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [e, os] : occ) {
                int k1 = key(os[0].first, os[0].second), k2 = key(os[1].first, os[1].second);
                bool h1 = role.count(k1), h2 = role.count(k2);
                if (h1 && !h2) role[k2] = flip(role[k1]), changed = true;
                else if (h2 && !h1) role[k1] = flip(role[k2]), changed = true;
            }
            for (int c = 0; c < nc; ++c) {
                int k1 = key(c, 1), k3 = key(c, 3);
                bool h1 = role.count(k1), h3 = role.count(k3);
                if (h1 && !h3) role[k3] = flip(role[k1]), changed = true;
                else if (h3 && !h1) role[k1] = flip(role[k3]), changed = true;
            }
        }
    };
    propagate();
    for (auto& [e, os] : occ) {
        if (role.count(key(os[0].first, os[0].second))) continue;
        role[key(os[0].first, os[0].second)] = 1;
        propagate();
    }

    auto head_of = [&](int e) {
        for (auto [c, s] : occ[e])
            if (role[key(c, s)] == 1) return std::make_pair(c, s);
        throw std::logic_error("edge without head");
    };
    static const int cont[4] = {2, 3, -1, 1};  // continuation slot after entering

    // strand components keyed by lowest edge
    std::map<int, int> comp_parent;
    std::map<int, std::vector<int>> comp_edges;
    for (auto& [e, os] : occ) comp_parent[e] = e;
    std::function<int(int)> cfind = [&](int a) {
        while (comp_parent[a] != a) a = comp_parent[a] = comp_parent[comp_parent[a]];
        return a;
    };
    for (int c = 0; c < nc; ++c) {
        comp_parent[cfind(quads[c].e[0])] = cfind(quads[c].e[2]);
        comp_parent[cfind(quads[c].e[1])] = cfind(quads[c].e[3]);
    }
    for (auto& [e, os] : occ) comp_edges[cfind(e)].push_back(e);
    std::vector<std::pair<int, int>> comps;  // (lowest edge, root)
    for (auto& [root, edges] : comp_edges)
        comps.push_back({*std::min_element(edges.begin(), edges.end()), root});
    std::sort(comps.begin(), comps.end());

    std::map<int, int> new_id;
    int next = 1;
    for (auto [start, root] : comps) {
        int e = start;
        do {
            new_id[e] = next++;
            auto [c, s] = head_of(e);
            e = quads[c].e[cont[s]];
        } while (e != start);
    }
    std::vector<Crossing> out = quads;
    for (auto& q : out)
        for (int s = 0; s < 4; ++s) q.e[s] = new_id[q.e[s]];
    std::sort(out.begin(), out.end(),
              [](const Crossing& a, const Crossing& b) { return a.e[0] < b.e[0]; });
    return out;
}

}  // namespace

Diagram Diagram::from_quads(std::vector<Crossing> quads, int free_loops) {
    Diagram d;
    d.crossings_ = renumber(quads);
    d.free_loops_ = free_loops;
    d.derive();
    return d;
}

Diagram Diagram::r1_insert(int arc, int chirality) const {
    if (arc < 0 || arc >= arc_count()) throw std::invalid_argument("no such arc");
    if (chirality != 1 && chirality != -1)
        throw std::invalid_argument("chirality must be +1 or -1");
    if (arc >= edge_arc_count_)  // kink a bare circle
        return parse(chirality > 0 ? "PD[X[1,1,2,2]]" : "PD[X[1,2,2,1]]");

    int e = -1;
    for (int i = 1; i <= edge_count(); ++i)
        if (arc_of_[i] == arc) {
            e = i;
            break;
        }
    int loop = edge_count() + 1, tail_piece = edge_count() + 2;
    std::vector<Crossing> quads = crossings_;
    auto [hc, hs] = head_[e];
    quads[hc].e[hs] = tail_piece;
    if (chirality > 0)
        quads.push_back(Crossing{{e, tail_piece, loop, loop}});
    else
        quads.push_back(Crossing{{e, loop, loop, tail_piece}});
    return from_quads(std::move(quads), free_loops_);
}

Diagram Diagram::r2_insert(int arc_over, int arc_under) const {
    if (arc_over < 0 || arc_over >= arc_count() || arc_under < 0 || arc_under >= arc_count())
        throw std::invalid_argument("no such arc");
    if (crossing_count() == 0)  // push the bare circle across itself
        return parse("PD[X[1,1,2,4],X[2,3,3,4]]");

    int region = -1, e_u = -1, e_o = -1, side_u = -1, side_o = -1;
    for (int r = 0; r < region_count() && region < 0; ++r) {
        for (const auto& [eu, su] : regions_[r]) {
            if (arc_of_[eu] != arc_under) continue;
            for (const auto& [eo, so] : regions_[r]) {
                if (arc_of_[eo] != arc_over || eo == eu) continue;
                region = r;
                e_u = eu;
                side_u = su;
                e_o = eo;
                side_o = so;
                break;
            }
            if (region >= 0) break;
        }
    }
    if (region < 0)
        throw std::invalid_argument("arcs do not border a common region on distinct edges");

    // split u into u_a -> u_b -> u_c and o into o_a -> o_b -> o_c
    int u_a = e_u, u_b = edge_count() + 1, u_c = edge_count() + 2;
    int o_a = e_o, o_b = edge_count() + 3, o_c = edge_count() + 4;
    std::vector<Crossing> quads = crossings_;
    auto [uhc, uhs] = head_[e_u];
    auto [ohc, ohs] = head_[e_o];
    quads[uhc].e[uhs] = u_c;
    quads[ohc].e[ohs] = o_c;

    // region side exposes traversal direction: right side (0) means the face
    // walk runs along the edge, so matching sides mean anti-parallel strands
    bool parallel = side_u != side_o;
    if (side_u == 0) {
        if (parallel) {
            quads.push_back(Crossing{{u_a, o_a, u_b, o_b}});
            quads.push_back(Crossing{{u_b, o_c, u_c, o_b}});
        } else {
            quads.push_back(Crossing{{u_b, o_a, u_c, o_b}});
            quads.push_back(Crossing{{u_a, o_c, u_b, o_b}});
        }
    } else {
        if (parallel) {
            quads.push_back(Crossing{{u_a, o_b, u_b, o_a}});
            quads.push_back(Crossing{{u_b, o_b, u_c, o_c}});
        } else {
            quads.push_back(Crossing{{u_b, o_b, u_c, o_a}});
            quads.push_back(Crossing{{u_a, o_b, u_b, o_c}});
        }
    }
    return from_quads(std::move(quads), free_loops_);
}

Diagram Diagram::connected_sum(const Diagram& d1, const Diagram& d2, int arc1, int arc2) {
    if (d1.component_count() != 1 || d2.component_count() != 1)
        throw std::invalid_argument("connected sum needs single-component diagrams");
    if (d1.crossing_count() == 0) return from_quads(d2.crossings_, d2.free_loops_);
    if (d2.crossing_count() == 0) return from_quads(d1.crossings_, d1.free_loops_);

    int e1 = d1.arc_edge_on_region(arc1, d1.infinity_region());
    int e2 = d2.arc_edge_on_region(arc2, d2.infinity_region());
    if (e1 < 0 || e2 < 0)
        throw std::invalid_argument("chosen arcs must border the outer regions");

    int offset = d1.edge_count();
    std::vector<Crossing> quads = d1.crossings_;
    for (const auto& q : d2.crossings_) {
        Crossing shifted = q;
        for (int s = 0; s < 4; ++s) shifted.e[s] += offset;
        quads.push_back(shifted);
    }
    int e2s = e2 + offset;
    auto [h1c, h1s] = d1.head_[e1];
    auto [h2c, h2s] = d2.head_[e2];
    quads[h1c].e[h1s] = e2s;                                        // strand 2 tail into 1's head
    quads[static_cast<size_t>(h2c) + d1.crossing_count()].e[h2s] = e1;  // and vice versa
    return from_quads(std::move(quads), 0);
}

}  // namespace quandlekit
