#include "quandlekit/cocycle.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace quandlekit {

namespace {

int reduce(long long v, int mod) {
    return static_cast<int>(((v % mod) + mod) % mod);
}

// Lowest arc with an edge on the infinity region; splice sites must sit on
// the outer face.
int outer_arc(const Diagram& d) {
    if (d.crossing_count() == 0) return 0;
    for (int arc = 0; arc < d.arc_count(); ++arc)
        if (d.arc_edge_on_region(arc, d.infinity_region()) >= 0) return arc;
    throw std::logic_error("no arc on the infinity region");
}

}  // namespace

int Cocycle::eval(const std::vector<int>& t) const {
    auto it = entries.find(t);
    return it == entries.end() ? 0 : it->second;
}

Cocycle zero_cocycle(int degree, int mod) {
    return {degree, mod, {}};
}

Cocycle add(const Cocycle& a, const Cocycle& b) {
    if (a.degree != b.degree || a.mod != b.mod)
        throw std::invalid_argument("cocycle degree or modulus mismatch");
    Cocycle out{a.degree, a.mod, a.entries};
    for (const auto& [t, v] : b.entries) {
        int sum = reduce(out.eval(t) + v, a.mod);
        if (sum == 0)
            out.entries.erase(t);
        else
            out.entries[t] = sum;
    }
    return out;
}

Cocycle pullback_to_shadow(const Cocycle& phi, int carrier_size) {
    if (phi.degree != 2) throw std::invalid_argument("pullback needs a degree-2 cocycle");
    Cocycle out{3, phi.mod, {}};
    for (int r = 0; r < carrier_size; ++r)
        for (const auto& [t, v] : phi.entries) out.entries[{r, t[0], t[1]}] = v;
    return out;
}

bool is_cocycle(const Rack& x, const Cocycle& c, int bound) {
    if (bound < 0) bound = default_degree_bound(x.size());
    if (c.degree + 1 > bound) throw std::out_of_range("degree bound exceeded");
    ChainComplex cx = build_complex(x, Theory::Q, c.degree + 1);
    const IntMat& m = cx.boundary[c.degree + 1];
    for (int j = 0; j < cx.dim(c.degree + 1); ++j) {
        mpz_class pairing = 0;
        for (int i = 0; i < cx.dim(c.degree); ++i)
            if (m.at(i, j) != 0) pairing += m.at(i, j) * c.eval(cx.basis[c.degree][i]);
        if (pairing % c.mod != 0) return false;
    }
    return true;
}

FoundCocycles find_cocycles(const Rack& x, int degree, int mod, int bound) {
    if (degree != 2 && degree != 3) throw std::invalid_argument("cocycle degree must be 2 or 3");
    CocycleBasis cb = cocycle_spanning_set(x, Theory::Q, degree, mod, bound);
    ChainComplex cx = build_complex(x, Theory::Q, degree);
    FoundCocycles out;
    for (const auto& vec : cb.vectors) {
        Cocycle c{degree, mod, {}};
        for (int i = 0; i < static_cast<int>(vec.size()); ++i) {
            int v = reduce(vec[i], mod);
            if (v != 0) c.entries[cx.basis[degree][i]] = v;
        }
        out.basis.push_back(std::move(c));
    }
    out.coboundary = cb.coboundary;
    return out;
}

long long StateSumResult::total() const {
    long long t = 0;
    for (const auto& [w, count] : multiplicity) t += count;
    return t;
}

StateSumResult statesum_2cocycle(const Diagram& d, const Rack& x, const Cocycle& phi) {
    if (phi.degree != 2) throw std::invalid_argument("state sum needs a degree-2 cocycle");
    StateSumResult r{phi.mod, {}};
    for (const Coloring& c : enumerate_colorings(d, x)) {
        long long w = 0;
        for (int cr = 0; cr < d.crossing_count(); ++cr) {
            int s = d.sign(cr);
            int under_edge = s > 0 ? d.under_in_edge(cr) : d.under_out_edge(cr);
            w += s * phi.eval({c.arc_color[d.arc_of_edge(under_edge)],
                               c.arc_color[d.arc_of_edge(d.over_in_edge(cr))]});
        }
        ++r.multiplicity[reduce(w, phi.mod)];
    }
    return r;
}

StateSumResult shadow_statesum_3cocycle(const Diagram& d, const Rack& x, const Cocycle& theta) {
    if (theta.degree != 3) throw std::invalid_argument("shadow state sum needs a degree-3 cocycle");
    StateSumResult r{theta.mod, {}};
    for (const ShadowColoring& sc : enumerate_shadow_colorings(d, x)) {
        long long w = 0;
        for (const CycleTerm& t : fundamental_cycle(d, sc)) w += t.sign * theta.eval({t.r, t.x, t.y});
        ++r.multiplicity[reduce(w, theta.mod)];
    }
    return r;
}

StateSumResult convolve(const StateSumResult& a, const StateSumResult& b) {
    if (a.mod != b.mod) throw std::invalid_argument("modulus mismatch");
    StateSumResult r{a.mod, {}};
    for (const auto& [u, cu] : a.multiplicity)
        for (const auto& [v, cv] : b.multiplicity) r.multiplicity[(u + v) % a.mod] += cu * cv;
    return r;
}

StateSumResult scale(const StateSumResult& a, long long factor) {
    StateSumResult r{a.mod, {}};
    for (const auto& [w, count] : a.multiplicity) r.multiplicity[w] = count * factor;
    return r;
}

bool ConnectedSumReport::passed() const {
    if (!applicable || !counts_ok || !shadow_counts_ok) return false;
    for (bool ok : statesum_ok)
        if (!ok) return false;
    return true;
}

ConnectedSumReport verify_connected_sum(const Rack& x, const Diagram& d1, const Diagram& d2,
                                        const std::vector<Cocycle>& test_cocycles) {
    ConnectedSumReport rep;
    if (!is_faithful(x)) {
        rep.refusal = "carrier is not faithful";
        return rep;
    }
    if (!is_connected(x)) {
        rep.refusal = "carrier is not connected";
        return rep;
    }
    if (d1.component_count() != 1) {
        rep.refusal = "first diagram is not a knot";
        return rep;
    }
    if (d2.component_count() != 1) {
        rep.refusal = "second diagram is not a knot";
        return rep;
    }
    rep.applicable = true;

    Diagram k = Diagram::connected_sum(d1, d2, outer_arc(d1), outer_arc(d2));
    long long n = x.size();
    rep.col1 = count_colorings(d1, x);
    rep.col2 = count_colorings(d2, x);
    rep.col_sum = count_colorings(k, x);
    rep.counts_ok = n * rep.col_sum == rep.col1 * rep.col2;
    rep.scol1 = count_shadow_colorings(d1, x);
    rep.scol2 = count_shadow_colorings(d2, x);
    rep.scol_sum = count_shadow_colorings(k, x);
    rep.shadow_counts_ok = n * n * rep.scol_sum == rep.scol1 * rep.scol2;
    for (const Cocycle& phi : test_cocycles) {
        StateSumResult lhs = scale(statesum_2cocycle(k, x, phi), n);
        StateSumResult rhs =
            convolve(statesum_2cocycle(d1, x, phi), statesum_2cocycle(d2, x, phi));
        rep.statesum_ok.push_back(lhs == rhs);
    }
    return rep;
}

std::string cocycle_to_json(const Cocycle& c) {
    nlohmann::json j;
    j["degree"] = c.degree;
    j["m"] = c.mod;
    j["entries"] = nlohmann::json::array();
    for (const auto& [t, v] : c.entries) {
        nlohmann::json row = t;
        row.push_back(v);
        j["entries"].push_back(row);
    }
    return j.dump();
}

Cocycle cocycle_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Cocycle c;
    c.degree = j.at("degree").get<int>();
    c.mod = j.at("m").get<int>();
    if ((c.degree != 2 && c.degree != 3) || c.mod < 2)
        throw std::invalid_argument("bad cocycle header");
    for (const auto& row : j.at("entries")) {
        if (static_cast<int>(row.size()) != c.degree + 1)
            throw std::invalid_argument("entry arity does not match degree");
        std::vector<int> t;
        for (int k = 0; k < c.degree; ++k) t.push_back(row[k].get<int>());
        int v = reduce(row[c.degree].get<long long>(), c.mod);
        if (v != 0) c.entries[t] = v;
    }
    return c;
}

Cocycle load_cocycle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cocycle file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return cocycle_from_json(buf.str());
}

std::string statesum_to_json(const StateSumResult& r) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, count] : r.multiplicity) j.push_back({w, count});
    return j.dump();
}

}  // namespace quandlekit
