#include "quandlekit/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quandlekit/chain.hpp"
#include "quandlekit/cocycle.hpp"
#include "quandlekit/coloring.hpp"
#include "quandlekit/diagram.hpp"
#include "quandlekit/rack.hpp"
#include "quandlekit/spaces.hpp"

namespace quandlekit {

namespace {

namespace fs = std::filesystem;

Diagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open diagram file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return Diagram::parse(buf.str());
}

// diagrams/foo.pd -> "foo", moves/r1/pair_1_a.pd -> "r1_pair_1_a"
std::vector<std::pair<std::string, Diagram>> load_corpus(const std::string& fixture_dir) {
    std::vector<std::pair<std::string, Diagram>> out;
    auto add_dir = [&](const std::string& sub, const std::string& prefix) {
        fs::path dir = fs::path(fixture_dir) / sub;
        if (!fs::is_directory(dir)) throw std::runtime_error("missing fixture dir: " + dir.string());
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().extension() == ".pd") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) out.push_back({prefix + f.stem().string(), load_diagram(f.string())});
    };
    add_dir("diagrams", "");
    for (const std::string& move : {"r1", "r2", "r3"}) add_dir("moves/" + move, move + "_");
    return out;
}

struct NamedRack {
    std::string name;
    Rack rack;
};

std::vector<NamedRack> fixture_racks(const std::string& fixture_dir) {
    std::vector<NamedRack> out;
    for (const std::string& spec :
         {"trivial:2", "trivial:3", "dihedral:3", "dihedral:4", "dihedral:5", "alexander:5:2"})
        out.push_back({spec, rack_from_spec(spec)});
    out.push_back({"gf4", rack_from_spec(fixture_dir + "/quandles/alexander_gf4.json")});
    return out;
}

std::string join(const std::vector<mpz_class>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

// Multiset of homology-class coordinates of the crossing cycles, one entry
// per shadow coloring; empty string marks a chain that fails the cycle test.
std::multiset<std::string> class_multiset(const Diagram& d, const Rack& x,
                                          const ClassCalculator& cc) {
    std::multiset<std::string> out;
    for (const ShadowColoring& sc : enumerate_shadow_colorings(d, x)) {
        std::vector<mpz_class> z(cc.dim(), 0);
        for (const CycleTerm& t : fundamental_cycle(d, sc)) {
            int i = cc.basis_index({t.r, t.x, t.y});
            if (i >= 0) z[i] += t.sign;
        }
        if (!cc.is_cycle(z)) {
            out.insert("");
            continue;
        }
        out.insert(join(cc.signature(z)));
    }
    return out;
}

struct MoveChecker {
    Rack r3 = rack_from_spec("dihedral:3");
    Rack gf4;
    Cocycle phi2;       // degree 2 mod 2 on gf4
    Cocycle theta2;     // its shadow pullback
    Cocycle theta3;     // degree 3 mod 3 on r3, not a coboundary
    ClassCalculator cc3{r3, Theory::Q, 3};
    ClassCalculator cc4;

    explicit MoveChecker(const std::string& fixture_dir)
        : gf4(rack_from_spec(fixture_dir + "/quandles/alexander_gf4.json")),
          phi2(load_cocycle_file(fixture_dir + "/cocycles/gf4_phi2.json")),
          theta2(pullback_to_shadow(phi2, 4)),
          cc4(gf4, Theory::Q, 3) {
        FoundCocycles fc = find_cocycles(r3, 3, 3);
        bool found = false;
        for (size_t i = 0; i < fc.basis.size(); ++i)
            if (!fc.coboundary[i]) {
                theta3 = fc.basis[i];
                found = true;
                break;
            }
        if (!found) throw std::logic_error("no nontrivial degree-3 cocycle on dihedral:3");
    }

    // All four invariant families on one diagram pair and one carrier.
    VerifyCase compare(const std::string& name, const Diagram& a, const Diagram& b,
                       const Rack& x) {
        bool is_gf4 = x.size() == 4;
        const ClassCalculator& cc = is_gf4 ? cc4 : cc3;
        std::ostringstream detail;
        bool ok = true;

        long long ca = count_colorings(a, x), cb = count_colorings(b, x);
        ok &= ca == cb;
        detail << "col " << ca << (ca == cb ? "=" : "!=") << cb;
        long long sa = count_shadow_colorings(a, x), sb = count_shadow_colorings(b, x);
        ok &= sa == sb;
        detail << " scol " << sa << (sa == sb ? "=" : "!=") << sb;

        auto ma = class_multiset(a, x, cc), mb = class_multiset(b, x, cc);
        bool cycles_ok = ma.count("") == 0 && mb.count("") == 0;
        bool classes_ok = cycles_ok && ma == mb;
        ok &= classes_ok;
        detail << (classes_ok ? " classes=" : " classes!");

        if (is_gf4) {
            bool s2 = statesum_2cocycle(a, x, phi2) == statesum_2cocycle(b, x, phi2);
            bool s3 = shadow_statesum_3cocycle(a, x, theta2) ==
                      shadow_statesum_3cocycle(b, x, theta2);
            ok &= s2 && s3;
            detail << (s2 ? " sum2=" : " sum2!") << (s3 ? " sum3=" : " sum3!");
        } else {
            bool s3 = shadow_statesum_3cocycle(a, x, theta3) ==
                      shadow_statesum_3cocycle(b, x, theta3);
            ok &= s3;
            detail << (s3 ? " sum3=" : " sum3!");
        }
        return {name, ok, detail.str()};
    }
};

VerifyReport prop23_suite(const std::string& fixture_dir) {
    VerifyReport rep{"prop23", {}};
    std::vector<NamedRack> racks;
    for (const std::string& spec :
         {"dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6", "trivial:2", "trivial:3"})
        racks.push_back({spec, rack_from_spec(spec)});
    racks.push_back({"gf4", rack_from_spec(fixture_dir + "/quandles/alexander_gf4.json")});
    for (const auto& [name, x] : racks) {
        long long orbits = static_cast<long long>(inner_orbits(x).blocks.size());
        long long rg = component_count(rack_graph(x));
        long long qg = component_count(quandle_graph(x));
        long long h0 = space_homology(x, SpaceKind::ExtendedRack, 0).free_rank;
        long long h1r = homology(x, Theory::R, 1, 0).free_rank;
        long long h1q = homology(x, Theory::Q, 1, 0).free_rank;
        bool ok = rg == orbits && qg == orbits && h0 == orbits && h1r == orbits &&
                  h1q == orbits && is_connected(x) == (orbits == 1);
        std::ostringstream detail;
        detail << "orbits " << orbits << " rack-graph " << rg << " quandle-graph " << qg
               << " H0 " << h0 << " rkH1R " << h1r << " rkH1Q " << h1q;
        rep.cases.push_back({name, ok, detail.str()});
    }
    return rep;
}

VerifyReport scol_suite(const std::string& fixture_dir) {
    VerifyReport rep{"scol-identity", {}};
    auto corpus = load_corpus(fixture_dir);
    auto racks = fixture_racks(fixture_dir);
    for (const auto& [dname, d] : corpus)
        for (const auto& [xname, x] : racks) {
            long long col = count_colorings(d, x);
            long long scol = count_shadow_colorings(d, x);
            bool ok = scol == x.size() * col;
            std::ostringstream detail;
            detail << "col " << col << " scol " << scol;
            rep.cases.push_back({dname + "/" + xname, ok, detail.str()});
        }
    return rep;
}

VerifyReport moves_suite(const std::string& fixture_dir) {
    VerifyReport rep{"moves", {}};
    MoveChecker mc(fixture_dir);
    auto corpus = load_corpus(fixture_dir);

    std::vector<std::pair<std::string, Diagram>> bases;
    for (const auto& [name, d] : corpus)
        if (name.rfind("r1_", 0) != 0 && name.rfind("r2_", 0) != 0 && name.rfind("r3_", 0) != 0)
            bases.push_back({name, d});

    for (const auto& [name, base] : bases) {
        std::vector<std::pair<std::string, Diagram>> rewrites;
        for (int arc = 0; arc < base.arc_count(); ++arc) {
            for (int chir : {1, -1})
                rewrites.push_back({"r1[" + std::to_string(arc) + (chir > 0 ? "+" : "-") + "]",
                                    base.r1_insert(arc, chir)});
            for (int under = 0; under < base.arc_count(); ++under) {
                try {
                    Diagram d2 = base.r2_insert(arc, under);
                    rewrites.push_back(
                        {"r2[" + std::to_string(arc) + "," + std::to_string(under) + "]",
                         std::move(d2)});
                } catch (const std::invalid_argument&) {
                    // arcs share no region through distinct edges; not a move site
                }
            }
        }
        for (const auto& [rw, d] : rewrites) {
            rep.cases.push_back(mc.compare(name + " " + rw + " /dihedral:3", base, d, mc.r3));
            rep.cases.push_back(mc.compare(name + " " + rw + " /gf4", base, d, mc.gf4));
        }
    }

    std::map<std::string, Diagram> shipped;
    for (const auto& [name, d] : corpus)
        if (name.rfind("r3_", 0) == 0) shipped.insert({name, d});
    for (const auto& [name, d] : shipped) {
        if (name.size() < 2 || name.back() != 'a') continue;
        std::string partner = name.substr(0, name.size() - 1) + "b";
        auto it = shipped.find(partner);
        if (it == shipped.end()) continue;
        rep.cases.push_back(mc.compare(name + "~" + partner + " /dihedral:3", d, it->second, mc.r3));
        rep.cases.push_back(mc.compare(name + "~" + partner + " /gf4", d, it->second, mc.gf4));
    }
    return rep;
}

VerifyReport consum_suite(const std::string& fixture_dir) {
    VerifyReport rep{"consum", {}};
    Diagram trefoil = load_diagram(fixture_dir + "/diagrams/trefoil.pd");
    Diagram unknot = load_diagram(fixture_dir + "/diagrams/unknot_0.pd");
    Rack r3 = rack_from_spec("dihedral:3");
    Rack gf4 = rack_from_spec(fixture_dir + "/quandles/alexander_gf4.json");
    Cocycle phi2 = load_cocycle_file(fixture_dir + "/cocycles/gf4_phi2.json");

    auto describe = [](const ConnectedSumReport& r) {
        std::ostringstream out;
        if (!r.applicable) {
            out << "refused: " << r.refusal;
            return out.str();
        }
        out << "col " << r.col1 << "*" << r.col2 << (r.counts_ok ? "=" : "!=") << "|X|*"
            << r.col_sum << " scol " << r.scol1 << "*" << r.scol2
            << (r.shadow_counts_ok ? "=" : "!=") << "|X|^2*" << r.scol_sum;
        for (bool ok : r.statesum_ok) out << (ok ? " sum=" : " sum!");
        return out.str();
    };

    ConnectedSumReport a = verify_connected_sum(r3, trefoil, trefoil);
    rep.cases.push_back({"dihedral:3 trefoil#trefoil", a.passed(), describe(a)});
    ConnectedSumReport b = verify_connected_sum(r3, unknot, trefoil);
    rep.cases.push_back({"dihedral:3 unknot#trefoil", b.passed(), describe(b)});
    ConnectedSumReport c = verify_connected_sum(gf4, trefoil, trefoil, {phi2});
    rep.cases.push_back({"gf4 trefoil#trefoil", c.passed(), describe(c)});
    ConnectedSumReport d = verify_connected_sum(rack_from_spec("trivial:2"), trefoil, trefoil);
    bool refused = !d.applicable && d.refusal.find("faithful") != std::string::npos;
    rep.cases.push_back({"trivial:2 trefoil#trefoil refused", refused, describe(d)});
    return rep;
}

VerifyReport spaces_suite(const std::string& fixture_dir) {
    VerifyReport rep{"spaces", {}};
    std::vector<NamedRack> racks;
    for (const std::string& spec : {"trivial:2", "dihedral:3"})
        racks.push_back({spec, rack_from_spec(spec)});
    racks.push_back({"gf4", rack_from_spec(fixture_dir + "/quandles/alexander_gf4.json")});

    for (const auto& [name, x] : racks) {
        PreCubicSet plain = build_rack_space_cells(x, 4);
        PreCubicSet ext = build_extended_rack_space_cells(x, 3);
        rep.cases.push_back({name + " face relations",
                             plain.relations_hold() && ext.relations_hold(), "degrees 4 and 3"});

        bool cell_match = true;
        for (int n = 1; n <= 4; ++n)
            cell_match &= cellular_boundary_matrix(plain, n) == rack_boundary_matrix(x, n);
        for (int n = 1; n <= 3; ++n) {
            IntMat alg = rack_boundary_matrix(x, n + 1);
            IntMat cell = cellular_boundary_matrix(ext, n);
            for (auto& v : alg.a) v = -v;
            cell_match &= cell == alg;
        }
        rep.cases.push_back(
            {name + " cellular boundaries", cell_match, "plain = free, extended = shifted"});

        bool weak_strong = weak_equals_strong(rack_graph(x)) && weak_equals_strong(quandle_graph(x));
        rep.cases.push_back({name + " weak=strong components", weak_strong, ""});

        long long n = x.size();
        CellCensus census = extended_quandle_census(x);
        bool census_ok = census.original == std::array<long long, 4>{n, n * n, n * n * n,
                                                                     n * n * n * n} &&
                         census.capping == n && census.cone == 2 * n * n - n &&
                         static_cast<long long>(census.attachments.size()) == n * n - n;
        for (const auto& att : census.attachments) {
            int a = att.square[0], b = att.square[2];
            census_ok &= att.square[1] == a && a != b &&
                         att.lower_disk == std::array<int, 2>{a, a} &&
                         att.upper_disk == std::array<int, 2>{x.op(a, b), x.op(a, b)};
        }
        CellCensus action = action_quandle_census(x);
        census_ok &= action.capping == 0 && action.cone == n * n && action.attachments.empty();
        std::ostringstream cdetail;
        cdetail << census.original[0] << "," << census.original[1] << ","
                << census.original[2] + census.capping << "," << census.original[3] + census.cone;
        rep.cases.push_back({name + " census", census_ok, cdetail.str()});

        bool ident = true;
        for (int i = 0; i <= 1; ++i) {
            ident &= space_homology(x, SpaceKind::ExtendedRack, i) == homology(x, Theory::R, i + 1, 0);
            ident &= space_homology(x, SpaceKind::ExtendedQuandle, i) ==
                     homology(x, Theory::Q, i + 1, 0);
            ident &= space_homology(x, SpaceKind::Rack, i) == homology(x, Theory::R, i, 0);
        }
        rep.cases.push_back({name + " homology identification", ident, "space degrees 0,1"});
    }
    return rep;
}

}  // namespace

bool VerifyReport::passed() const {
    for (const auto& c : cases)
        if (!c.passed) return false;
    return !cases.empty();
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    int failed = 0;
    for (const auto& c : cases) {
        out << (c.passed ? "PASS" : "FAIL") << " " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
        if (!c.passed) ++failed;
    }
    out << suite << ": " << (cases.size() - failed) << "/" << cases.size() << " cases passed\n";
    return out.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"prop23", "scol-identity", "moves", "consum",
                                               "spaces"};
    return names;
}

VerifyReport run_suite(const std::string& suite, const std::string& fixture_dir) {
    if (suite == "prop23") return prop23_suite(fixture_dir);
    if (suite == "scol-identity") return scol_suite(fixture_dir);
    if (suite == "moves") return moves_suite(fixture_dir);
    if (suite == "consum") return consum_suite(fixture_dir);
    if (suite == "spaces") return spaces_suite(fixture_dir);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace quandlekit
