#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "quandlekit/chain.hpp"
#include "quandlekit/cocycle.hpp"
#include "quandlekit/coloring.hpp"
#include "quandlekit/diagram.hpp"
#include "quandlekit/rack.hpp"
#include "quandlekit/spaces.hpp"
#include "quandlekit/verify.hpp"

namespace {

using namespace quandlekit;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;  // axiom or verification failure
constexpr int kExitUsage = 2;   // bad flags, specs, files or inputs

Diagram load_diagram_arg(const std::string& arg) {
    if (arg.rfind("PD[", 0) == 0) return Diagram::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open diagram file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return Diagram::parse(buf.str());
}

int parse_coefficients(const std::string& coeff) {
    if (coeff == "Z") return 0;
    std::string digits = coeff.rfind("Z/", 0) == 0 ? coeff.substr(2) : coeff;
    size_t used = 0;
    int m = std::stoi(digits, &used);
    if (used != digits.size() || m < 2)
        throw std::invalid_argument("coefficients must be Z, Z/m or m with m >= 2");
    return m;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_info(const std::string& spec, bool as_json) {
    auto table = load_table_spec(spec);
    ValidationReport report = validate_table(table);
    if (!report.structural_ok) throw std::invalid_argument(report.structural_error);

    nlohmann::json j;
    j["spec"] = spec;
    j["size"] = table.size();
    j["rack"] = report.is_rack();
    j["quandle"] = report.is_quandle();
    std::ostringstream text;
    text << "spec: " << spec << "\n";
    text << "size: " << table.size() << "\n";
    text << "rack: " << yes_no(report.is_rack()) << "\n";
    if (report.self_distributive_fail) {
        auto [a, b, c] = *report.self_distributive_fail;
        text << "  self-distributivity fails at (" << a << "," << b << "," << c << ")\n";
        j["self_distributive_fail"] = {a, b, c};
    }
    if (report.invertible_fail) {
        auto [a1, a2, b] = *report.invertible_fail;
        text << "  column " << b << " not injective: " << a1 << "*" << b << " = " << a2 << "*"
             << b << "\n";
        j["invertible_fail"] = {a1, a2, b};
    }
    text << "quandle: " << yes_no(report.is_quandle()) << "\n";
    if (report.idempotent_fail) {
        text << "  idempotency fails at " << *report.idempotent_fail << "\n";
        j["idempotent_fail"] = *report.idempotent_fail;
    }

    if (report.is_rack()) {
        Rack x(table);
        OrbitPartition orbits = inner_orbits(x);
        HomogeneityResult hom = is_homogeneous(x);
        j["connected"] = is_connected(x);
        j["faithful"] = is_faithful(x);
        j["orbits"] = orbits.blocks.size();
        j["inner_group_order"] = orbits.group_order;
        j["homogeneous"] = hom.known ? yes_no(hom.homogeneous) : "unknown";
        text << "connected: " << yes_no(is_connected(x)) << "\n";
        text << "faithful: " << yes_no(is_faithful(x)) << "\n";
        text << "orbits: " << orbits.blocks.size() << "\n";
        text << "inner group order: " << orbits.group_order << "\n";
        text << "homogeneous: "
             << (hom.known ? yes_no(hom.homogeneous)
                           : "unknown (size above bound " + std::to_string(hom.bound) + ")")
             << "\n";
    }
    std::cout << (as_json ? j.dump() + "\n" : text.str());
    return report.is_rack() ? kExitOk : kExitFailed;
}

int cmd_homology(const std::string& spec, const std::string& theory, int degree,
                 const std::string& coeff, bool as_json) {
    Rack x = rack_from_spec(spec);
    HomologyGroup h = homology(x, theory_from_string(theory), degree, parse_coefficients(coeff));
    if (as_json) {
        nlohmann::json j;
        j["group"] = h.to_string();
        j["free_rank"] = h.free_rank;
        j["torsion"] = h.torsion;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << h.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_color(const std::string& diagram_arg, const std::string& spec, bool shadow, bool list,
              bool as_json) {
    Diagram d = load_diagram_arg(diagram_arg);
    Rack x = rack_from_spec(spec);
    if (list) {
        nlohmann::json j = nlohmann::json::array();
        if (shadow) {
            for (const ShadowColoring& sc : enumerate_shadow_colorings(d, x))
                j.push_back(nlohmann::json::parse(shadow_to_json(sc)));
        } else {
            for (const Coloring& c : enumerate_colorings(d, x)) j.push_back(c.arc_color);
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    long long count = shadow ? count_shadow_colorings(d, x) : count_colorings(d, x);
    if (as_json)
        std::cout << nlohmann::json{{"count", count}}.dump() << "\n";
    else
        std::cout << count << "\n";
    return kExitOk;
}

int cmd_graph(const std::string& spec, bool quandle_g, bool dot, bool as_json) {
    Rack x = rack_from_spec(spec);
    LabeledGraph g = quandle_g ? quandle_graph(x) : rack_graph(x);
    if (dot) {
        std::cout << dot_export(g);
        return kExitOk;
    }
    int comps = component_count(g);
    if (as_json)
        std::cout << nlohmann::json{{"components", comps}}.dump() << "\n";
    else
        std::cout << "components " << comps << "\n";
    return kExitOk;
}

int cmd_statesum(const std::string& diagram_arg, const std::string& spec, int degree, int mod,
                 const std::string& cocycle_arg) {
    Diagram d = load_diagram_arg(diagram_arg);
    Rack x = rack_from_spec(spec);

    Cocycle c;
    if (cocycle_arg == "auto") {
        FoundCocycles found = find_cocycles(x, degree, mod);
        bool picked = false;
        for (size_t i = 0; i < found.basis.size(); ++i)
            if (!found.coboundary[i]) {
                c = found.basis[i];
                picked = true;
                break;
            }
        if (!picked) {
            std::cerr << "no cocycle outside the coboundaries in degree " << degree << " mod "
                      << mod << "\n";
            return kExitFailed;
        }
    } else {
        c = load_cocycle_file(cocycle_arg);
        if (c.degree != degree)
            throw std::invalid_argument("cocycle file has degree " + std::to_string(c.degree) +
                                        ", expected " + std::to_string(degree));
    }

    StateSumResult r = degree == 2 ? statesum_2cocycle(d, x, c)
                                   : shadow_statesum_3cocycle(d, x, c);
    nlohmann::json j;
    j["degree"] = degree;
    j["m"] = r.mod;
    j["pairs"] = nlohmann::json::parse(statesum_to_json(r));
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& fixture_dir) {
    VerifyReport rep = run_suite(suite, fixture_dir);
    std::cout << rep.to_text();
    return rep.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite rack and quandle toolkit"};
    app.require_subcommand(1);

    std::string fixture_dir = "fixtures";
    if (const char* env = std::getenv("QUANDLEKIT_FIXTURES")) fixture_dir = env;
    app.add_option("--fixtures", fixture_dir, "fixture directory root");
    unsigned seed = 0;
    app.add_option("--seed", seed, "seed for randomized drivers; suites are deterministic");
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    auto* info = app.add_subcommand("info", "axioms and structure of a rack spec");
    std::string info_spec;
    info->add_option("spec", info_spec, "family spec or table file")->required();

    auto* hom = app.add_subcommand("homology", "homology of a rack or quandle complex");
    std::string hom_spec, hom_theory, hom_coeff = "Z";
    int hom_degree = 0;
    hom->add_option("spec", hom_spec)->required();
    hom->add_option("theory", hom_theory, "R, D or Q")->required();
    hom->add_option("degree", hom_degree)->required()->check(CLI::NonNegativeNumber);
    hom->add_option("coefficients", hom_coeff, "Z (default), Z/m or m");

    auto* color = app.add_subcommand("color", "colorings of a diagram");
    std::string color_diagram, color_spec;
    bool color_shadow = false, color_list = false;
    color->add_option("diagram", color_diagram, "PD text or .pd file")->required();
    color->add_option("spec", color_spec)->required();
    color->add_flag("--shadow", color_shadow, "shadow colorings");
    color->add_flag("--list", color_list, "list instead of count");

    auto* graph = app.add_subcommand("graph", "translation graph of a rack");
    std::string graph_spec;
    bool graph_quandle = false, graph_dot = false;
    graph->add_option("spec", graph_spec)->required();
    graph->add_flag("--quandle-graph", graph_quandle, "drop the (a,a) loops");
    graph->add_flag("--dot", graph_dot, "emit DOT instead of the component count");

    auto* sum = app.add_subcommand("statesum", "cocycle weight multiset of a diagram");
    std::string sum_diagram, sum_spec, sum_cocycle = "auto";
    int sum_degree = 2, sum_mod = 2;
    sum->add_option("diagram", sum_diagram, "PD text or .pd file")->required();
    sum->add_option("spec", sum_spec)->required();
    sum->add_option("--degree", sum_degree)->check(CLI::IsMember({2, 3}));
    sum->add_option("--mod", sum_mod)->check(CLI::Range(2, 1 << 20));
    sum->add_option("--cocycle", sum_cocycle, "cocycle JSON file, or auto to search");

    auto* verify = app.add_subcommand("verify", "fixture verification suites");
    std::string verify_suite;
    verify->add_option("suite", verify_suite)->required()->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*info) return cmd_info(info_spec, as_json);
        if (*hom) return cmd_homology(hom_spec, hom_theory, hom_degree, hom_coeff, as_json);
        if (*color) return cmd_color(color_diagram, color_spec, color_shadow, color_list, as_json);
        if (*graph) return cmd_graph(graph_spec, graph_quandle, graph_dot, as_json);
        if (*sum) return cmd_statesum(sum_diagram, sum_spec, sum_degree, sum_mod, sum_cocycle);
        if (*verify) return cmd_verify(verify_suite, fixture_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
