#pragma once
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "quandlekit/diagram.hpp"
#include "quandlekit/rack.hpp"

namespace qk_test {

inline std::string source_dir() { return QK_SOURCE_DIR; }
inline std::string fixture_dir() { return std::string(QK_SOURCE_DIR) + "/fixtures"; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline nlohmann::json expected_json(const std::string& name) {
    return nlohmann::json::parse(read_file(source_dir() + "/tests/oracle/expected/" + name));
}

// Corpus keys: "trefoil" lives in diagrams/, "r2_pair_1_a" in moves/r2/.
inline std::string diagram_path(const std::string& key) {
    if (key.rfind("r1_", 0) == 0 || key.rfind("r2_", 0) == 0 || key.rfind("r3_", 0) == 0)
        return fixture_dir() + "/moves/" + key.substr(0, 2) + "/" + key.substr(3) + ".pd";
    return fixture_dir() + "/diagrams/" + key + ".pd";
}

inline quandlekit::Diagram load_diagram(const std::string& key) {
    return quandlekit::Diagram::parse(read_file(diagram_path(key)));
}

// Corpus names: "dihedral_3" -> spec "dihedral:3", "gf4" -> the table file.
inline quandlekit::Rack rack_by_name(const std::string& name) {
    if (name == "gf4")
        return quandlekit::rack_from_spec(fixture_dir() + "/quandles/alexander_gf4.json");
    std::string spec = name;
    for (char& ch : spec)
        if (ch == '_') ch = ':';
    return quandlekit::rack_from_spec(spec);
}

}  // namespace qk_test
