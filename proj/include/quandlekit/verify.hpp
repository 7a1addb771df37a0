#pragma once
#include <string>
#include <vector>

namespace quandlekit {

struct VerifyCase {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    bool passed() const;
    std::string to_text() const;  // one line per case plus a summary line
};

// prop23: orbit count = graph components = extended-space H0 rank = H1 ranks.
// scol-identity: |SCol| = |X| |Col| on every fixture pair.
// moves: counts, shadow counts, cycle classes and state sums across R1/R2
//   rewrites of every fixture diagram and the shipped R3 pairs.
// consum: splice identities for counts, shadow counts and state sums.
// spaces: face relations, cellular = algebraic boundaries, census, graphs.
const std::vector<std::string>& suite_names();

// fixture_dir holds diagrams/, moves/, quandles/, cocycles/.  Throws
// std::invalid_argument for an unknown suite name, std::runtime_error when
// fixture files are missing.
VerifyReport run_suite(const std::string& suite, const std::string& fixture_dir);

}  // namespace quandlekit
