#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quandlekit {

// Per-axiom validation of a candidate Cayley table.  Structural problems
// (non-square table, out-of-range entry) are reported separately from axiom
// failures; counterexamples are lexicographically first.
struct ValidationReport {
    bool structural_ok = true;
    std::string structural_error;
    std::optional<std::array<int, 3>> self_distributive_fail;  // (a,b,c)
    std::optional<std::array<int, 3>> invertible_fail;         // (a1,a2,b), column b collides
    std::optional<int> idempotent_fail;                        // a with a*a != a

    bool is_rack() const {
        return structural_ok && !self_distributive_fail && !invertible_fail;
    }
    bool is_quandle() const { return is_rack() && !idempotent_fail; }
};

ValidationReport validate_table(const std::vector<std::vector<int>>& table);

// Finite rack on {0,..,n-1} given by table[a][b] = a*b.  Immutable.
class Rack {
public:
    explicit Rack(std::vector<std::vector<int>> table);

    int size() const { return n_; }
    int op(int a, int b) const { return table_[a][b]; }
    int inv_op(int a, int b) const { return inv_[a][b]; }  // unique c with c*b = a
    bool quandle() const { return quandle_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    int n_;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inv_;
    bool quandle_;
};

Rack cyclic_rack(int n);            // i*j = i+1 mod n
Rack trivial_quandle(int n);        // a*b = a
Rack dihedral_quandle(int n);       // i*j = 2j-i mod n
Rack alexander_quandle(int n, int t);  // a*b = ta+(1-t)b mod n, needs gcd(t,n)=1

struct OrbitPartition {
    std::vector<std::vector<int>> blocks;  // sorted, each block sorted
    long long group_order = 0;             // order of the generated inner group
};

OrbitPartition inner_orbits(const Rack& x);
bool is_connected(const Rack& x);
bool is_faithful(const Rack& x);

// Automorphism-group transitivity by exhaustive search.  Sizes above the
// bound get known=false rather than a guess.
struct HomogeneityResult {
    bool known = false;
    bool homogeneous = false;
    int bound = 8;
};
HomogeneityResult is_homogeneous(const Rack& x, int bound = 8);

// Table I/O: JSON {"size": n, "table": [[..],..]} (integer or named entries;
// names map to indices in first-appearance order) or n lines of n integers.
std::vector<std::vector<int>> load_table_file(const std::string& path);

// Spec strings "dihedral:n", "alexander:n:t", "cyclic:n", "trivial:n",
// otherwise treated as a table file path.  Throws std::invalid_argument on
// malformed input; the returned table may still fail validate_table.
std::vector<std::vector<int>> load_table_spec(const std::string& spec);

Rack rack_from_spec(const std::string& spec);  // throws unless a valid rack

}  // namespace quandlekit
