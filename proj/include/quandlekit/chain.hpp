#pragma once
#include <string>
#include <unordered_map>
#include <vector>

#include "quandlekit/rack.hpp"
#include "quandlekit/smith.hpp"

namespace quandlekit {

// W = R: free complex on all tuples; D: degenerate subcomplex; Q: quotient.
enum class Theory { R, D, Q };

Theory theory_from_string(const std::string& s);  // "R"/"D"/"Q", throws otherwise

bool is_degenerate_tuple(const std::vector<int>& t);

// Default top degree by carrier size: matrices grow like |X|^degree.
int default_degree_bound(int n);

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<long long> torsion;  // d1 | d2 | ..., each > 1
    bool operator==(const HomologyGroup&) const = default;
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;  // "0", "Z", "Z^3", "Z/3", "Z^2 + Z/2 + Z/4"
};

// Invariant factors of a finite abelian group given as a product of cyclic
// orders; drops 1s, result is a divisibility chain.
std::vector<long long> invariant_factors(std::vector<long long> orders);

struct ChainComplex {
    Theory theory;
    int max_degree = 0;
    std::vector<std::vector<std::vector<int>>> basis;  // [degree][index] = tuple
    std::vector<IntMat> boundary;  // boundary[d]: C_d -> C_{d-1}, d = 0..max_degree

    int dim(int degree) const { return static_cast<int>(basis[degree].size()); }
    int index_of(int degree, const std::vector<int>& tuple) const;  // -1 if absent

private:
    friend ChainComplex build_complex(const Rack&, Theory, int);
    std::vector<std::unordered_map<long long, int>> index_;
};

// Boundary on the free tuple module; degree <= 1 gives the zero matrix.
IntMat rack_boundary_matrix(const Rack& x, int degree);

// Throws std::invalid_argument for D/Q on a table whose degenerate span is not
// closed under the boundary (message names the first escaping tuple); the
// closure check runs on every build.
ChainComplex build_complex(const Rack& x, Theory theory, int max_degree);

// coefficients_mod = 0 means integer coefficients, otherwise Z_m.
// bound = -1 uses default_degree_bound; degree+1 above the bound throws
// std::out_of_range.
HomologyGroup homology(const Rack& x, Theory theory, int degree, int coefficients_mod,
                       int bound = -1);
HomologyGroup cohomology(const Rack& x, Theory theory, int degree, int coefficients_mod,
                         int bound = -1);

// Spanning set of the mod-m cocycles in degree n (kernel of the coboundary on
// functions of the degree-n basis), with a coboundary flag per vector.
struct CocycleBasis {
    Theory theory;
    int degree = 0;
    int mod = 0;
    std::vector<std::vector<int>> vectors;  // values on the degree-n basis
    std::vector<bool> coboundary;
};
CocycleBasis cocycle_spanning_set(const Rack& x, Theory theory, int degree, int mod,
                                  int bound = -1);

// Cycle verification and homology-class coordinates at one degree of one
// complex; SNF of the incoming boundary is cached across calls.
class ClassCalculator {
public:
    ClassCalculator(const Rack& x, Theory theory, int degree, int bound = -1);

    int dim() const { return cx_.dim(degree_); }
    int basis_index(const std::vector<int>& tuple) const { return cx_.index_of(degree_, tuple); }
    bool is_cycle(const std::vector<mpz_class>& z) const;
    std::vector<mpz_class> signature(const std::vector<mpz_class>& z) const;

private:
    int degree_;
    ChainComplex cx_;
    SmithResult snf_in_;  // SNF of boundary[degree+1]
};

std::string matrix_to_triplet_json(const IntMat& m);

}  // namespace quandlekit
