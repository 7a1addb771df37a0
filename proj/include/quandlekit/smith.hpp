#pragma once
#include <gmpxx.h>

#include <vector>

namespace quandlekit {

// Dense arbitrary-precision integer matrix, row-major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    IntMat mul(const IntMat& other) const;
    bool operator==(const IntMat& other) const = default;
};

// u * input * v = d with u, v unimodular; diagonal entries nonnegative and
// forming a divisibility chain (zeros trailing).
struct SmithResult {
    IntMat d, u, v;
    std::vector<mpz_class> diagonal;  // length min(rows, cols), includes zeros
    int rank = 0;                     // count of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMat& m);

// Spanning set of { x : m_mat x = 0 mod mod } from the SNF of m_mat; vectors
// have entries in [0, mod).  Zero vectors are dropped.
std::vector<std::vector<int>> kernel_spanning_mod(const SmithResult& s, int mod);

// Does w lie in the mod-mod column span of the decomposed matrix?
bool in_image_mod(const SmithResult& s, const std::vector<int>& w, int mod);

// Coordinates of the class of z in coker(decomposed matrix): entry i is
// (u z)_i reduced mod diagonal[i] when that is nonzero, exact otherwise.
std::vector<mpz_class> class_signature(const SmithResult& s, const std::vector<mpz_class>& z);

}  // namespace quandlekit
