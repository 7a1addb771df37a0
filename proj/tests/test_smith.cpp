#include <random>

#include "doctest.h"
#include "quandlekit/smith.hpp"

using namespace quandlekit;

namespace {

void check_snf(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u.mul(m).mul(s.v) == s.d);
    int mn = std::min(m.rows, m.cols);
    REQUIRE(static_cast<int>(s.diagonal.size()) == mn);
    for (int i = 0; i < mn; ++i) {
        CHECK(s.diagonal[i] >= 0);
        CHECK(s.d.at(i, i) == s.diagonal[i]);
        if (i + 1 < mn && s.diagonal[i + 1] != 0) {
            REQUIRE(s.diagonal[i] != 0);
            CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
    }
    for (int i = 0; i < s.d.rows; ++i)
        for (int j = 0; j < s.d.cols; ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    int rank = 0;
    for (const auto& d : s.diagonal)
        if (d != 0) ++rank;
    CHECK(s.rank == rank);
}

}  // namespace

TEST_CASE("known normal forms") {
    IntMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    SmithResult s = smith_normal_form(m);
    CHECK(s.diagonal == std::vector<mpz_class>{2, 4});
    check_snf(m);

    IntMat zero(3, 2);
    SmithResult z = smith_normal_form(zero);
    CHECK(z.rank == 0);
    CHECK(z.diagonal == std::vector<mpz_class>{0, 0});

    IntMat one(1, 1);
    one.at(0, 0) = -7;
    CHECK(smith_normal_form(one).diagonal == std::vector<mpz_class>{7});
}

TEST_CASE("seeded random matrices recompose") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat m(dim(rng), dim(rng));
        for (auto& v : m.a) v = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("kernel spanning mod m") {
    IntMat m(1, 1);
    m.at(0, 0) = 2;
    SmithResult s = smith_normal_form(m);
    auto k4 = kernel_spanning_mod(s, 4);
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == std::vector<int>{2});
    CHECK(kernel_spanning_mod(s, 3).empty());  // 2 invertible mod 3

    // x + y = 0 mod anything
    IntMat row(1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    auto k = kernel_spanning_mod(smith_normal_form(row), 5);
    REQUIRE(k.size() == 1);
    CHECK((k[0][0] + k[0][1]) % 5 == 0);
    CHECK(k[0] != std::vector<int>{0, 0});
}

TEST_CASE("image membership mod m") {
    IntMat m(2, 1);
    m.at(0, 0) = 2;
    m.at(1, 0) = 0;
    SmithResult s = smith_normal_form(m);
    CHECK(in_image_mod(s, {2, 0}, 4));
    CHECK_FALSE(in_image_mod(s, {1, 0}, 4));
    CHECK(in_image_mod(s, {1, 0}, 3));        // 2 invertible mod 3
    CHECK_FALSE(in_image_mod(s, {0, 1}, 4));  // second row outside the image
}

TEST_CASE("cokernel class signatures") {
    IntMat m(1, 1);
    m.at(0, 0) = 3;
    SmithResult s = smith_normal_form(m);
    CHECK(class_signature(s, {4}) == std::vector<mpz_class>{1});
    CHECK(class_signature(s, {6}) == std::vector<mpz_class>{0});

    // free cokernel coordinate is exact
    IntMat zero(1, 1);
    SmithResult z = smith_normal_form(zero);
    CHECK(class_signature(z, {-5}) == std::vector<mpz_class>{-5});
}
