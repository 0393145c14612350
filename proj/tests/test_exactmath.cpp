#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fano/matrix.hpp"

using namespace fano;

namespace {

Mat from(std::vector<std::vector<long>> rows) {
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(rows[i][j]);
    return m;
}

Mat random_matrix(std::mt19937_64& rng, int r, int c, int span = 4) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 3);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref golden cases") {
    auto id = Mat::identity(2);
    auto rr = rref(id);
    CHECK(rr.rank == 2);
    CHECK(rr.r == id);

    auto rr2 = rref(from({{1, 2}, {2, 4}}));
    CHECK(rr2.rank == 1);
    CHECK(rr2.r == from({{1, 2}, {0, 0}}));

    Mat z(3, 5);
    auto rr3 = rref(z);
    CHECK(rr3.rank == 0);
    CHECK(rr3.r == z);
}

TEST_CASE("kernel basis golden cases") {
    CHECK(kernel_basis(Mat::identity(3)).empty());

    auto k = kernel_basis(from({{1, 2}, {2, 4}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec{Rat(-2), Rat(1)});

    auto k2 = kernel_basis(from({{1, 1, 1}}));
    CHECK(k2.size() == 2);
}

TEST_CASE("kernel vectors are exact solutions; rank-nullity on random matrices") {
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 120; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 6);
        Mat m = random_matrix(rng, r, c);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(ker.size()) == c);
        for (const auto& v : ker) {
            for (int i = 0; i < r; ++i) {
                Rat dot = 0;
                for (int j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
                CHECK(is_zero(dot));
            }
        }
    }
}

TEST_CASE("minimal polynomial golden cases") {
    CHECK(minimal_polynomial(Mat::identity(3)) == unipoly({Rat(-1), Rat(1)}));

    Mat j(2, 2);
    j.at(0, 1) = 1;
    CHECK(minimal_polynomial(j) == unipoly({Rat(0), Rat(0), Rat(1)}));

    Mat d(2, 2);
    d.at(0, 0) = 1;
    d.at(1, 1) = -1;
    CHECK(minimal_polynomial(d) == unipoly({Rat(-1), Rat(0), Rat(1)}));
}

TEST_CASE("jordan type classification") {
    Mat d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = -2;
    CHECK(jordan_type(d) == JordanType::semisimple);

    Mat e(2, 2);
    e.at(0, 1) = 1;
    CHECK(jordan_type(e) == JordanType::nilpotent);

    Mat u(2, 2);
    u.at(0, 0) = 1;
    u.at(0, 1) = 1;
    u.at(1, 1) = 1;
    CHECK(jordan_type(u) == JordanType::mixed);

    CHECK(jordan_type(Mat(3, 3)) == JordanType::zero);

    // Semisimple without rational eigenvalues (x^2 + 1 is squarefree).
    Mat rot(2, 2);
    rot.at(0, 1) = 1;
    rot.at(1, 0) = -1;
    CHECK(jordan_type(rot) == JordanType::semisimple);
}

TEST_CASE("semisimple part golden cases") {
    Mat u(2, 2);
    u.at(0, 0) = 1;
    u.at(0, 1) = 1;
    u.at(1, 1) = 1;
    CHECK(semisimple_part(u) == Mat::identity(2));

    Mat e(3, 3);
    e.at(0, 1) = 1;
    e.at(1, 2) = 1;
    CHECK(semisimple_part(e).is_zero());

    Mat d(2, 2);
    d.at(0, 0) = 3;
    d.at(1, 1) = -5;
    CHECK(semisimple_part(d) == d);
}

TEST_CASE("Jordan-Chevalley properties on random matrices") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Mat m = random_matrix(rng, n, n, 2);
        Mat s = semisimple_part(m);
        auto ts = jordan_type(s);
        CHECK((ts == JordanType::semisimple || ts == JordanType::zero));
        CHECK(is_nilpotent(m - s));
        CHECK(s * m == m * s);  // S is a polynomial in M
    }
}

TEST_CASE("matrix inverse") {
    Mat m = from({{1, 2}, {3, 5}});
    CHECK(m * inverse(m) == Mat::identity(2));
    CHECK_THROWS_AS(inverse(from({{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("unipoly printing") {
    CHECK(unipoly({Rat(-1), Rat(1)}).str() == "t - 1");
    CHECK(unipoly({Rat(0), Rat(0), Rat(1)}).str() == "t^2");
    CHECK(unipoly({Rat(-1), Rat(0), Rat(1)}).str() == "t^2 - 1");
}
