#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fano/sl2rep.hpp"

using namespace fano;

TEST_CASE("irreducible characters") {
    CHECK(irr_char(0).mult == std::map<int, long>{{0, 1}});
    CHECK(irr_char(1).mult == std::map<int, long>{{-1, 1}, {1, 1}});
    CHECK(irr_char(4).mult == std::map<int, long>{{-4, 1}, {-2, 1}, {0, 1}, {2, 1}, {4, 1}});
    CHECK(irr_char(4).dim() == 5);
}

TEST_CASE("tensor and symmetric powers") {
    CHECK(decompose(tensor(irr_char(1), irr_char(1))) == std::vector<int>{2, 0});
    CHECK(sym_power(irr_char(1), 2) == irr_char(2));
    CHECK(sym_power(irr_char(4), 2).dim() == 15);
    CHECK(sym_power(irr_char(2), 0).dim() == 1);
}

TEST_CASE("decompose: the Sym^2(Sym^4) plethysm") {
    auto parts = decompose(sym_power(irr_char(4), 2));
    CHECK(parts == std::vector<int>{8, 4, 0});
    long total = 0;
    for (int m : parts) total += m + 1;
    CHECK(total == 15);
    CHECK(decompose(irr_char(3)) == std::vector<int>{3});
}

TEST_CASE("decompose rejects non-characters") {
    Character bad;
    bad.mult[1] = 1;  // no matching weight -1
    CHECK_THROWS(decompose(bad));
    Character bad2;
    bad2.mult[2] = 1;
    bad2.mult[-2] = 1;  // missing weight 0
    CHECK_THROWS(decompose(bad2));
}

TEST_CASE("decompose round-trips on random sums of irreducibles") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 120; ++trial) {
        std::map<int, int> chosen;  // highest weight -> multiplicity
        Character c;
        int parts = 1 + static_cast<int>(rng() % 4);
        for (int p = 0; p < parts; ++p) {
            int m = static_cast<int>(rng() % 9);
            chosen[m] += 1;
            c = add(c, irr_char(m));
        }
        auto out = decompose(c);
        std::map<int, int> got;
        for (int m : out) got[m] += 1;
        CHECK(got == chosen);
        long total = 0;
        for (int m : out) total += m + 1;
        CHECK(total == c.dim());
    }
}

TEST_CASE("rational normal curve ideals") {
    Ideal tc = rational_normal_curve_ideal(3);
    REQUIRE(tc.generators.size() == 3);
    auto ring = tc.ring;
    CHECK(tc.generators[0] == parse_polynomial(ring, "x0*x2 - x1^2"));
    CHECK(tc.generators[1] == parse_polynomial(ring, "x0*x3 - x1*x2"));
    CHECK(tc.generators[2] == parse_polynomial(ring, "x1*x3 - x2^2"));

    CHECK(rational_normal_curve_ideal(4).generators.size() == 6);

    // Every generator vanishes under x_i -> u^(d-i) v^i.
    for (int d : {2, 3, 4, 5}) {
        Ideal I = rational_normal_curve_ideal(d);
        auto uv = product_of_projective_spaces({1}, {"u"});  // k[u0, u1]
        std::vector<Polynomial> images;
        for (int i = 0; i <= d; ++i) {
            Polynomial m = Polynomial::constant(uv, Rat(1));
            for (int k = 0; k < d - i; ++k) m = m * Polynomial::variable(uv, 0);
            for (int k = 0; k < i; ++k) m = m * Polynomial::variable(uv, 1);
            images.push_back(m);
        }
        for (const auto& g : I.generators) CHECK(g.compose(images).is_zero());
    }
}

TEST_CASE("invariant vectors: the quadric invariant of Sym^4") {
    auto inv = invariant_vectors(4, 2);
    REQUIRE(inv.size() == 1);
    auto ring = inv[0].ring();
    // Weight-zero monomials only: x0*x4, x1*x3, x2^2.
    for (const auto& [m, c] : inv[0].terms()) {
        int weight = 0;
        for (int i = 0; i <= 4; ++i) weight += m.e[i] * (4 - 2 * i);
        CHECK(weight == 0);
    }
    // Rescaled to coefficient 1 on x2^2 it is exactly
    // x2^2 + 1/3 x0 x4 - 4/3 x1 x3, i.e. lambda = -1/3 in the pencil
    // z^2 - lambda xw - (1-lambda) yt.
    Monomial z2;
    z2.e = {0, 0, 2, 0, 0};
    Rat c = inv[0].coeff(z2);
    REQUIRE(!is_zero(c));
    Polynomial normalized = inv[0] * (1 / c);
    CHECK(normalized == parse_polynomial(ring, "x2^2 + 1/3*x0*x4 - 4/3*x1*x3"));
}

TEST_CASE("invariant vectors: discriminant conic of Sym^2 and empty cases") {
    auto inv22 = invariant_vectors(2, 2);
    REQUIRE(inv22.size() == 1);
    // The unique invariant of binary quadratics: x1^2 - c * x0 x2 pattern.
    auto ring = inv22[0].ring();
    Monomial m11;
    m11.e = {0, 2, 0};
    CHECK(!is_zero(inv22[0].coeff(m11)));

    CHECK(invariant_vectors(1, 1).empty());
    CHECK(invariant_vectors(1, 3).empty());
}

TEST_CASE("invariant dimension equals the multiplicity of the trivial summand") {
    for (int d = 1; d <= 4; ++d)
        for (int k = 1; k <= (d <= 2 ? 4 : 3); ++k) {
            auto parts = decompose(sym_power(irr_char(d), k));
            long zeros = 0;
            for (int m : parts)
                if (m == 0) ++zeros;
            CHECK(static_cast<long>(invariant_vectors(d, k).size()) == zeros);
        }
}
