#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/group_expr.hpp"

using namespace fano;

namespace {

Ideal rnc_ideal(const RingPtr& ring, int d) {
    std::vector<Polynomial> gens;
    auto x = [&](int k) { return Polynomial::variable(ring, k); };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) gens.push_back(x(i) * x(j + 1) - x(i + 1) * x(j));
    return make_ideal(ring, std::move(gens));
}

LieSignature sig_of(const std::vector<Ideal>& ideals, const RingPtr& ring) {
    auto g = AmbientAlgebra::of(ring);
    return signature(joint_stabilizer(ideals, g));
}

}  // namespace

TEST_CASE("signature of the twisted cubic stabilizer") {
    auto ring = projective_space(3);
    LieSignature s = sig_of({rnc_ideal(ring, 3)}, ring);
    CHECK(s.dim == 3);
    CHECK(s.killing_rank == 3);
    CHECK(s.levi == std::vector<SimpleType>{SimpleType::A1});
    CHECK(s.reductive);
    CHECK(s.radical_dim == 0);
}

TEST_CASE("signature of the plane-cubic stabilizer: Ga^3 : Gm") {
    auto ring = projective_space(3);
    Ideal I = make_ideal(ring, {parse_polynomial(ring, "x0"),
                                parse_polynomial(ring, "x1^3 + x2^3 + x3^3")});
    LieSignature s = sig_of({I}, ring);
    CHECK(s.dim == 4);
    CHECK(s.unipotent_dim == 3);
    CHECK(s.toral_rank == 1);
    CHECK(s.radical_dim == 4);
    CHECK(!s.reductive);
    CHECK(s.levi.empty());
    CHECK(match(s, parse_group("Ga^3 : Gm")).pass);
}

TEST_CASE("signature of an abelian torus line") {
    auto ring = projective_space(1);
    // Stabilizer of the two coordinate points is the diagonal torus.
    Ideal p = make_ideal(ring, {Polynomial::variable(ring, 0)});
    Ideal q = make_ideal(ring, {Polynomial::variable(ring, 1)});
    LieSignature s = sig_of({p, q}, ring);
    CHECK(s.dim == 1);
    CHECK(s.toral_rank == 1);
    CHECK(s.abelian);
    CHECK(s.reductive);
    CHECK(match(s, parse_group("Gm")).pass);
}

TEST_CASE("hyperplane stabilizer matches PGL(4;1)") {
    auto ring = projective_space(3);
    Ideal I = make_ideal(ring, {parse_polynomial(ring, "x0")});
    LieSignature s = sig_of({I}, ring);
    CHECK(s.dim == 12);
    CHECK(s.unipotent_dim == 3);
    CHECK(s.derived_dim == 11);
    CHECK(s.levi == std::vector<SimpleType>{SimpleType::A2});
    auto rep = match(s, parse_group("PGL(4;1)"));
    CHECK(rep.pass);
}

TEST_CASE("group expression parsing and printing round-trips") {
    for (const char* text :
         {"PGL(2)", "Ga^3 : Gm", "Ga^3 : (GL(2) x Gm)", "(GL(2) x GL(2)) / Gm", "PGL(4;2,1)",
          "PSO(6;1)", "B x PGL(2)", "PGL(2) x B x B", "Gm^2", "AutP1112", "PGL(2,2)", "PGL(2,2;1)",
          "Ga^4 : ((SO(4) x Gm) / finite)", "PGL(2) x PGL(2) x PGL(2)"}) {
        GroupExpr e = parse_group(text);
        CHECK(parse_group(e.str()) == e);
    }
    CHECK_THROWS(parse_group("PGL(2"));
    CHECK_THROWS(expected_signature(parse_group("Gm : Gm")));  // left side must be unipotent
    CHECK_THROWS(parse_group("Q(3)"));
}

TEST_CASE("expected signatures: golden atoms") {
    auto pgl2 = expected_signature(parse_group("PGL(2)"));
    CHECK(*pgl2.dim == 3);
    CHECK(*pgl2.killing_rank == 3);
    CHECK(*pgl2.levi == std::vector<SimpleType>{SimpleType::A1});
    CHECK(*pgl2.reductive);

    auto p42 = expected_signature(parse_group("PGL(4;2)"));
    CHECK(*p42.dim == 11);
    CHECK(*p42.unipotent_dim == 4);

    auto p421 = expected_signature(parse_group("PGL(4;2,1)"));
    CHECK(*p421.dim == 10);
    CHECK(*p421.unipotent_dim == 5);

    auto pso61 = expected_signature(parse_group("PSO(6;1)"));
    CHECK(*pso61.dim == 11);
    CHECK(*pso61.unipotent_dim == 4);
    CHECK(*pso61.levi == std::vector<SimpleType>{SimpleType::A1, SimpleType::A1});
    CHECK(*pso61.toral_rank == 1);

    auto aut = expected_signature(parse_group("AutP1112"));
    CHECK(*aut.dim == 15);
    CHECK(*aut.unipotent_dim == 6);

    auto psop52 = expected_signature(parse_group("PSO(5;2)"));
    CHECK(*psop52.dim == 7);

    auto b = expected_signature(parse_group("B"));
    CHECK(*b.dim == 2);
    CHECK(*b.unipotent_dim == 1);
    CHECK(*b.toral_rank == 1);

    // Semidirect leaves the weight-dependent fields unspecified.
    auto sd = expected_signature(parse_group("Ga^3 : (B x Gm)"));
    CHECK(*sd.dim == 6);
    CHECK(!sd.derived_dim.has_value());
    CHECK(!sd.killing_rank.has_value());
    CHECK(*sd.unipotent_dim == 4);
    CHECK(*sd.toral_rank == 2);
}

TEST_CASE("expected signature dimension agrees with the flat atom count") {
    for (const char* text :
         {"PGL(2)", "Ga^3 : Gm", "Ga^3 : (GL(2) x Gm)", "(GL(2) x GL(2)) / Gm", "PGL(4;2,1)",
          "PSO(6;1)", "B x PGL(2)", "PGL(2) x B x B", "AutP1112", "PGL(2,2;1)", "GL(2)",
          "Ga^4 : (GL(2) x Gm)", "PGL(2) x PGL(3;1)", "Gm x GL(2)", "PGL(2) x Gm^2"}) {
        GroupExpr e = parse_group(text);
        CHECK(*expected_signature(e).dim == flat_dimension(e));
    }
}

TEST_CASE("match does not separate groups with equal Lie algebras") {
    // GL(2), Gm x PGL(2), SL(2) x Gm all have the same signature fields.
    // Stabilizer of a disjoint point and line in P^2 realizes it.
    auto ring = projective_space(2);
    Ideal line = make_ideal(ring, {parse_polynomial(ring, "x0")});
    Ideal pt = make_ideal(ring, {parse_polynomial(ring, "x1"), parse_polynomial(ring, "x2")});
    LieSignature s = sig_of({line, pt}, ring);
    CHECK(s.dim == 4);
    CHECK(match(s, parse_group("GL(2)")).pass);
    CHECK(match(s, parse_group("Gm x PGL(2)")).pass);
    CHECK(match(s, parse_group("SL(2) x Gm")).pass);
}

TEST_CASE("match failure: nilpotent line vs Gm") {
    auto ring = projective_space(2);
    // Stabilizer of the pair of osculating conics is one-dimensional nilpotent.
    auto f = parse_polynomial(ring, "(x1*x2 - x0^2)*(x1*x2 - x0^2 + x2^2)");
    LieSignature s = sig_of({make_ideal(ring, {f})}, ring);
    CHECK(s.dim == 1);
    CHECK(s.unipotent_dim == 1);
    auto rep = match(s, parse_group("Gm"));
    CHECK(!rep.pass);
    CHECK(match(s, parse_group("Ga")).pass);
}

TEST_CASE("conic on quadric: dim 4 with Levi A1 and one central torus") {
    auto ring = projective_space(4);
    Ideal quadric = make_ideal(ring, {parse_polynomial(ring, "x0*x1 + x2^2 + x3^2 + x4^2")});
    Ideal conic = make_ideal(ring, {parse_polynomial(ring, "x0"), parse_polynomial(ring, "x1"),
                                    parse_polynomial(ring, "x2^2 + x3^2 + x4^2")});
    LieSignature s = sig_of({quadric, conic}, ring);
    CHECK(s.dim == 4);
    CHECK(s.levi == std::vector<SimpleType>{SimpleType::A1});
    CHECK(s.toral_rank == 1);
    CHECK(s.reductive);
    CHECK(match(s, parse_group("PGL(2) x Gm")).pass);
}

TEST_CASE("signature is invariant under basis change of the subalgebra") {
    auto ring = projective_space(3);
    auto g = AmbientAlgebra::of(ring);
    auto s = joint_stabilizer({rnc_ideal(ring, 3)}, g);
    // Re-run through make_subalgebra with a mixed basis.
    std::vector<Vec> mixed = s.basis_coords;
    for (size_t j = 0; j < mixed[0].size(); ++j) mixed[0][j] = s.basis_coords[0][j] + s.basis_coords[1][j] * Rat(3);
    for (size_t j = 0; j < mixed[1].size(); ++j) mixed[1][j] = s.basis_coords[1][j] * Rat(-2);
    auto t = make_subalgebra(g, mixed);
    CHECK(signature(s) == signature(t));
}
