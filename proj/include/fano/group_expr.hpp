#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fano/signature.hpp"

namespace fano {

/// Symbolic expression tree for connected-group notation:
///   atoms   Ga^k, Gm^k, GL(n), SL(n), PGL(n), SO(n), PSO(n), B,
///           PGL(n;k1,...,kr) (parabolic), PSO(n;k) (isotropic-flag
///           parabolic), PGL(2,2), PGL(2,2;1), AutP1112
///   forms   A x B (product), U : R (semidirect, U unipotent),
///           E / Gm (central torus quotient), E / finite.
struct GroupExpr {
    enum class Kind {
        Ga,            // n = power
        Gm,            // n = power
        GL,            // n
        SL,            // n
        PGL,           // n
        SO,            // n
        PSO,           // n
        Borel,         // B = PGL(2;1)
        Parabolic,     // PGL(n; flag)
        PSOParabolic,  // PSO(n; flag[0])
        PGL22,         // (GL2 x GL2)/Gm
        PGL22_1,       // (GL2 x upper-triangular GL2)/Gm
        AutP1112,      // Ga^6 : ((GL3 x Gm)/Gm)
        Product,
        Semidirect,
        QuotientGm,
        QuotientFinite,
    };

    Kind kind;
    int n = 0;
    std::vector<int> flag;
    std::vector<GroupExpr> children;

    bool operator==(const GroupExpr& o) const;
    std::string str() const;
};

GroupExpr parse_group(const std::string& text);

/// Signature fields derivable from the notation alone; fields the notation
/// does not pin down (e.g. the derived algebra of a generic semidirect
/// product, whose weights the notation omits) stay unset.
struct ExpectedSignature {
    std::optional<int> dim, derived_dim, radical_dim, unipotent_dim, toral_rank, killing_rank;
    std::optional<std::vector<SimpleType>> levi;
    std::optional<bool> reductive, abelian;

    std::string str() const;
};

ExpectedSignature expected_signature(const GroupExpr& e);

/// Independent dimension count: atom dimensions summed over the tree with
/// one subtracted per central Gm quotient. Cross-checks
/// expected_signature(e).dim.
int flat_dimension(const GroupExpr& e);

struct MatchReport {
    struct Field {
        std::string name;
        std::string expected;
        std::string actual;
        bool ok;
    };
    std::vector<Field> fields;
    bool pass = true;
    std::string str() const;
};

/// Compares every specified expected field against the computed signature.
MatchReport match(const LieSignature& sig, const GroupExpr& e);

}  // namespace fano
