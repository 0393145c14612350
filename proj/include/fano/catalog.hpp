#pragma once

#include <map>
#include <optional>

#include "fano/group_expr.hpp"
#include "fano/sl2rep.hpp"

namespace fano {

/// One executable configuration: an ambient product of projective spaces,
/// the invariant ideals, and the expected connected stabilizer.
struct ModelCase {
    std::string name;
    RingPtr ring;
    std::vector<Ideal> ideals;
    std::optional<GroupExpr> expected;  // nullopt: expected finite (dim 0)
    int expected_dim = 0;
    std::optional<JordanType> expected_jordan;  // for one-dimensional cases
    std::map<std::string, Rat> params;
    std::string note;
};

/// Roster lookup. Parameterized cases: twisted_quartic_pencil (lambda,
/// default 2, lambda != 0, 1) and bidegree_1n (n, default 2, 0 <= n <= 8).
ModelCase build(const std::string& name, const std::map<std::string, Rat>& params = {});

const std::vector<std::string>& roster_names();

struct Report {
    std::string name;
    std::map<std::string, Rat> params;
    LieSignature sig;
    std::optional<JordanType> jordan;
    bool pass = false;
    std::string detail;
    double wall_ms = 0.0;

    std::string param_str() const;
};

Report verify(const ModelCase& c);

/// Runs the whole roster, with the lambda grid {-3,-2,-1,-1/3,1/2,2,3} for
/// twisted_quartic_pencil and n = 0..4 for bidegree_1n. Cases are
/// independent pure computations; jobs > 1 runs them concurrently.
std::vector<Report> verify_all(int jobs = 1);

/// Determinant of x0*M0 + x1*M1 + x2*M2 where Mi is the symmetric Gram
/// matrix of the quadratic form Qi in three variables; a cubic form in
/// x0, x1, x2 over the returned ring projective_space(2, "x").
Polynomial discriminant_cubic(const Polynomial& q0, const Polynomial& q1, const Polynomial& q2);

/// Exact polynomial division: c / l if it divides, nullopt otherwise.
std::optional<Polynomial> exact_quotient(const Polynomial& c, const Polynomial& l);

bool linear_factor_divides(const Polynomial& line, const Polynomial& cubic);

/// Rank of the symmetric Gram matrix of a quadratic form in one block.
int conic_rank(const Polynomial& q);

}  // namespace fano
