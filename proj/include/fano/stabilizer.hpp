#pragma once

#include "fano/lie.hpp"

namespace fano {

/// Computed stabilizer subalgebra: basis in the ambient algebra, plus the
/// structure constants of the induced bracket. Construction verifies
/// bracket closure exactly and throws std::logic_error on failure.
struct Subalgebra {
    AmbientAlgebra ambient;
    std::vector<AlgElement> basis;
    std::vector<Vec> basis_coords;  // over ambient.basis, kernel-normalized

    /// structure[i][j] = coordinates of [basis_i, basis_j] over basis.
    std::vector<std::vector<Vec>> structure;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Assembles a subalgebra from elements already known to span one; verifies
/// linear independence and bracket closure.
Subalgebra make_subalgebra(AmbientAlgebra ambient, std::vector<Vec> coords);

/// Lie algebra of Aut0(ambient space; V(I)): all X in g with
/// act(X, f) in I for every generator f of I. The derivation property
/// extends invariance from generators to the whole ideal.
Subalgebra stabilizer(const Ideal& I, const AmbientAlgebra& g);

/// Intersection of the stabilizers of several ideals, assembled as one
/// linear system.
Subalgebra joint_stabilizer(const std::vector<Ideal>& ideals, const AmbientAlgebra& g);

}  // namespace fano
