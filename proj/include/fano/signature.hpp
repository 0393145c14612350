#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fano/stabilizer.hpp"

namespace fano {

enum class SimpleType { A1, A2, A3, B2 };

std::string simple_type_name(SimpleType t);
int simple_type_dim(SimpleType t);
int simple_type_rank(SimpleType t);

/// Structural fingerprint of a Lie algebra given with a faithful defining
/// representation. toral_rank is the dimension of a maximal torus of the
/// radical (the Levi's Cartan is not counted; its rank is implied by the
/// component list).
struct LieSignature {
    int dim = 0;
    int derived_dim = 0;
    int radical_dim = 0;
    int unipotent_dim = 0;
    int toral_rank = 0;
    int killing_rank = 0;
    std::vector<SimpleType> levi;  // sorted multiset
    bool reductive = true;
    bool abelian = true;

    bool operator==(const LieSignature& o) const = default;
    std::string str() const;
};

/// Thrown when a validation step refutes a structural heuristic (a
/// trace-form kernel element that is not nilpotent, an unrecognized Levi
/// dimension). Never silently accepted.
struct SignatureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Computes the fingerprint by exact span arithmetic:
///  - derived algebra from the stored structure constants;
///  - radical as the Killing-orthogonal complement of [g,g] in g;
///  - unipotent part as the kernel of the defining-representation trace
///    form on the radical, every kernel basis element checked nilpotent;
///  - toral rank = radical_dim - unipotent_dim, cross-checked on abelian
///    radicals via semisimple parts;
///  - Levi components identified by dimension.
LieSignature signature(const Subalgebra& s);

}  // namespace fano
