#pragma once

#include <array>

#include "fano/polyring.hpp"

namespace fano {

/// Element of a product of special-linear Lie algebras acting on the
/// ring: one traceless square matrix per variable block.
struct AlgElement {
    RingPtr ring;
    std::vector<Mat> blocks;

    bool is_zero() const;
    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator*(const Rat& c) const;
    bool operator==(const AlgElement& o) const;

    /// Concatenated matrix entries, block-major; the coordinate system in
    /// which subalgebra span arithmetic runs.
    Vec flatten() const;

    /// Block-diagonal matrix of the defining representation; feeds the
    /// Jordan tests and the trace form.
    Mat block_diagonal() const;

    Rat trace_form(const AlgElement& o) const;  // sum of blockwise tr(XY)
};

AlgElement zero_element(const RingPtr& ring);
AlgElement from_flat(const RingPtr& ring, const Vec& flat);

/// Lie(Aut0) of the product of projective spaces: sl(n_b) per block.
/// Basis per block: off-diagonal e_ij (row-major), then diagonal
/// h_k = E_kk - E_(k+1)(k+1).
struct AmbientAlgebra {
    RingPtr ring;
    std::vector<AlgElement> basis;

    static AmbientAlgebra of(const RingPtr& ring);
    int dim() const { return static_cast<int>(basis.size()); }
    AlgElement from_coords(const Vec& c) const;
};

/// Derivation action on coordinate functions: act(X, x_i) = -sum_j X_ij x_j
/// within the block of x_i, extended by the Leibniz rule. Preserves
/// multidegree.
Polynomial act(const AlgElement& X, const Polynomial& f);

AlgElement bracket(const AlgElement& X, const AlgElement& Y);

/// The sl2 triple (E, F, H) acting on P^d = P(Sym^d of the defining
/// representation), in the coordinates dual to the monomial curve
/// [u^d : u^(d-1)v : ... : v^d]:
///   E: superdiagonal (d, d-1, ..., 1), F: subdiagonal (1, 2, ..., d),
///   H = diag(d, d-2, ..., -d).
/// Satisfies [H,E] = 2E, [H,F] = -2F, [E,F] = H, and the derivation
/// action preserves the ideal of the curve.
std::array<AlgElement, 3> sl2_in_sld(int d);

/// Same triple over a caller-supplied single-block ring of size d+1.
std::array<AlgElement, 3> sl2_in_sld(int d, const RingPtr& ring);

}  // namespace fano
