#include "fano/stabilizer.hpp"

#include <stdexcept>

namespace fano {

namespace {

// Residual of v modulo the rows of a reduced row-echelon matrix.
Vec reduce_mod(const Rref& rr, Vec v) {
    for (int i = 0; i < rr.rank; ++i) {
        const int p = rr.pivot_cols[i];
        if (is_zero(v[p])) continue;
        const Rat f = v[p];
        for (int j = 0; j < rr.r.cols(); ++j)
            if (!is_zero(rr.r.at(i, j))) v[j] -= f * rr.r.at(i, j);
    }
    return v;
}

}  // namespace

Subalgebra make_subalgebra(AmbientAlgebra ambient, std::vector<Vec> coords) {
    Subalgebra s;
    s.ambient = std::move(ambient);
    s.basis_coords = std::move(coords);
    for (const auto& c : s.basis_coords) s.basis.push_back(s.ambient.from_coords(c));

    const int k = s.dim();
    if (k == 0) return s;

    std::vector<Vec> flat;
    for (const auto& b : s.basis) flat.push_back(b.flatten());
    if (span_rank(flat) != k) throw std::logic_error("make_subalgebra: basis not linearly independent");

    // Solve [b_i, b_j] = sum_l c_l b_l for all pairs at once: columns of A are
    // the flattened basis, targets are the flattened brackets.
    const int n = static_cast<int>(flat[0].size());
    Mat aug(n, k + k * k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r) aug.at(r, c) = flat[c][r];
    std::vector<std::vector<AlgElement>> brk(k);
    for (int i = 0; i < k; ++i) {
        brk[i].reserve(k);
        for (int j = 0; j < k; ++j) brk[i].push_back(bracket(s.basis[i], s.basis[j]));
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Vec t = brk[i][j].flatten();
            for (int r = 0; r < n; ++r) aug.at(r, k + i * k + j) = t[r];
        }
    Rref rr = rref(aug);
    // Closure requires every pivot to sit in the first k columns.
    for (int p : rr.pivot_cols)
        if (p >= k)
            throw std::logic_error("subalgebra not closed under bracket: a commutator leaves the span");

    s.structure.assign(k, std::vector<Vec>(k, Vec(k, Rat(0))));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Vec c(k, Rat(0));
            for (int row = 0; row < rr.rank; ++row) c[rr.pivot_cols[row]] = rr.r.at(row, k + i * k + j);
            // Exactness check: the solution must reproduce the bracket.
            AlgElement rebuilt = zero_element(s.ambient.ring);
            for (int l = 0; l < k; ++l)
                if (!is_zero(c[l])) rebuilt = rebuilt + s.basis[l] * c[l];
            if (!(rebuilt == brk[i][j]))
                throw std::logic_error("subalgebra closure: inconsistent structure constants");
            s.structure[i][j] = std::move(c);
        }
    return s;
}

Subalgebra joint_stabilizer(const std::vector<Ideal>& ideals, const AmbientAlgebra& g) {
    const int dim = g.dim();
    std::vector<Vec> rows;
    for (const auto& I : ideals) {
        if (!(*I.ring == *g.ring)) throw std::invalid_argument("stabilizer: ideal over a different ring");
        for (const auto& gen : I.generators) {
            auto deg = gen.multidegree();
            if (!deg) throw std::invalid_argument("stabilizer: inhomogeneous generator");
            const auto mons = graded_monomials(I.ring, *deg);
            const Rref piece = ideal_graded_matrix(I, *deg);
            // Residuals of act(b_a, gen) modulo I_deg; X = sum c_a b_a lies in
            // the stabilizer iff sum c_a residual_a = 0 coordinatewise.
            std::vector<Vec> residuals;
            residuals.reserve(dim);
            for (const auto& b : g.basis)
                residuals.push_back(reduce_mod(piece, coordinates(act(b, gen), mons)));
            for (size_t m = 0; m < mons.size(); ++m) {
                Vec row(dim);
                bool nonzero = false;
                for (int a = 0; a < dim; ++a) {
                    row[a] = residuals[a][m];
                    nonzero = nonzero || !is_zero(row[a]);
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    std::vector<Vec> coords;
    if (rows.empty()) {
        // No constraints: the full ambient algebra.
        for (int a = 0; a < dim; ++a) {
            Vec c(dim, Rat(0));
            c[a] = 1;
            coords.push_back(std::move(c));
        }
    } else {
        coords = kernel_basis(Mat::from_rows(rows));
    }
    return make_subalgebra(g, std::move(coords));
}

Subalgebra stabilizer(const Ideal& I, const AmbientAlgebra& g) { return joint_stabilizer({I}, g); }

}  // namespace fano
