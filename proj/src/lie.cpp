#include "fano/lie.hpp"

#include <stdexcept>

namespace fano {

static void check_same_ring(const AlgElement& a, const AlgElement& b) {
    if (!(*a.ring == *b.ring)) throw std::invalid_argument("AlgElement: ring mismatch");
}

bool AlgElement::is_zero() const {
    for (const auto& m : blocks)
        if (!m.is_zero()) return false;
    return true;
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    check_same_ring(*this, o);
    AlgElement r{ring, {}};
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks.push_back(blocks[b] + o.blocks[b]);
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    check_same_ring(*this, o);
    AlgElement r{ring, {}};
    for (size_t b = 0; b < blocks.size(); ++b) r.blocks.push_back(blocks[b] - o.blocks[b]);
    return r;
}

AlgElement AlgElement::operator*(const Rat& c) const {
    AlgElement r{ring, {}};
    for (const auto& m : blocks) r.blocks.push_back(m * c);
    return r;
}

bool AlgElement::operator==(const AlgElement& o) const {
    return *ring == *o.ring && blocks == o.blocks;
}

Vec AlgElement::flatten() const {
    Vec v;
    for (const auto& m : blocks)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

Mat AlgElement::block_diagonal() const {
    int n = 0;
    for (const auto& m : blocks) n += m.rows();
    Mat d(n, n);
    int off = 0;
    for (const auto& m : blocks) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) d.at(off + i, off + j) = m.at(i, j);
        off += m.rows();
    }
    return d;
}

Rat AlgElement::trace_form(const AlgElement& o) const {
    check_same_ring(*this, o);
    Rat t = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        const Mat& x = blocks[b];
        const Mat& y = o.blocks[b];
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) t += x.at(i, j) * y.at(j, i);
    }
    return t;
}

AlgElement zero_element(const RingPtr& ring) {
    AlgElement e{ring, {}};
    for (int b = 0; b < ring->nblocks(); ++b) e.blocks.emplace_back(ring->block_size(b), ring->block_size(b));
    return e;
}

AlgElement from_flat(const RingPtr& ring, const Vec& flat) {
    AlgElement e = zero_element(ring);
    size_t k = 0;
    for (auto& m : e.blocks)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = flat[k++];
    if (k != flat.size()) throw std::invalid_argument("from_flat: length mismatch");
    return e;
}

AmbientAlgebra AmbientAlgebra::of(const RingPtr& ring) {
    AmbientAlgebra g{ring, {}};
    for (int b = 0; b < ring->nblocks(); ++b) {
        const int n = ring->block_size(b);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                AlgElement e = zero_element(ring);
                e.blocks[b].at(i, j) = 1;
                g.basis.push_back(std::move(e));
            }
        for (int k = 0; k + 1 < n; ++k) {
            AlgElement e = zero_element(ring);
            e.blocks[b].at(k, k) = 1;
            e.blocks[b].at(k + 1, k + 1) = -1;
            g.basis.push_back(std::move(e));
        }
    }
    return g;
}

AlgElement AmbientAlgebra::from_coords(const Vec& c) const {
    if (c.size() != basis.size()) throw std::invalid_argument("from_coords: length mismatch");
    AlgElement e = zero_element(ring);
    for (size_t a = 0; a < c.size(); ++a) {
        if (is_zero(c[a])) continue;
        e = e + basis[a] * c[a];
    }
    return e;
}

Polynomial act(const AlgElement& X, const Polynomial& f) {
    if (!(*X.ring == *f.ring())) throw std::invalid_argument("act: ring mismatch");
    const RingPtr& ring = f.ring();
    Polynomial out(ring);
    int v = 0;
    for (int b = 0; b < ring->nblocks(); ++b) {
        const Mat& m = X.blocks[b];
        const int n = ring->block_size(b);
        const int start = ring->block_start(b);
        for (int i = 0; i < n; ++i, ++v) {
            Polynomial df = f.derivative(start + i);
            if (df.is_zero()) continue;
            Polynomial lx(ring);  // act(X, x_i) = -sum_j X_ij x_j
            for (int j = 0; j < n; ++j)
                if (!is_zero(m.at(i, j))) lx += Polynomial::variable(ring, start + j) * (-m.at(i, j));
            if (!lx.is_zero()) out += df * lx;
        }
    }
    return out;
}

AlgElement bracket(const AlgElement& X, const AlgElement& Y) {
    check_same_ring(X, Y);
    AlgElement r{X.ring, {}};
    for (size_t b = 0; b < X.blocks.size(); ++b)
        r.blocks.push_back(X.blocks[b] * Y.blocks[b] - Y.blocks[b] * X.blocks[b]);
    return r;
}

std::array<AlgElement, 3> sl2_in_sld(int d, const RingPtr& ring) {
    if (d < 1) throw std::invalid_argument("sl2_in_sld: d must be >= 1");
    if (ring->nblocks() != 1 || ring->block_size(0) != d + 1)
        throw std::invalid_argument("sl2_in_sld: ring must have one block of size d+1");
    AlgElement E = zero_element(ring), F = zero_element(ring), H = zero_element(ring);
    for (int i = 0; i < d; ++i) {
        E.blocks[0].at(i, i + 1) = d - i;
        F.blocks[0].at(i + 1, i) = i + 1;
    }
    for (int i = 0; i <= d; ++i) H.blocks[0].at(i, i) = d - 2 * i;
    return {E, F, H};
}

std::array<AlgElement, 3> sl2_in_sld(int d) { return sl2_in_sld(d, projective_space(d)); }

}  // namespace fano
