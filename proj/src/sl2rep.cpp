#include "fano/sl2rep.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

long Character::dim() const {
    long d = 0;
    for (const auto& [w, m] : mult) d += m;
    return d;
}

long Character::at(int weight) const {
    auto it = mult.find(weight);
    return it == mult.end() ? 0 : it->second;
}

std::string Character::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [w, m] : mult) {
        if (!first) os << ", ";
        os << w << ":" << m;
        first = false;
    }
    os << "}";
    return os.str();
}

Character irr_char(int m) {
    if (m < 0) throw std::invalid_argument("irr_char: negative highest weight");
    Character c;
    for (int w = -m; w <= m; w += 2) c.mult[w] = 1;
    return c;
}

Character add(const Character& a, const Character& b) {
    Character c = a;
    for (const auto& [w, m] : b.mult) c.mult[w] += m;
    return c;
}

Character tensor(const Character& a, const Character& b) {
    Character c;
    for (const auto& [wa, ma] : a.mult)
        for (const auto& [wb, mb] : b.mult) c.mult[wa + wb] += ma * mb;
    return c;
}

Character sym_power(const Character& a, int k) {
    if (k < 0) throw std::invalid_argument("sym_power: negative power");
    // Weight list with multiplicity, then nondecreasing index selections.
    std::vector<int> weights;
    for (const auto& [w, m] : a.mult)
        for (long i = 0; i < m; ++i) weights.push_back(w);
    Character c;
    std::vector<size_t> pick(k, 0);
    // Enumerate nondecreasing sequences pick[0] <= ... <= pick[k-1].
    if (k == 0) {
        c.mult[0] = 1;
        return c;
    }
    if (weights.empty()) return c;
    for (;;) {
        int sum = 0;
        for (size_t i : pick) sum += weights[i];
        c.mult[sum] += 1;
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == weights.size() - 1) --pos;
        if (pos < 0) break;
        const size_t next = pick[pos] + 1;
        for (int i = pos; i < k; ++i) pick[i] = next;
    }
    return c;
}

std::vector<int> decompose(const Character& c) {
    std::map<int, long> rem = c.mult;
    auto prune = [&] {
        for (auto it = rem.begin(); it != rem.end();) {
            if (it->second == 0)
                it = rem.erase(it);
            else
                ++it;
        }
    };
    prune();
    std::vector<int> out;
    while (!rem.empty()) {
        const int top = rem.rbegin()->first;
        if (top < 0) throw std::invalid_argument("decompose: not a character (asymmetric support)");
        for (int w = -top; w <= top; w += 2) {
            auto it = rem.find(w);
            if (it == rem.end() || it->second <= 0)
                throw std::invalid_argument("decompose: not a character (negative multiplicity)");
            it->second -= 1;
        }
        prune();
        out.push_back(top);
    }
    return out;  // descending by construction
}

Ideal rational_normal_curve_ideal(int d, const RingPtr& ring) {
    if (d < 2) throw std::invalid_argument("rational_normal_curve_ideal: d >= 2");
    if (ring->nblocks() != 1 || ring->block_size(0) != d + 1)
        throw std::invalid_argument("rational_normal_curve_ideal: ring must be P^d");
    auto x = [&](int k) { return Polynomial::variable(ring, k); };
    std::vector<Polynomial> gens;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) gens.push_back(x(i) * x(j + 1) - x(i + 1) * x(j));
    return make_ideal(ring, std::move(gens));
}

Ideal rational_normal_curve_ideal(int d) { return rational_normal_curve_ideal(d, projective_space(d)); }

std::vector<Polynomial> invariant_vectors(int d, int degree, const RingPtr& ring) {
    if (d < 1 || degree < 1) throw std::invalid_argument("invariant_vectors: d, degree >= 1");
    auto triple = sl2_in_sld(d, ring);
    const auto mons = graded_monomials(ring, {degree});
    std::vector<Vec> rows;
    for (const auto& X : triple) {
        std::vector<Vec> images;
        images.reserve(mons.size());
        for (const auto& m : mons)
            images.push_back(coordinates(act(X, Polynomial::term(ring, Rat(1), m)), mons));
        for (size_t r = 0; r < mons.size(); ++r) {
            Vec row(mons.size());
            bool nonzero = false;
            for (size_t c = 0; c < mons.size(); ++c) {
                row[c] = images[c][r];
                nonzero = nonzero || !is_zero(row[c]);
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    std::vector<Polynomial> out;
    if (rows.empty()) return out;
    for (const auto& v : kernel_basis(Mat::from_rows(rows))) {
        Polynomial p(ring);
        for (size_t j = 0; j < mons.size(); ++j)
            if (!is_zero(v[j])) p += Polynomial::term(ring, v[j], mons[j]);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Polynomial> invariant_vectors(int d, int degree) {
    return invariant_vectors(d, degree, projective_space(d));
}

}  // namespace fano
