#pragma once

#include <map>

#include "fano/lie.hpp"

namespace fano {

/// Formal SL2 character: weight -> multiplicity, symmetric under negation.
struct Character {
    std::map<int, long> mult;  // only positive multiplicities stored

    long dim() const;
    long at(int weight) const;
    bool operator==(const Character& o) const = default;
    std::string str() const;
};

/// Character of the irreducible representation of highest weight m
/// (dimension m+1): weights -m, -m+2, ..., m.
Character irr_char(int m);

Character add(const Character& a, const Character& b);

/// Weight convolution.
Character tensor(const Character& a, const Character& b);

/// Character of Sym^k: multiset sums over unordered k-selections of basis
/// weights with repetition.
Character sym_power(const Character& a, int k);

/// Highest weights of the irreducible summands (with multiplicity),
/// descending. Throws std::invalid_argument when the input is not a
/// genuine character.
std::vector<int> decompose(const Character& c);

/// Ideal of 2x2 minors of [[x0..x(d-1)],[x1..xd]] on P^d: the degree-d
/// rational normal curve [u^d : u^(d-1)v : ... : v^d].
Ideal rational_normal_curve_ideal(int d);
Ideal rational_normal_curve_ideal(int d, const RingPtr& ring);

/// Basis of the forms of the given degree on P^d killed by the sl2 triple
/// of sl2_in_sld(d); locates the trivial summands of Sym^degree(Sym^d).
std::vector<Polynomial> invariant_vectors(int d, int degree);
std::vector<Polynomial> invariant_vectors(int d, int degree, const RingPtr& ring);

}  // namespace fano
