#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fano/matrix.hpp"
#include "fano/rational.hpp"

namespace fano {

/// Variable blocks of a multigraded polynomial ring, one block per
/// projective factor. Variable names are globally unique.
struct RingSpec {
    struct Block {
        std::string name;
        std::vector<std::string> vars;
    };

    std::vector<Block> blocks;

    int nblocks() const { return static_cast<int>(blocks.size()); }
    int nvars() const;
    int block_size(int b) const { return static_cast<int>(blocks[b].vars.size()); }
    int block_start(int b) const;
    int block_of_var(int v) const;
    const std::string& var_name(int v) const;
    int var_index(const std::string& name) const;  // -1 if absent

    bool operator==(const RingSpec& o) const;
};

using RingPtr = std::shared_ptr<const RingSpec>;

/// Validates invariants (nonempty blocks, globally unique names) and freezes.
RingPtr make_ring(std::vector<RingSpec::Block> blocks);

/// k[x0..xdim] with one block.
RingPtr projective_space(int dim, const std::string& prefix = "x");

/// One block per factor: prefix0, prefix1, ... with dims[i]+1 variables each.
RingPtr product_of_projective_spaces(const std::vector<int>& dims,
                                     const std::vector<std::string>& prefixes);

/// Exponent vector over all ring variables (block-major).
struct Monomial {
    std::vector<int> e;

    int total_degree() const;
    bool operator==(const Monomial& o) const = default;
};

/// Canonical term order: block-major lexicographic, largest first
/// (x0^d precedes x0^(d-1)*x1, ...). Fixed once so that golden outputs
/// are reproducible bit-exactly.
struct MonOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.e > b.e; }
};

/// One non-negative integer per block.
using Multidegree = std::vector<int>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial variable(const RingPtr& ring, int var);
    static Polynomial variable(const RingPtr& ring, const std::string& name);
    static Polynomial constant(const RingPtr& ring, const Rat& c);
    static Polynomial term(const RingPtr& ring, const Rat& c, const Monomial& m);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rat, MonOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    Rat coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    /// Formal partial derivative with respect to one variable.
    Polynomial derivative(int var) const;

    /// Multidegree of a monomial of this ring.
    Multidegree degree_of(const Monomial& m) const;

    /// Common multidegree of all terms, or nullopt if inhomogeneous.
    /// Throws std::invalid_argument on the zero polynomial.
    std::optional<Multidegree> multidegree() const;

    bool is_multihomogeneous() const;

    /// Substitutes each variable by the polynomial images[v] (over the
    /// image ring). All images must share one ring.
    Polynomial compose(const std::vector<Polynomial>& images) const;

    /// x_i -> sum_j M_{ij} x_j blockwise; block_maps[b] is square of the
    /// block size.
    Polynomial linear_substitution(const std::vector<Mat>& block_maps) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);

    RingPtr ring_;
    std::map<Monomial, Rat, MonOrder> terms_;
};

/// Parses the textual syntax used by the CLI and the tests, e.g.
/// "3/2*x0^2*y1 - y0*y2". Round-trips with Polynomial::str().
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// All monomials of the given multidegree, in the canonical order.
std::vector<Monomial> graded_monomials(const RingPtr& ring, const Multidegree& d);

/// Coordinates of f in the basis graded_monomials(ring, d); throws if f
/// has a term outside that graded piece.
Vec coordinates(const Polynomial& f, const std::vector<Monomial>& basis);

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;
};

/// Validates that every generator is nonzero and multihomogeneous.
Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> generators);

/// Row-reduced basis of the graded piece spanned by { m * g : g generator,
/// multidegree(m*g) = d }, against the canonical monomial order.
std::vector<Polynomial> ideal_graded_basis(const Ideal& I, const Multidegree& d);

/// Same data as a reduced row matrix over graded_monomials(ring, d).
Rref ideal_graded_matrix(const Ideal& I, const Multidegree& d);

/// Membership of a multihomogeneous f in the graded piece I_{deg f}.
bool contains(const Ideal& I, const Polynomial& f);

}  // namespace fano
