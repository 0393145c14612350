#pragma once

#include <vector>

#include "fano/rational.hpp"

namespace fano {

using Vec = std::vector<Rat>;

/// Dense matrix of exact rationals, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Rat trace() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rat& c) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const = default;

    Mat transpose() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

struct Rref {
    Mat r;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Reduced row-echelon form over the rationals, exact.
Rref rref(const Mat& m);

/// Basis of { v : M v = 0 }. One vector per free column of rref(M);
/// the free-column entry of each vector is 1.
std::vector<Vec> kernel_basis(const Mat& m);

int rank(const Mat& m);

/// Inverse of a square matrix; throws std::domain_error if singular.
Mat inverse(const Mat& m);

/// Monic univariate polynomial, coefficients low degree first.
struct UniPoly {
    std::vector<Rat> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const UniPoly& o) const = default;

    UniPoly derivative() const;
    Mat eval(const Mat& m) const;
    std::string str(const std::string& var = "t") const;
};

UniPoly unipoly(std::vector<Rat> coeffs);  // trims and returns

/// Monic polynomial p of least degree with p(M) = 0.
UniPoly minimal_polynomial(const Mat& m);

UniPoly poly_gcd(UniPoly a, UniPoly b);                      // monic gcd
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);                   // p / gcd(p, p')

enum class JordanType { zero, semisimple, nilpotent, mixed };

std::string jordan_name(JordanType t);

/// zero iff M = 0; nilpotent iff M^n = 0 (M != 0); semisimple iff the
/// minimal polynomial is squarefree (M != 0); mixed otherwise.
JordanType jordan_type(const Mat& m);

bool is_nilpotent(const Mat& m);

/// Semisimple part S of the Jordan-Chevalley decomposition M = S + N,
/// computed by Newton iteration against the squarefree part of the
/// minimal polynomial. S is a polynomial in M; M - S is nilpotent.
Mat semisimple_part(const Mat& m);

/// Rank of the span of a set of coordinate vectors.
int span_rank(const std::vector<Vec>& vectors);

/// True iff v lies in the span of the given vectors.
bool span_contains(const std::vector<Vec>& vectors, const Vec& v);

bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace fano
