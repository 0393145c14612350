#include "fano/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw std::invalid_argument("Mat::from_rows: ragged rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!fano::is_zero(x)) return false;
    return true;
}

Rat Mat::trace() const {
    Rat t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (fano::is_zero(x)) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

Mat Mat::operator*(const Rat& c) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

Mat Mat::operator-() const { return *this * Rat(-1); }

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Rref rref(const Mat& m) {
    Rref out;
    out.r = m;
    Mat& r = out.r;
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows(); ++i)
            if (!is_zero(r.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = 1 / r.at(lead, col);
        for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            const Rat f = r.at(i, col);
            if (is_zero(f)) continue;
            for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Rat(0));
        v[free] = 1;
        for (int i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.r.at(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Rref rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

UniPoly unipoly(std::vector<Rat> coeffs) {
    while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
    return UniPoly{std::move(coeffs)};
}

UniPoly UniPoly::derivative() const {
    std::vector<Rat> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rat(static_cast<long>(i)));
    return unipoly(std::move(d));
}

Mat UniPoly::eval(const Mat& m) const {
    const int n = m.rows();
    Mat acc(n, n);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rat& x = c[d];
        if (fano::is_zero(x)) continue;
        const bool neg = sgn(x) < 0;
        Rat ax = abs(x);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = ax == 1;
        if (d == 0 || !unit) os << rat_str(ax);
        if (d > 0) {
            if (!unit) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
    std::vector<Rat> rem = a.c;
    std::vector<Rat> q(a.c.size() > b.c.size() - 1 ? a.c.size() - b.c.size() + 1 : 0, Rat(0));
    const int db = b.degree();
    const Rat lead = b.c.back();
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        if (is_zero(rem[d])) continue;
        Rat f = rem[d] / lead;
        q[d - db] = f;
        for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.c[i];
    }
    return {unipoly(std::move(q)), unipoly(std::move(rem))};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const Rat inv = 1 / a.c.back();
    for (auto& x : a.c) x *= inv;
    return a;
}

UniPoly squarefree_part(const UniPoly& p) {
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return poly_divmod(p, g).first;
}

UniPoly minimal_polynomial(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal_polynomial: non-square matrix");
    const int n = m.rows();
    const int nn = n * n;
    // Krylov sequence of flattened powers; stop at the first linear relation.
    std::vector<Vec> powers;
    Mat p = Mat::identity(n);
    for (int k = 0; k <= n; ++k) {
        Vec flat(nn);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat[i * n + j] = p.at(i, j);
        powers.push_back(std::move(flat));
        // Dependency among the powers = kernel vector of the transposed stack.
        auto dep = kernel_basis(Mat::from_rows(powers).transpose());
        if (!dep.empty()) {
            // First dependency is unique up to scale; the free column is the
            // last power, so the polynomial comes out monic of degree k.
            return unipoly(dep.front());
        }
        p = p * m;
    }
    throw std::logic_error("minimal_polynomial: no relation up to degree n");
}

std::string jordan_name(JordanType t) {
    switch (t) {
        case JordanType::zero: return "zero";
        case JordanType::semisimple: return "semisimple";
        case JordanType::nilpotent: return "nilpotent";
        case JordanType::mixed: return "mixed";
    }
    return "?";
}

JordanType jordan_type(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("jordan_type: non-square matrix");
    if (m.is_zero()) return JordanType::zero;
    UniPoly p = minimal_polynomial(m);
    bool pure_power = true;
    for (int i = 0; i < p.degree(); ++i)
        if (!is_zero(p.c[i])) {
            pure_power = false;
            break;
        }
    if (pure_power) return JordanType::nilpotent;
    if (poly_gcd(p, p.derivative()).degree() == 0) return JordanType::semisimple;
    return JordanType::mixed;
}

bool is_nilpotent(const Mat& m) {
    JordanType t = jordan_type(m);
    return t == JordanType::nilpotent || t == JordanType::zero;
}

Mat semisimple_part(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("semisimple_part: non-square matrix");
    if (m.is_zero()) return m;
    UniPoly p = minimal_polynomial(m);
    UniPoly q = squarefree_part(p);
    if (q.degree() == p.degree()) return m;  // already semisimple
    // Bezout: u*q + v*q' = 1 (q squarefree), then Newton's x <- x - q(x) v(x)
    // doubles the q-adic order of q(x) each round.
    UniPoly qd = q.derivative();
    UniPoly r0 = q, r1 = qd;
    UniPoly t0 = unipoly({}), t1 = unipoly({Rat(1)});
    while (!r1.is_zero()) {
        auto [quo, rem] = poly_divmod(r0, r1);
        UniPoly t2 = t0;
        // t2 = t0 - quo * t1
        {
            std::vector<Rat> prod(quo.c.size() + t1.c.size(), Rat(0));
            for (size_t i = 0; i < quo.c.size(); ++i)
                for (size_t j = 0; j < t1.c.size(); ++j) prod[i + j] += quo.c[i] * t1.c[j];
            std::vector<Rat> diff(std::max(t0.c.size(), prod.size()), Rat(0));
            for (size_t i = 0; i < t0.c.size(); ++i) diff[i] += t0.c[i];
            for (size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
            t2 = unipoly(std::move(diff));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd(q, q') is a nonzero constant; v = t0 / r0 satisfies v*q' = 1 mod q.
    if (r0.degree() != 0) throw std::logic_error("semisimple_part: squarefree part not coprime with derivative");
    const Rat inv = 1 / r0.c[0];
    UniPoly v = t0;
    for (auto& x : v.c) x *= inv;

    Mat x = m;
    for (int guard = 0; guard < 64; ++guard) {
        Mat qa = q.eval(x);
        if (qa.is_zero()) return x;
        x = x - qa * v.eval(x);
    }
    throw std::logic_error("semisimple_part: Newton iteration failed to converge");
}

int span_rank(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    return rank(Mat::from_rows(vectors));
}

bool span_contains(const std::vector<Vec>& vectors, const Vec& v) {
    bool vz = true;
    for (const auto& x : v)
        if (!is_zero(x)) {
            vz = false;
            break;
        }
    if (vz) return true;
    if (vectors.empty()) return false;
    std::vector<Vec> all = vectors;
    all.push_back(v);
    return span_rank(all) == span_rank(vectors);
}

bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    const int ra = span_rank(a), rb = span_rank(b);
    return ra == rb && span_rank(all) == ra;
}

}  // namespace fano
