#include "fano/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fano {

int RingSpec::nvars() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.vars.size());
    return n;
}

int RingSpec::block_start(int b) const {
    int n = 0;
    for (int i = 0; i < b; ++i) n += block_size(i);
    return n;
}

int RingSpec::block_of_var(int v) const {
    int n = 0;
    for (int b = 0; b < nblocks(); ++b) {
        n += block_size(b);
        if (v < n) return b;
    }
    throw std::out_of_range("block_of_var");
}

const std::string& RingSpec::var_name(int v) const {
    for (const auto& b : blocks) {
        if (v < static_cast<int>(b.vars.size())) return b.vars[v];
        v -= static_cast<int>(b.vars.size());
    }
    throw std::out_of_range("var_name");
}

int RingSpec::var_index(const std::string& name) const {
    int i = 0;
    for (const auto& b : blocks)
        for (const auto& v : b.vars) {
            if (v == name) return i;
            ++i;
        }
    return -1;
}

bool RingSpec::operator==(const RingSpec& o) const {
    if (blocks.size() != o.blocks.size()) return false;
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].name != o.blocks[i].name || blocks[i].vars != o.blocks[i].vars) return false;
    return true;
}

RingPtr make_ring(std::vector<RingSpec::Block> blocks) {
    if (blocks.empty()) throw std::invalid_argument("make_ring: no blocks");
    std::set<std::string> seen;
    for (const auto& b : blocks) {
        if (b.vars.empty()) throw std::invalid_argument("make_ring: empty block '" + b.name + "'");
        for (const auto& v : b.vars)
            if (!seen.insert(v).second) throw std::invalid_argument("make_ring: duplicate variable '" + v + "'");
    }
    auto r = std::make_shared<RingSpec>();
    r->blocks = std::move(blocks);
    return r;
}

RingPtr projective_space(int dim, const std::string& prefix) {
    RingSpec::Block b;
    b.name = prefix;
    for (int i = 0; i <= dim; ++i) b.vars.push_back(prefix + std::to_string(i));
    return make_ring({std::move(b)});
}

RingPtr product_of_projective_spaces(const std::vector<int>& dims,
                                     const std::vector<std::string>& prefixes) {
    if (dims.size() != prefixes.size())
        throw std::invalid_argument("product_of_projective_spaces: size mismatch");
    std::vector<RingSpec::Block> blocks;
    for (size_t k = 0; k < dims.size(); ++k) {
        RingSpec::Block b;
        b.name = prefixes[k];
        for (int i = 0; i <= dims[k]; ++i) b.vars.push_back(prefixes[k] + std::to_string(i));
        blocks.push_back(std::move(b));
    }
    return make_ring(std::move(blocks));
}

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
    Monomial m;
    m.e.assign(ring->nvars(), 0);
    m.e[var] = 1;
    return term(ring, Rat(1), m);
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name) {
    int v = ring->var_index(name);
    if (v < 0) throw std::invalid_argument("variable: unknown variable '" + name + "'");
    return variable(ring, v);
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rat& c) {
    Monomial m;
    m.e.assign(ring->nvars(), 0);
    return term(ring, c, m);
}

Polynomial Polynomial::term(const RingPtr& ring, const Rat& c, const Monomial& m) {
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (fano::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (fano::is_zero(it->second)) terms_.erase(it);
    }
}

static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.e.resize(ma.e.size());
            for (size_t i = 0; i < ma.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(ring_);
    if (fano::is_zero(c)) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

Polynomial Polynomial::operator-() const { return *this * Rat(-1); }

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    return *ring_ == *o.ring_ && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        r.add_term(d, c * Rat(m.e[var]));
    }
    return r;
}

Multidegree Polynomial::degree_of(const Monomial& m) const {
    Multidegree d(ring_->nblocks(), 0);
    int v = 0;
    for (int b = 0; b < ring_->nblocks(); ++b)
        for (int i = 0; i < ring_->block_size(b); ++i, ++v) d[b] += m.e[v];
    return d;
}

std::optional<Multidegree> Polynomial::multidegree() const {
    if (is_zero()) throw std::invalid_argument("multidegree: zero polynomial");
    std::optional<Multidegree> deg;
    for (const auto& [m, c] : terms_) {
        Multidegree d = degree_of(m);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

bool Polynomial::is_multihomogeneous() const { return !is_zero() && multidegree().has_value(); }

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw std::invalid_argument("compose: need one image per variable");
    const RingPtr& target = images.front().ring();
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (size_t v = 0; v < images.size(); ++v)
            for (int k = 0; k < m.e[v]; ++k) t = t * images[v];
        r += t;
    }
    return r;
}

Polynomial Polynomial::linear_substitution(const std::vector<Mat>& block_maps) const {
    if (static_cast<int>(block_maps.size()) != ring_->nblocks())
        throw std::invalid_argument("linear_substitution: one matrix per block required");
    std::vector<Polynomial> images;
    int v = 0;
    for (int b = 0; b < ring_->nblocks(); ++b) {
        const Mat& M = block_maps[b];
        const int n = ring_->block_size(b);
        if (M.rows() != n || M.cols() != n)
            throw std::invalid_argument("linear_substitution: block size mismatch");
        for (int i = 0; i < n; ++i, ++v) {
            Polynomial im(ring_);
            for (int j = 0; j < n; ++j)
                if (!fano::is_zero(M.at(i, j))) im += Polynomial::variable(ring_, ring_->block_start(b) + j) * M.at(i, j);
            images.push_back(im);
        }
    }
    return compose(images);
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = sgn(c) < 0;
        Rat ac = abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = ac == 1;
        const bool const_mon = m.total_degree() == 0;
        if (!unit || const_mon) os << rat_str(ac);
        bool printed_var = false;
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (printed_var || !unit) os << "*";
            os << ring_->var_name(static_cast<int>(v));
            if (m.e[v] > 1) os << "^" << m.e[v];
            printed_var = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)*;  term := factor ('*' factor)*;
// factor := base ('^' uint)?;  base := rational | variable | '(' expr ')'.

namespace {

struct PolyParser {
    const RingPtr& ring;
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_polynomial: " + what + " at position " + std::to_string(i) +
                                    " in '" + s + "'");
    }

    Polynomial parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (eat('^')) {
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected exponent");
            int e = std::stoi(s.substr(start, i - start));
            Polynomial p = Polynomial::constant(ring, Rat(1));
            for (int k = 0; k < e; ++k) p = p * base;
            return p;
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            Polynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '/') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected denominator");
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            return Polynomial::constant(ring, rat_parse(s.substr(start, i - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            int v = ring->var_index(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring, v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    PolyParser p{ring, text};
    Polynomial out = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Exponent tuples of the given sum in descending lexicographic order.
void enumerate_block(int nvars, int deg, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (nvars == 1) {
        prefix.push_back(deg);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = deg; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_block(nvars - 1, deg - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> graded_monomials(const RingPtr& ring, const Multidegree& d) {
    if (static_cast<int>(d.size()) != ring->nblocks())
        throw std::invalid_argument("graded_monomials: multidegree size mismatch");
    std::vector<std::vector<std::vector<int>>> per_block(ring->nblocks());
    for (int b = 0; b < ring->nblocks(); ++b) {
        if (d[b] < 0) throw std::invalid_argument("graded_monomials: negative degree");
        std::vector<int> prefix;
        enumerate_block(ring->block_size(b), d[b], prefix, per_block[b]);
    }
    std::vector<Monomial> out;
    std::vector<size_t> idx(ring->nblocks(), 0);
    for (;;) {
        Monomial m;
        for (int b = 0; b < ring->nblocks(); ++b)
            m.e.insert(m.e.end(), per_block[b][idx[b]].begin(), per_block[b][idx[b]].end());
        out.push_back(std::move(m));
        int b = ring->nblocks() - 1;
        for (;;) {
            if (++idx[b] < per_block[b].size()) break;
            idx[b] = 0;
            if (--b < 0) return out;
        }
    }
}

Vec coordinates(const Polynomial& f, const std::vector<Monomial>& basis) {
    std::map<Monomial, int, MonOrder> pos;
    for (size_t k = 0; k < basis.size(); ++k) pos.emplace(basis[k], static_cast<int>(k));
    Vec v(basis.size(), Rat(0));
    for (const auto& [m, c] : f.terms()) {
        auto it = pos.find(m);
        if (it == pos.end()) throw std::invalid_argument("coordinates: term outside the graded piece");
        v[it->second] = c;
    }
    return v;
}

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> generators) {
    for (const auto& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("make_ideal: zero generator");
        if (!(*g.ring() == *ring)) throw std::invalid_argument("make_ideal: generator over a different ring");
        if (!g.is_multihomogeneous())
            throw std::invalid_argument("make_ideal: generator not multihomogeneous: " + g.str());
    }
    return Ideal{ring, std::move(generators)};
}

static bool componentwise_le(const Multidegree& a, const Multidegree& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Rref ideal_graded_matrix(const Ideal& I, const Multidegree& d) {
    const auto mons = graded_monomials(I.ring, d);
    std::vector<Vec> rows;
    for (const auto& g : I.generators) {
        const Multidegree e = *g.multidegree();
        if (!componentwise_le(e, d)) continue;
        Multidegree rest(d.size());
        for (size_t i = 0; i < d.size(); ++i) rest[i] = d[i] - e[i];
        for (const auto& m : graded_monomials(I.ring, rest))
            rows.push_back(coordinates(Polynomial::term(I.ring, Rat(1), m) * g, mons));
    }
    if (rows.empty()) {
        Rref empty;
        empty.r = Mat(0, static_cast<int>(mons.size()));
        return empty;
    }
    return rref(Mat::from_rows(rows));
}

std::vector<Polynomial> ideal_graded_basis(const Ideal& I, const Multidegree& d) {
    const auto mons = graded_monomials(I.ring, d);
    Rref rr = ideal_graded_matrix(I, d);
    std::vector<Polynomial> out;
    for (int i = 0; i < rr.rank; ++i) {
        Polynomial p(I.ring);
        for (size_t j = 0; j < mons.size(); ++j)
            if (!is_zero(rr.r.at(i, static_cast<int>(j))))
                p += Polynomial::term(I.ring, rr.r.at(i, static_cast<int>(j)), mons[j]);
        out.push_back(std::move(p));
    }
    return out;
}

bool contains(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) return true;
    auto deg = f.multidegree();
    if (!deg) throw std::invalid_argument("contains: inhomogeneous polynomial");
    const auto mons = graded_monomials(I.ring, *deg);
    Rref rr = ideal_graded_matrix(I, *deg);
    Vec v = coordinates(f, mons);
    // Reduce against the rref rows; membership iff the residual vanishes.
    for (int i = 0; i < rr.rank; ++i) {
        const int p = rr.pivot_cols[i];
        if (is_zero(v[p])) continue;
        const Rat f0 = v[p];
        for (int j = 0; j < rr.r.cols(); ++j) v[j] -= f0 * rr.r.at(i, j);
    }
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace fano
