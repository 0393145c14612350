#include "fano/catalog.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>

#include "fano/stabilizer.hpp"

namespace fano {

namespace {

Polynomial pp(const RingPtr& ring, const std::string& text) { return parse_polynomial(ring, text); }

Ideal ideal_of(const RingPtr& ring, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* g : gens) v.push_back(pp(ring, g));
    return make_ideal(ring, std::move(v));
}

GroupExpr g(const std::string& text) { return parse_group(text); }

Rat param_or(const std::map<std::string, Rat>& params, const std::string& key, const Rat& dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
}

void reject_unknown_params(const std::string& name, const std::map<std::string, Rat>& params,
                           std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw std::invalid_argument("build(" + name + "): unknown parameter '" + k + "'");
    }
}

ModelCase finish(ModelCase c) {
    if (c.expected) {
        auto exp = expected_signature(*c.expected);
        if (exp.dim && *exp.dim != c.expected_dim)
            throw std::logic_error("build(" + c.name + "): expected_dim " + std::to_string(c.expected_dim) +
                                   " disagrees with the group expression (" + std::to_string(*exp.dim) + ")");
    }
    return c;
}

}  // namespace

const std::vector<std::string>& roster_names() {
    static const std::vector<std::string> names = {
        "twisted_cubic",        "plane_cubic",
        "nodal_cubic_plane",    "hyperplane_P3",
        "line_P3",              "point_line_flag",
        "point_plane_flag",     "two_skew_lines",
        "conic_on_quadric",     "quadric_point_P4",
        "quadric_point_P5",     "bidegree_1n",
        "two_conics_bitangent", "two_conics_osculating",
        "twisted_quartic_pencil", "v5_line_model",
        "v5_conic_model",       "bidegree12_line_conic",
        "bidegree12_toric",     "flag_diagonal_conics",
        "veronese_cone",
    };
    return names;
}

ModelCase build(const std::string& name, const std::map<std::string, Rat>& params) {
    ModelCase c;
    c.name = name;

    if (name == "twisted_quartic_pencil") {
        reject_unknown_params(name, params, {"lambda"});
        Rat lambda = param_or(params, "lambda", Rat(2));
        if (lambda == 0 || lambda == 1)
            throw std::invalid_argument("twisted_quartic_pencil: lambda must avoid 0 and 1 (singular pencil member)");
        c.params["lambda"] = lambda;
        c.ring = projective_space(4);
        auto x = [&](int k) { return Polynomial::variable(c.ring, k); };
        Polynomial q = x(2) * x(2) - x(0) * x(4) * lambda - x(1) * x(3) * (Rat(1) - lambda);
        c.ideals = {rational_normal_curve_ideal(4, c.ring), make_ideal(c.ring, {q})};
        if (lambda == rat(-1, 3)) {
            c.expected = g("PGL(2)");
            c.expected_dim = 3;
        } else {
            c.expected = g("Gm");
            c.expected_dim = 1;
            c.expected_jordan = JordanType::semisimple;
        }
        c.note = "quadric z^2 = lambda xw + (1-lambda) yt through the twisted quartic";
        return finish(std::move(c));
    }

    if (name == "bidegree_1n") {
        reject_unknown_params(name, params, {"n"});
        Rat nr = param_or(params, "n", Rat(2));
        if (!is_integer(nr) || nr < 0 || nr > 8)
            throw std::invalid_argument("bidegree_1n: n must be an integer in [0, 8]");
        const int n = static_cast<int>(nr.get_num().get_si());
        c.params["n"] = nr;
        c.ring = product_of_projective_spaces({1, 1}, {"x", "y"});
        auto x0 = Polynomial::variable(c.ring, 0), x1 = Polynomial::variable(c.ring, 1);
        auto y0 = Polynomial::variable(c.ring, 2), y1 = Polynomial::variable(c.ring, 3);
        Polynomial a = x0, b = x1;
        for (int k = 0; k < n; ++k) {
            a = a * y0;
            b = b * y1;
        }
        c.ideals = {make_ideal(c.ring, {a + b})};
        if (n == 0) {
            c.expected = g("B x PGL(2)");
            c.expected_dim = 5;
        } else if (n == 1) {
            c.expected = g("PGL(2)");
            c.expected_dim = 3;
        } else {
            c.expected = g("Gm");
            c.expected_dim = 1;
            c.expected_jordan = JordanType::semisimple;
        }
        c.note = "curve x0 y0^n + x1 y1^n on P1 x P1";
        return finish(std::move(c));
    }

    reject_unknown_params(name, params, {});

    if (name == "twisted_cubic") {
        c.ring = projective_space(3);
        c.ideals = {rational_normal_curve_ideal(3, c.ring)};
        c.expected = g("PGL(2)");
        c.expected_dim = 3;
        c.note = "twisted cubic in P^3";
    } else if (name == "plane_cubic") {
        c.ring = projective_space(3);
        c.ideals = {ideal_of(c.ring, {"x0", "x1^3 + x2^3 + x3^3"})};
        c.expected = g("Ga^3 : Gm");
        c.expected_dim = 4;
        c.note = "Fermat cubic in the plane x0 = 0";
    } else if (name == "nodal_cubic_plane") {
        c.ring = projective_space(2);
        c.ideals = {ideal_of(c.ring, {"x1^2*x2 - x0^3 - x0^2*x2"})};
        c.expected_dim = 0;
        c.note = "irreducible nodal plane cubic; connected stabilizer trivial";
    } else if (name == "hyperplane_P3") {
        c.ring = projective_space(3);
        c.ideals = {ideal_of(c.ring, {"x0"})};
        c.expected = g("PGL(4;1)");
        c.expected_dim = 12;
        c.note = "hyperplane in P^3";
    } else if (name == "line_P3") {
        c.ring = projective_space(3);
        c.ideals = {ideal_of(c.ring, {"x0", "x1"})};
        c.expected = g("PGL(4;2)");
        c.expected_dim = 11;
        c.note = "line in P^3";
    } else if (name == "point_line_flag") {
        c.ring = projective_space(3);
        c.ideals = {ideal_of(c.ring, {"x0", "x1"}), ideal_of(c.ring, {"x0", "x1", "x2"})};
        c.expected = g("PGL(4;2,1)");
        c.expected_dim = 10;
        c.note = "point on a line in P^3";
    } else if (name == "point_plane_flag") {
        c.ring = projective_space(3);
        c.ideals = {ideal_of(c.ring, {"x0"}), ideal_of(c.ring, {"x0", "x1", "x2"})};
        c.expected = g("PGL(4;3,1)");
        c.expected_dim = 10;
        c.note = "point on a plane in P^3";
    } else if (name == "two_skew_lines") {
        c.ring = projective_space(3);
        c.ideals = {ideal_of(c.ring, {"x0", "x1"}), ideal_of(c.ring, {"x2", "x3"})};
        c.expected = g("PGL(2,2)");
        c.expected_dim = 7;
        c.note = "two disjoint lines in P^3";
    } else if (name == "conic_on_quadric") {
        c.ring = projective_space(4);
        c.ideals = {ideal_of(c.ring, {"x0*x1 + x2^2 + x3^2 + x4^2"}),
                    ideal_of(c.ring, {"x0", "x1", "x2^2 + x3^2 + x4^2"})};
        c.expected = g("PGL(2) x Gm");
        c.expected_dim = 4;
        c.note = "smooth conic on the quadric threefold";
    } else if (name == "quadric_point_P4") {
        c.ring = projective_space(4);
        c.ideals = {ideal_of(c.ring, {"x0*x1 + x2^2 + x3^2 + x4^2"}),
                    ideal_of(c.ring, {"x1", "x2", "x3", "x4"})};
        c.expected = g("PSO(5;1)");
        c.expected_dim = 7;
        c.note = "point on the quadric threefold";
    } else if (name == "quadric_point_P5") {
        c.ring = projective_space(5);
        c.ideals = {ideal_of(c.ring, {"x0*x1 + x2^2 + x3^2 + x4^2 + x5^2"}),
                    ideal_of(c.ring, {"x1", "x2", "x3", "x4", "x5"})};
        c.expected = g("PSO(6;1)");
        c.expected_dim = 11;
        c.note = "point on the four-dimensional quadric";
    } else if (name == "two_conics_bitangent") {
        c.ring = projective_space(2);
        c.ideals = {ideal_of(c.ring, {"(x0^2 - x1*x2)*(x0^2 - 2*x1*x2)"})};
        c.expected = g("Gm");
        c.expected_dim = 1;
        c.expected_jordan = JordanType::semisimple;
        c.note = "two conics tangent at two distinct points";
    } else if (name == "two_conics_osculating") {
        c.ring = projective_space(2);
        c.ideals = {ideal_of(c.ring, {"(x1*x2 - x0^2)*(x1*x2 - x0^2 + x2^2)"})};
        c.expected = g("Ga");
        c.expected_dim = 1;
        c.expected_jordan = JordanType::nilpotent;
        c.note = "two conics meeting at a single point with multiplicity four";
    } else if (name == "v5_line_model") {
        c.ring = projective_space(4);
        c.ideals = {ideal_of(c.ring, {"x0*x3 - x1*x2 + x4^2"}),
                    ideal_of(c.ring, {"x4", "x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"})};
        c.expected = g("Gm");
        c.expected_dim = 1;
        c.expected_jordan = JordanType::semisimple;
        c.note = "twisted cubic in a smooth hyperplane section of the quadric threefold";
    } else if (name == "v5_conic_model") {
        c.ring = projective_space(3);
        c.ideals = {ideal_of(c.ring, {"x0*x3 - x1*x2", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2",
                                      "x1^2*x3 - x0*x2^2"})};
        c.expected = g("Gm");
        c.expected_dim = 1;
        c.expected_jordan = JordanType::semisimple;
        c.note = "rational quartic [u^4 : u^3 v : u v^3 : v^4] on the quadric x0 x3 = x1 x2";
    } else if (name == "bidegree12_line_conic") {
        c.ring = product_of_projective_spaces({2, 2}, {"x", "y"});
        c.ideals = {ideal_of(c.ring, {"x0*(y0^2 - y1*y2) + x1*y1^2 + x2*y2^2"})};
        c.expected = g("Gm");
        c.expected_dim = 1;
        c.expected_jordan = JordanType::semisimple;
        c.note = "(1,2) divisor whose discriminant is a line plus a conic";
    } else if (name == "bidegree12_toric") {
        c.ring = product_of_projective_spaces({2, 2}, {"x", "y"});
        c.ideals = {ideal_of(c.ring, {"x0*y0^2 + x1*y1^2 + x2*y2^2"})};
        c.expected = g("Gm^2");
        c.expected_dim = 2;
        c.note = "(1,2) divisor whose discriminant is a triangle of lines";
    } else if (name == "flag_diagonal_conics") {
        c.ring = product_of_projective_spaces({2, 2}, {"x", "y"});
        c.ideals = {ideal_of(c.ring, {"x0*y0 + x1*y1 + x2*y2"}), ideal_of(c.ring, {"x0*x2 - x1^2"}),
                    ideal_of(c.ring, {"y1^2 - 4*y0*y2"})};
        c.expected = g("PGL(2)");
        c.expected_dim = 3;
        c.note = "conic and its dual inside the flag divisor of P^2 x P^2";
    } else if (name == "veronese_cone") {
        c.ring = projective_space(6);
        c.ideals = {ideal_of(c.ring, {"x0*x3 - x1^2", "x0*x4 - x1*x2", "x1*x4 - x2*x3",
                                      "x0*x5 - x2^2", "x1*x5 - x2*x4", "x3*x5 - x4^2"})};
        c.expected = g("AutP1112");
        c.expected_dim = 15;
        c.note = "cone in P^6 over the Veronese surface";
    } else {
        throw std::invalid_argument("build: unknown case '" + name + "'");
    }
    return finish(std::move(c));
}

std::string Report::param_str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : params) {
        os << (first ? "" : ", ") << k << "=" << rat_str(v);
        first = false;
    }
    return os.str();
}

Report verify(const ModelCase& c) {
    Report rep;
    rep.name = c.name;
    rep.params = c.params;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto ambient = AmbientAlgebra::of(c.ring);
        Subalgebra s = joint_stabilizer(c.ideals, ambient);
        rep.sig = signature(s);
        bool ok = rep.sig.dim == c.expected_dim;
        std::ostringstream detail;
        if (!ok) detail << "dim " << rep.sig.dim << " != expected " << c.expected_dim << "; ";
        if (c.expected) {
            MatchReport m = match(rep.sig, *c.expected);
            if (!m.pass) detail << m.str() << "; ";
            ok = ok && m.pass;
        }
        if (c.expected_jordan) {
            if (s.dim() == 1) {
                rep.jordan = jordan_type(s.basis[0].block_diagonal());
                if (*rep.jordan != *c.expected_jordan) {
                    detail << "jordan " << jordan_name(*rep.jordan) << " != expected "
                           << jordan_name(*c.expected_jordan) << "; ";
                    ok = false;
                }
            } else {
                ok = false;
                detail << "jordan check needs a one-dimensional stabilizer; ";
            }
        }
        rep.pass = ok;
        rep.detail = detail.str();
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.detail = e.what();
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<Report> verify_all(int jobs) {
    std::vector<ModelCase> cases;
    for (const auto& name : roster_names()) {
        if (name == "twisted_quartic_pencil") {
            for (const char* l : {"-3", "-2", "-1", "-1/3", "1/2", "2", "3"})
                cases.push_back(build(name, {{"lambda", rat_parse(l)}}));
        } else if (name == "bidegree_1n") {
            for (int n = 0; n <= 4; ++n) cases.push_back(build(name, {{"n", Rat(n)}}));
        } else {
            cases.push_back(build(name));
        }
    }
    std::vector<Report> reports(cases.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < cases.size(); ++i) reports[i] = verify(cases[i]);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cases.size()) break;
            reports[i] = verify(cases[i]);
        }
    };
    std::vector<std::future<void>> pool;
    for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return reports;
}

// ---------------------------------------------------------------------------

namespace {

Mat gram_matrix(const Polynomial& q) {
    const RingPtr& ring = q.ring();
    if (ring->nblocks() != 1)
        throw std::invalid_argument("gram_matrix: quadratic form must live in a single block");
    const int n = ring->block_size(0);
    if (!q.is_zero()) {
        auto deg = q.multidegree();
        if (!deg || (*deg)[0] != 2) throw std::invalid_argument("gram_matrix: not a quadratic form");
    }
    Mat m(n, n);
    for (const auto& [mon, coef] : q.terms()) {
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v) {
            if (mon.e[v] == 2) a = b = v;
            if (mon.e[v] == 1) (a < 0 ? a : b) = v;
        }
        if (a == b) {
            m.at(a, a) = coef;
        } else {
            m.at(a, b) = coef / 2;
            m.at(b, a) = coef / 2;
        }
    }
    return m;
}

Polynomial det3(const std::vector<std::vector<Polynomial>>& e) {
    auto two = [&](int r1, int r2, int c1, int c2) {
        return e[r1][c1] * e[r2][c2] - e[r1][c2] * e[r2][c1];
    };
    return e[0][0] * two(1, 2, 1, 2) - e[0][1] * two(1, 2, 0, 2) + e[0][2] * two(1, 2, 0, 1);
}

}  // namespace

Polynomial discriminant_cubic(const Polynomial& q0, const Polynomial& q1, const Polynomial& q2) {
    std::vector<Mat> gram = {gram_matrix(q0), gram_matrix(q1), gram_matrix(q2)};
    for (const auto& m : gram)
        if (m.rows() != 3) throw std::invalid_argument("discriminant_cubic: forms must have three variables");
    auto xring = projective_space(2, "x");
    std::vector<std::vector<Polynomial>> entries(3, std::vector<Polynomial>(3, Polynomial(xring)));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int i = 0; i < 3; ++i)
                if (!is_zero(gram[i].at(a, b)))
                    entries[a][b] += Polynomial::variable(xring, i) * gram[i].at(a, b);
    return det3(entries);
}

std::optional<Polynomial> exact_quotient(const Polynomial& c, const Polynomial& l) {
    if (l.is_zero()) throw std::invalid_argument("exact_quotient: division by zero");
    const auto& lt = *l.terms().begin();  // leading term in the canonical order
    Polynomial quotient(c.ring());
    Polynomial rem = c;
    while (!rem.is_zero()) {
        const auto& rt = *rem.terms().begin();
        Monomial m;
        m.e.resize(rt.first.e.size());
        for (size_t v = 0; v < m.e.size(); ++v) {
            m.e[v] = rt.first.e[v] - lt.first.e[v];
            if (m.e[v] < 0) return std::nullopt;
        }
        Polynomial t = Polynomial::term(c.ring(), rt.second / lt.second, m);
        quotient += t;
        rem -= t * l;
    }
    return quotient;
}

bool linear_factor_divides(const Polynomial& line, const Polynomial& cubic) {
    return exact_quotient(cubic, line).has_value();
}

int conic_rank(const Polynomial& q) { return rank(gram_matrix(q)); }

}  // namespace fano
