#include "fano/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fano {

bool GroupExpr::operator==(const GroupExpr& o) const {
    return kind == o.kind && n == o.n && flag == o.flag && children == o.children;
}

std::string GroupExpr::str() const {
    auto paren = [](const GroupExpr& e) {
        std::string s = e.str();
        switch (e.kind) {
            case Kind::Product:
            case Kind::Semidirect:
            case Kind::QuotientGm:
            case Kind::QuotientFinite: return "(" + s + ")";
            default: return s;
        }
    };
    std::ostringstream os;
    switch (kind) {
        case Kind::Ga: os << "Ga"; if (n != 1) os << "^" << n; break;
        case Kind::Gm: os << "Gm"; if (n != 1) os << "^" << n; break;
        case Kind::GL: os << "GL(" << n << ")"; break;
        case Kind::SL: os << "SL(" << n << ")"; break;
        case Kind::PGL: os << "PGL(" << n << ")"; break;
        case Kind::SO: os << "SO(" << n << ")"; break;
        case Kind::PSO: os << "PSO(" << n << ")"; break;
        case Kind::Borel: os << "B"; break;
        case Kind::Parabolic: {
            os << "PGL(" << n << ";";
            for (size_t i = 0; i < flag.size(); ++i) os << (i ? "," : "") << flag[i];
            os << ")";
            break;
        }
        case Kind::PSOParabolic: os << "PSO(" << n << ";" << flag[0] << ")"; break;
        case Kind::PGL22: os << "PGL(2,2)"; break;
        case Kind::PGL22_1: os << "PGL(2,2;1)"; break;
        case Kind::AutP1112: os << "AutP1112"; break;
        case Kind::Product: {
            for (size_t i = 0; i < children.size(); ++i) os << (i ? " x " : "") << paren(children[i]);
            break;
        }
        case Kind::Semidirect: os << paren(children[0]) << " : " << paren(children[1]); break;
        case Kind::QuotientGm: os << paren(children[0]) << " / Gm"; break;
        case Kind::QuotientFinite: os << paren(children[0]) << " / finite"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser. Precedence, loosest first:  ':'  then 'x'  then '/'.

namespace {

struct GroupParser {
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
    bool peek_word(const std::string& w) {
        skip_ws();
        if (s.compare(i, w.size(), w) != 0) return false;
        size_t end = i + w.size();
        if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) return false;
        return true;
    }
    bool eat_word(const std::string& w) {
        if (!peek_word(w)) return false;
        i += w.size();
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_group: " + what + " at position " + std::to_string(i) + " in '" +
                                    s + "'");
    }
    int parse_int() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        return std::stoi(s.substr(start, i - start));
    }

    GroupExpr parse_expr() {
        GroupExpr left = parse_product();
        skip_ws();
        if (eat(':')) {
            GroupExpr right = parse_product();
            return GroupExpr{GroupExpr::Kind::Semidirect, 0, {}, {std::move(left), std::move(right)}};
        }
        return left;
    }

    GroupExpr parse_product() {
        std::vector<GroupExpr> parts;
        parts.push_back(parse_quotient());
        for (;;) {
            skip_ws();
            // 'x' is the product operator; it never begins an atom name.
            if (i < s.size() && s[i] == 'x') {
                ++i;
                parts.push_back(parse_quotient());
            } else {
                break;
            }
        }
        if (parts.size() == 1) return parts[0];
        return GroupExpr{GroupExpr::Kind::Product, 0, {}, std::move(parts)};
    }

    GroupExpr parse_quotient() {
        GroupExpr e = parse_primary();
        for (;;) {
            skip_ws();
            if (!eat('/')) break;
            if (eat_word("Gm"))
                e = GroupExpr{GroupExpr::Kind::QuotientGm, 0, {}, {std::move(e)}};
            else if (eat_word("finite"))
                e = GroupExpr{GroupExpr::Kind::QuotientFinite, 0, {}, {std::move(e)}};
            else
                fail("expected 'Gm' or 'finite' after '/'");
        }
        return e;
    }

    GroupExpr parse_primary() {
        skip_ws();
        if (eat('(')) {
            GroupExpr e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat_word("Ga")) return parse_power(GroupExpr::Kind::Ga);
        if (eat_word("Gm")) return parse_power(GroupExpr::Kind::Gm);
        if (eat_word("GL")) return parse_classical(GroupExpr::Kind::GL);
        if (eat_word("SL")) return parse_classical(GroupExpr::Kind::SL);
        if (eat_word("PGL")) return parse_pgl();
        if (eat_word("PSO")) return parse_pso();
        if (eat_word("SO")) return parse_classical(GroupExpr::Kind::SO);
        if (eat_word("AutP1112")) return GroupExpr{GroupExpr::Kind::AutP1112, 0, {}, {}};
        if (eat_word("B")) return GroupExpr{GroupExpr::Kind::Borel, 0, {}, {}};
        fail("expected a group atom");
    }

    GroupExpr parse_power(GroupExpr::Kind kind) {
        int n = 1;
        if (eat('^')) n = parse_int();
        if (n < 1) fail("power must be positive");
        return GroupExpr{kind, n, {}, {}};
    }

    GroupExpr parse_classical(GroupExpr::Kind kind) {
        if (!eat('(')) fail("expected '('");
        int n = parse_int();
        if (!eat(')')) fail("expected ')'");
        return GroupExpr{kind, n, {}, {}};
    }

    GroupExpr parse_pgl() {
        if (!eat('(')) fail("expected '('");
        std::vector<int> head{parse_int()};
        while (eat(',')) head.push_back(parse_int());
        std::vector<int> flag;
        if (eat(';')) {
            flag.push_back(parse_int());
            while (eat(',')) flag.push_back(parse_int());
        }
        if (!eat(')')) fail("expected ')'");
        if (head.size() == 2 && head[0] == 2 && head[1] == 2) {
            if (flag.empty()) return GroupExpr{GroupExpr::Kind::PGL22, 0, {}, {}};
            if (flag == std::vector<int>{1}) return GroupExpr{GroupExpr::Kind::PGL22_1, 0, {}, {}};
            fail("unsupported PGL(2,2;...) flag");
        }
        if (head.size() != 1) fail("unsupported PGL head");
        if (flag.empty()) return GroupExpr{GroupExpr::Kind::PGL, head[0], {}, {}};
        for (size_t k = 0; k + 1 < flag.size(); ++k)
            if (flag[k] <= flag[k + 1]) fail("parabolic flag must be strictly decreasing");
        if (flag.front() >= head[0] || flag.back() < 1) fail("parabolic flag out of range");
        if (flag.size() > 2) fail("parabolic flags longer than 2 are not used");
        return GroupExpr{GroupExpr::Kind::Parabolic, head[0], flag, {}};
    }

    GroupExpr parse_pso() {
        if (!eat('(')) fail("expected '('");
        int n = parse_int();
        std::vector<int> flag;
        if (eat(';')) flag.push_back(parse_int());
        if (!eat(')')) fail("expected ')'");
        if (flag.empty()) return GroupExpr{GroupExpr::Kind::PSO, n, {}, {}};
        return GroupExpr{GroupExpr::Kind::PSOParabolic, n, flag, {}};
    }
};

}  // namespace

GroupExpr parse_group(const std::string& text) {
    GroupParser p{text};
    GroupExpr e = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return e;
}

// ---------------------------------------------------------------------------
// Expected signatures.

namespace {

std::vector<SimpleType> sorted(std::vector<SimpleType> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<SimpleType> sl_type(int n) {
    switch (n) {
        case 1: return {};
        case 2: return {SimpleType::A1};
        case 3: return {SimpleType::A2};
        case 4: return {SimpleType::A3};
        default: throw std::invalid_argument("expected_signature: A-type of rank > 3 not in the catalog");
    }
}

std::vector<SimpleType> so_type(int n) {
    switch (n) {
        case 3: return {SimpleType::A1};
        case 4: return {SimpleType::A1, SimpleType::A1};
        case 5: return {SimpleType::B2};
        case 6: return {SimpleType::A3};
        default: throw std::invalid_argument("expected_signature: SO(n) supported for 3 <= n <= 6");
    }
}

int levi_dim(const std::vector<SimpleType>& v) {
    int d = 0;
    for (auto t : v) d += simple_type_dim(t);
    return d;
}

ExpectedSignature reductive_atom(int dim, int center, std::vector<SimpleType> levi) {
    ExpectedSignature s;
    s.dim = dim;
    s.derived_dim = levi_dim(levi);
    s.radical_dim = center;
    s.unipotent_dim = 0;
    s.toral_rank = center;
    s.killing_rank = levi_dim(levi);
    s.levi = sorted(std::move(levi));
    s.reductive = true;
    s.abelian = (*s.levi).empty() && dim == center;
    return s;
}

// Parabolic of GL-type from Levi block sizes and nilradical dimension.
// The Levi center acts with nonzero weights on every root space, so the
// derived algebra is (nilradical + semisimple Levi part).
ExpectedSignature parabolic_from(const std::vector<int>& blocks, int nilradical) {
    ExpectedSignature s;
    std::vector<SimpleType> levi;
    int blocks_sq = 0;
    for (int b : blocks) {
        blocks_sq += b * b;
        if (b >= 2) {
            auto t = sl_type(b);
            levi.insert(levi.end(), t.begin(), t.end());
        }
    }
    const int center = static_cast<int>(blocks.size()) - 1;
    s.dim = nilradical + blocks_sq - 1;
    s.derived_dim = nilradical + levi_dim(levi);
    s.radical_dim = nilradical + center;
    s.unipotent_dim = nilradical;
    s.toral_rank = center;
    s.levi = sorted(std::move(levi));
    s.reductive = nilradical == 0;
    s.abelian = false;
    return s;
}

ExpectedSignature combine_product(const ExpectedSignature& a, const ExpectedSignature& b) {
    ExpectedSignature s;
    auto add = [](const std::optional<int>& x, const std::optional<int>& y) -> std::optional<int> {
        if (x && y) return *x + *y;
        return std::nullopt;
    };
    s.dim = add(a.dim, b.dim);
    s.derived_dim = add(a.derived_dim, b.derived_dim);
    s.radical_dim = add(a.radical_dim, b.radical_dim);
    s.unipotent_dim = add(a.unipotent_dim, b.unipotent_dim);
    s.toral_rank = add(a.toral_rank, b.toral_rank);
    s.killing_rank = add(a.killing_rank, b.killing_rank);
    if (a.levi && b.levi) {
        std::vector<SimpleType> l = *a.levi;
        l.insert(l.end(), b.levi->begin(), b.levi->end());
        s.levi = sorted(std::move(l));
    }
    if (a.reductive && b.reductive) s.reductive = *a.reductive && *b.reductive;
    if (a.abelian && b.abelian) s.abelian = *a.abelian && *b.abelian;
    return s;
}

}  // namespace

ExpectedSignature expected_signature(const GroupExpr& e) {
    using K = GroupExpr::Kind;
    switch (e.kind) {
        case K::Ga: {
            ExpectedSignature s;
            s.dim = e.n;
            s.derived_dim = 0;
            s.radical_dim = e.n;
            s.unipotent_dim = e.n;
            s.toral_rank = 0;
            s.killing_rank = 0;
            s.levi = std::vector<SimpleType>{};
            s.reductive = false;
            s.abelian = true;
            return s;
        }
        case K::Gm: return reductive_atom(e.n, e.n, {});
        case K::GL: {
            if (e.n < 1) throw std::invalid_argument("GL(n): n >= 1");
            return reductive_atom(e.n * e.n, 1, e.n >= 2 ? sl_type(e.n) : std::vector<SimpleType>{});
        }
        case K::SL:
        case K::PGL: {
            if (e.n < 2) throw std::invalid_argument("SL/PGL(n): n >= 2");
            return reductive_atom(e.n * e.n - 1, 0, sl_type(e.n));
        }
        case K::SO:
        case K::PSO: return reductive_atom(e.n * (e.n - 1) / 2, 0, so_type(e.n));
        case K::Borel: {
            // Ga : Gm with the weight-2 action; two-dimensional non-abelian.
            ExpectedSignature s;
            s.dim = 2;
            s.derived_dim = 1;
            s.radical_dim = 2;
            s.unipotent_dim = 1;
            s.toral_rank = 1;
            s.killing_rank = 1;
            s.levi = std::vector<SimpleType>{};
            s.reductive = false;
            s.abelian = false;
            return s;
        }
        case K::Parabolic: {
            const int n = e.n;
            if (e.flag.size() == 1) {
                const int k = e.flag[0];
                return parabolic_from({k, n - k}, k * (n - k));
            }
            const int k1 = e.flag[0], k2 = e.flag[1];
            return parabolic_from({k2, k1 - k2, n - k1}, k1 * (n - k1) + k2 * (k1 - k2));
        }
        case K::PSOParabolic: {
            const int n = e.n, k = e.flag[0];
            if (k == 1 && (n == 5 || n == 6)) {
                // Stabilizer of a point on the smooth (n-2)-quadric:
                // Ga^(n-2) : ((SO(n-2) x Gm) / finite).
                ExpectedSignature s;
                const int u = n - 2;
                auto levi = so_type(n - 2);
                s.dim = u + levi_dim(levi) + 1;
                s.derived_dim = u + levi_dim(levi);
                s.radical_dim = u + 1;
                s.unipotent_dim = u;
                s.toral_rank = 1;
                s.levi = sorted(std::move(levi));
                s.reductive = false;
                s.abelian = false;
                return s;
            }
            if (n == 5 && k == 2) {
                // Stabilizer of an isotropic plane in so(5): Levi gl(2),
                // three-dimensional nilradical.
                ExpectedSignature s;
                s.dim = 7;
                s.derived_dim = 6;
                s.radical_dim = 4;
                s.unipotent_dim = 3;
                s.toral_rank = 1;
                s.levi = std::vector<SimpleType>{SimpleType::A1};
                s.reductive = false;
                s.abelian = false;
                return s;
            }
            throw std::invalid_argument("expected_signature: PSO(n;k) supported for (5;1),(5;2),(6;1)");
        }
        case K::PGL22: {
            ExpectedSignature s = reductive_atom(7, 1, {SimpleType::A1, SimpleType::A1});
            return s;
        }
        case K::PGL22_1: {
            // (GL(2) x upper-triangular GL(2)) / Gm.
            ExpectedSignature s;
            s.dim = 6;
            s.derived_dim = 4;  // sl2 + nilpotent of the triangular factor
            s.radical_dim = 3;
            s.unipotent_dim = 1;
            s.toral_rank = 2;
            s.levi = std::vector<SimpleType>{SimpleType::A1};
            s.reductive = false;
            s.abelian = false;
            return s;
        }
        case K::AutP1112: {
            // Ga^6 : ((GL(3) x Gm) / Gm); the center scales the cone, so the
            // derived algebra contains the whole unipotent part.
            ExpectedSignature s;
            s.dim = 15;
            s.derived_dim = 14;
            s.radical_dim = 7;
            s.unipotent_dim = 6;
            s.toral_rank = 1;
            s.levi = std::vector<SimpleType>{SimpleType::A2};
            s.reductive = false;
            s.abelian = false;
            return s;
        }
        case K::Product: {
            ExpectedSignature s = expected_signature(e.children[0]);
            for (size_t i = 1; i < e.children.size(); ++i)
                s = combine_product(s, expected_signature(e.children[i]));
            return s;
        }
        case K::Semidirect: {
            ExpectedSignature u = expected_signature(e.children[0]);
            ExpectedSignature r = expected_signature(e.children[1]);
            if (!u.toral_rank || *u.toral_rank != 0 || !u.levi || !u.levi->empty())
                throw std::invalid_argument("expected_signature: left side of ':' must be unipotent");
            ExpectedSignature s;
            if (u.dim && r.dim) s.dim = *u.dim + *r.dim;
            if (u.dim && r.unipotent_dim) s.unipotent_dim = *u.dim + *r.unipotent_dim;
            if (u.dim && r.radical_dim) s.radical_dim = *u.dim + *r.radical_dim;
            s.toral_rank = r.toral_rank;
            s.levi = r.levi;
            s.reductive = false;
            s.abelian = false;
            // derived_dim and killing_rank depend on the (omitted) weights.
            return s;
        }
        case K::QuotientGm: {
            ExpectedSignature s = expected_signature(e.children[0]);
            if (s.toral_rank && *s.toral_rank < 1)
                throw std::invalid_argument("expected_signature: no central torus to quotient");
            if (s.dim) s.dim = *s.dim - 1;
            if (s.radical_dim) s.radical_dim = *s.radical_dim - 1;
            if (s.toral_rank) s.toral_rank = *s.toral_rank - 1;
            if (s.abelian && *s.abelian && s.dim) s.abelian = true;
            return s;
        }
        case K::QuotientFinite: return expected_signature(e.children[0]);
    }
    throw std::logic_error("expected_signature: unreachable");
}

int flat_dimension(const GroupExpr& e) {
    using K = GroupExpr::Kind;
    switch (e.kind) {
        case K::Product:
        case K::Semidirect: {
            int d = 0;
            for (const auto& c : e.children) d += flat_dimension(c);
            return d;
        }
        case K::QuotientGm: return flat_dimension(e.children[0]) - 1;
        case K::QuotientFinite: return flat_dimension(e.children[0]);
        default: {
            auto s = expected_signature(e);
            return *s.dim;
        }
    }
}

std::string ExpectedSignature::str() const {
    std::ostringstream os;
    auto f = [&](const char* name, const std::optional<int>& v) {
        if (v) os << name << "=" << *v << " ";
    };
    f("dim", dim);
    f("derived", derived_dim);
    f("radical", radical_dim);
    f("unipotent", unipotent_dim);
    f("toral", toral_rank);
    f("killing", killing_rank);
    if (levi) {
        os << "levi=[";
        for (size_t i = 0; i < levi->size(); ++i) os << (i ? "+" : "") << simple_type_name((*levi)[i]);
        os << "] ";
    }
    if (reductive) os << (*reductive ? "reductive " : "non-reductive ");
    if (abelian && *abelian) os << "abelian ";
    std::string out = os.str();
    if (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string MatchReport::str() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL");
    for (const auto& f : fields)
        if (!f.ok) os << " [" << f.name << ": expected " << f.expected << ", got " << f.actual << "]";
    return os.str();
}

MatchReport match(const LieSignature& sig, const GroupExpr& e) {
    ExpectedSignature exp = expected_signature(e);
    MatchReport rep;
    auto check_int = [&](const char* name, const std::optional<int>& want, int got) {
        if (!want) return;
        rep.fields.push_back({name, std::to_string(*want), std::to_string(got), *want == got});
        rep.pass = rep.pass && *want == got;
    };
    check_int("dim", exp.dim, sig.dim);
    check_int("derived_dim", exp.derived_dim, sig.derived_dim);
    check_int("radical_dim", exp.radical_dim, sig.radical_dim);
    check_int("unipotent_dim", exp.unipotent_dim, sig.unipotent_dim);
    check_int("toral_rank", exp.toral_rank, sig.toral_rank);
    check_int("killing_rank", exp.killing_rank, sig.killing_rank);
    if (exp.levi) {
        auto name = [](const std::vector<SimpleType>& v) {
            std::string s = "[";
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "+" : "") + simple_type_name(v[i]);
            return s + "]";
        };
        bool ok = *exp.levi == sig.levi;
        rep.fields.push_back({"levi", name(*exp.levi), name(sig.levi), ok});
        rep.pass = rep.pass && ok;
    }
    auto check_bool = [&](const char* name, const std::optional<bool>& want, bool got) {
        if (!want) return;
        rep.fields.push_back({name, *want ? "true" : "false", got ? "true" : "false", *want == got});
        rep.pass = rep.pass && *want == got;
    };
    check_bool("reductive", exp.reductive, sig.reductive);
    check_bool("abelian", exp.abelian, sig.abelian);
    return rep;
}

}  // namespace fano
