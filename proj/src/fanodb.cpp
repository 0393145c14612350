#include "fano/fanodb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fanodb_data.inc"

namespace fano {

GimelId GimelId::parse(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= s.size())
        throw std::invalid_argument("GimelId: expected rho.N, got '" + s + "'");
    GimelId id;
    try {
        id.rho = std::stoi(s.substr(0, dot));
        id.n = std::stoi(s.substr(dot + 1));
    } catch (...) {
        throw std::invalid_argument("GimelId: expected rho.N, got '" + s + "'");
    }
    if (id.rho < 1 || id.rho > 10 || id.n < 1)
        throw std::invalid_argument("GimelId: out of range: '" + s + "'");
    return id;
}

std::string infinity_class_name(InfinityClass c) {
    switch (c) {
        case InfinityClass::always: return "always";
        case InfinityClass::sometimes: return "sometimes";
        case InfinityClass::never: return "never";
    }
    return "?";
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool expr_reductive(const GroupExpr& e) {
    auto exp = expected_signature(e);
    if (!exp.reductive)
        throw std::invalid_argument("database: reductivity of '" + e.str() + "' is not determined");
    return *exp.reductive;
}

FanoFamily parse_row(const std::string& line, int lineno) {
    auto fields = split(line, '\t');
    if (fields.size() != 6)
        throw std::invalid_argument("database line " + std::to_string(lineno) + ": expected 6 fields, got " +
                                    std::to_string(fields.size()));
    FanoFamily f;
    f.id = GimelId::parse(trim(fields[0]));

    const std::string cls = trim(fields[1]);
    if (cls == "always")
        f.infinity_class = InfinityClass::always;
    else if (cls == "sometimes")
        f.infinity_class = InfinityClass::sometimes;
    else if (cls == "never")
        f.infinity_class = InfinityClass::never;
    else
        throw std::invalid_argument("database " + f.id.str() + ": bad class '" + cls + "'");

    const std::string gen = trim(fields[2]);
    if (gen != "finite") f.generic_aut0 = parse_group(gen);

    const std::string members = trim(fields[3]);
    if (members != "-" && !members.empty()) {
        for (const auto& entry : split(members, ';')) {
            auto parts = split(entry, '|');
            if (parts.size() != 3)
                throw std::invalid_argument("database " + f.id.str() + ": bad member entry '" + entry + "'");
            f.exceptional_members.push_back(
                {trim(parts[0]), parse_group(trim(parts[1])), trim(parts[2])});
        }
    }

    const std::string flags = trim(fields[4]);
    if (flags != "-" && !flags.empty()) {
        for (const auto& token : split(flags, ';')) {
            const std::string t = trim(token);
            auto eq = t.find('=');
            const std::string key = eq == std::string::npos ? t : t.substr(0, eq);
            const std::string value = eq == std::string::npos ? "" : t.substr(eq + 1);
            if (key == "ke")
                f.ke_obstructed = true;
            else if (key == "h12")
                f.h12_positive = true;
            else if (key == "deg")
                f.degree = std::stoi(value);
            else if (key == "famdim")
                f.family_dim = std::stoi(value);
            else if (key == "h12note")
                f.h12_note = value;
            else if (key == "note")
                f.note = value;
            else if (key == "models")
                for (const auto& m : split(value, ',')) f.model_refs.push_back(trim(m));
            else
                throw std::invalid_argument("database " + f.id.str() + ": unknown flag '" + key + "'");
        }
    }

    f.description = trim(fields[5]);
    if (f.description == "-") f.description.clear();
    return f;
}

void validate(const std::vector<FanoFamily>& rows) {
    std::set<GimelId> seen;
    for (const auto& f : rows) {
        if (!seen.insert(f.id).second)
            throw std::invalid_argument("database: duplicate id " + f.id.str());

        if (f.infinity_class == InfinityClass::always && !f.generic_aut0)
            throw std::invalid_argument("database " + f.id.str() + ": always-infinite row needs a group");
        if (f.infinity_class == InfinityClass::never &&
            (f.generic_aut0 || !f.exceptional_members.empty()))
            throw std::invalid_argument("database " + f.id.str() + ": never row cannot carry groups");
        if (f.infinity_class == InfinityClass::sometimes && f.exceptional_members.empty())
            throw std::invalid_argument("database " + f.id.str() + ": sometimes row needs members");

        // Dimension self-consistency, two routes, for every expression.
        auto check_expr = [&](const GroupExpr& e) {
            auto exp = expected_signature(e);
            if (!exp.dim || *exp.dim != flat_dimension(e))
                throw std::invalid_argument("database " + f.id.str() + ": dimension mismatch in '" +
                                            e.str() + "'");
        };
        if (f.generic_aut0) check_expr(*f.generic_aut0);
        for (const auto& m : f.exceptional_members) check_expr(m.group);

        // The Matsushima flag must equal its recomputation from reductivity.
        bool recomputed = false;
        if (f.generic_aut0) recomputed = !expr_reductive(*f.generic_aut0);
        for (const auto& m : f.exceptional_members) recomputed = recomputed || !expr_reductive(m.group);
        if (recomputed != f.ke_obstructed)
            throw std::invalid_argument("database " + f.id.str() +
                                        ": ke flag disagrees with the reductivity recomputation");

        for (const auto& m : f.model_refs)
            if (std::find(roster_names().begin(), roster_names().end(), m) == roster_names().end())
                throw std::invalid_argument("database " + f.id.str() + ": unknown model '" + m + "'");

        if (f.h12_note && !f.h12_positive)
            throw std::invalid_argument("database " + f.id.str() + ": h12note without h12 flag");
    }
}

}  // namespace

const char* FanoDb::embedded_text() { return kFanoDbData; }

FanoDb FanoDb::load_from_string(const std::string& text) {
    FanoDb db;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        db.rows_.push_back(parse_row(line, lineno));
    }
    validate(db.rows_);
    return db;
}

FanoDb FanoDb::load_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open database file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_from_string(buf.str());
}

const FanoDb& FanoDb::instance() {
    static const FanoDb db = load_from_string(kFanoDbData);
    return db;
}

const FanoFamily* FanoDb::find(const GimelId& id) const {
    for (const auto& f : rows_)
        if (f.id == id) return &f;
    return nullptr;
}

std::set<GimelId> FanoDb::infinite_always() const {
    std::set<GimelId> out;
    for (const auto& f : rows_)
        if (f.infinity_class == InfinityClass::always) out.insert(f.id);
    return out;
}

std::set<GimelId> FanoDb::infinite_sometimes() const {
    std::set<GimelId> out;
    for (const auto& f : rows_)
        if (f.infinity_class == InfinityClass::sometimes) out.insert(f.id);
    return out;
}

std::set<GimelId> FanoDb::nonreductive_always() const {
    std::set<GimelId> out;
    for (const auto& f : rows_)
        if (f.infinity_class == InfinityClass::always && f.generic_aut0 &&
            !expr_reductive(*f.generic_aut0))
            out.insert(f.id);
    return out;
}

std::set<GimelId> FanoDb::h12_infinite() const {
    std::set<GimelId> out;
    for (const auto& f : rows_)
        if (f.h12_positive && f.infinity_class != InfinityClass::never) out.insert(f.id);
    return out;
}

}  // namespace fano
