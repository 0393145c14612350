#pragma once

#include <compare>
#include <optional>
#include <set>

#include "fano/catalog.hpp"

namespace fano {

/// Family identifier rho.N: Picard rank and index within the rank.
struct GimelId {
    int rho = 0;
    int n = 0;

    auto operator<=>(const GimelId&) const = default;
    std::string str() const { return std::to_string(rho) + "." + std::to_string(n); }
    static GimelId parse(const std::string& s);
};

enum class InfinityClass { always, sometimes, never };

std::string infinity_class_name(InfinityClass c);

struct ExceptionalMember {
    std::string description;
    GroupExpr group;
    std::string dimension_note;
};

/// One deformation family of the classification.
struct FanoFamily {
    GimelId id;
    InfinityClass infinity_class = InfinityClass::never;
    std::optional<GroupExpr> generic_aut0;  // nullopt: generic member finite
    std::vector<ExceptionalMember> exceptional_members;
    bool ke_obstructed = false;
    bool h12_positive = false;
    std::optional<int> degree;  // -K^3, recorded only where stated
    std::optional<std::string> h12_note;
    std::optional<int> family_dim;
    std::vector<std::string> model_refs;  // catalog cases verifying the row
    std::string note;
    std::string description;
};

/// The classification table, embedded at build time and also loadable from
/// a standalone file. Loading validates the content: ids unique, group
/// expressions well formed with self-consistent dimensions, ke flags equal
/// to the reductivity recomputation, model references resolvable.
class FanoDb {
public:
    static const FanoDb& instance();
    static FanoDb load_from_string(const std::string& text);
    static FanoDb load_from_file(const std::string& path);
    static const char* embedded_text();

    const std::vector<FanoFamily>& rows() const { return rows_; }
    const FanoFamily* find(const GimelId& id) const;

    std::set<GimelId> infinite_always() const;
    std::set<GimelId> infinite_sometimes() const;

    /// Always-infinite families whose generic Aut0 is non-reductive
    /// (the Matsushima obstruction applies to every member).
    std::set<GimelId> nonreductive_always() const;

    /// Families recorded with positive h^{1,2} and infinite automorphisms.
    std::set<GimelId> h12_infinite() const;

private:
    std::vector<FanoFamily> rows_;
};

}  // namespace fano
