#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/fanodb.hpp"

using namespace fano;

namespace {

std::set<GimelId> ids(std::initializer_list<const char*> list) {
    std::set<GimelId> out;
    for (const char* s : list) out.insert(GimelId::parse(s));
    return out;
}

// The always-infinite list of the classification: 1.15-1.17, 2.26-2.36,
// 3.9, 3.13-3.31, 4.2-4.12, 5.1-5.3, 6.1, ..., 10.1.
std::set<GimelId> theorem_always() {
    std::set<GimelId> out = ids({"1.15", "1.16", "1.17", "3.9"});
    for (int n = 26; n <= 36; ++n) out.insert({2, n});
    for (int n = 13; n <= 31; ++n) out.insert({3, n});
    for (int n = 2; n <= 12; ++n) out.insert({4, n});
    for (int n = 1; n <= 3; ++n) out.insert({5, n});
    for (int rho = 6; rho <= 10; ++rho) out.insert({rho, 1});
    return out;
}

}  // namespace

TEST_CASE("database loads, embedded and from file") {
    const FanoDb& db = FanoDb::instance();
    CHECK(db.rows().size() == 105);
    FanoDb file = FanoDb::load_from_file(std::string(SOURCE_DIR) + "/data/fano_families.tsv");
    CHECK(file.rows().size() == db.rows().size());
}

TEST_CASE("GimelId parsing") {
    auto id = GimelId::parse("2.28");
    CHECK(id.rho == 2);
    CHECK(id.n == 28);
    CHECK(id.str() == "2.28");
    CHECK_THROWS(GimelId::parse("228"));
    CHECK_THROWS(GimelId::parse("0.1"));
    CHECK_THROWS(GimelId::parse("ab.cd"));
}

TEST_CASE("lookup golden rows") {
    const FanoDb& db = FanoDb::instance();

    const FanoFamily* f = db.find(GimelId::parse("2.28"));
    REQUIRE(f);
    REQUIRE(f->generic_aut0.has_value());
    CHECK(f->generic_aut0->str() == "Ga^3 : Gm");
    REQUIRE(f->h12_note.has_value());
    CHECK(*f->h12_note == "h^{1,2}(X)=1");
    CHECK(f->ke_obstructed);

    const FanoFamily* g = db.find(GimelId::parse("2.24"));
    REQUIRE(g);
    CHECK(g->infinity_class == InfinityClass::sometimes);
    REQUIRE(g->exceptional_members.size() == 2);
    CHECK(g->exceptional_members[0].group.str() == "Gm");
    CHECK(g->exceptional_members[1].group.str() == "Gm^2");
    CHECK(!g->note.empty());

    const FanoFamily* h = db.find(GimelId::parse("3.2"));
    REQUIRE(h);
    CHECK(h->infinity_class == InfinityClass::never);
    CHECK(!h->generic_aut0);

    CHECK(db.find(GimelId::parse("2.37")) == nullptr);
}

TEST_CASE("infinite_always matches the classification list") {
    const FanoDb& db = FanoDb::instance();
    CHECK(db.infinite_always() == theorem_always());
    CHECK(db.infinite_always().size() == 53);
}

TEST_CASE("infinite_sometimes matches the classification list plus the two recorded discrepancies") {
    const FanoDb& db = FanoDb::instance();
    auto expected = ids({"1.10", "2.20", "2.21", "2.22", "3.5", "3.8", "3.10", "4.13"});
    expected.insert(GimelId::parse("2.24"));
    expected.insert(GimelId::parse("3.12"));
    CHECK(db.infinite_sometimes() == expected);
    // The discrepancy rows carry explanatory notes.
    CHECK(!db.find(GimelId::parse("2.24"))->note.empty());
    CHECK(!db.find(GimelId::parse("3.12"))->note.empty());

    std::set<GimelId> inter;
    for (const auto& id : db.infinite_always())
        if (db.infinite_sometimes().count(id)) inter.insert(id);
    CHECK(inter.empty());
}

TEST_CASE("nonreductive_always equals the Matsushima list") {
    const FanoDb& db = FanoDb::instance();
    auto expected = ids({"2.28", "2.30", "2.31", "2.33", "2.35", "2.36", "3.16", "3.18", "3.21",
                         "3.22", "3.23", "3.24", "3.26", "3.28", "3.29", "3.30", "3.31", "4.8",
                         "4.9", "4.10", "4.11", "4.12"});
    CHECK(db.nonreductive_always() == expected);
    CHECK(!db.nonreductive_always().count(GimelId::parse("3.27")));
    CHECK(!db.nonreductive_always().count(GimelId::parse("2.29")));
}

TEST_CASE("families where only a special member obstructs the metric") {
    const FanoDb& db = FanoDb::instance();
    std::set<GimelId> member_only;
    for (const auto& f : db.rows()) {
        if (!f.ke_obstructed) continue;
        bool generic_nonred = f.generic_aut0 && !(*expected_signature(*f.generic_aut0).reductive);
        if (!generic_nonred) member_only.insert(f.id);
    }
    CHECK(member_only == ids({"1.10", "2.21", "2.26", "3.13"}));
}

TEST_CASE("h12_infinite is the four-element set") {
    const FanoDb& db = FanoDb::instance();
    CHECK(db.h12_infinite() == ids({"2.28", "3.9", "3.14", "4.2"}));
    CHECK(!db.h12_infinite().count(GimelId::parse("2.27")));
}

TEST_CASE("degrees stored only where stated") {
    const FanoDb& db = FanoDb::instance();
    CHECK(*db.find(GimelId::parse("1.15"))->degree == 40);
    CHECK(*db.find(GimelId::parse("1.10"))->degree == 22);
    CHECK(!db.find(GimelId::parse("1.17"))->degree.has_value());
}

TEST_CASE("validation rejects corrupted databases") {
    CHECK_THROWS(FanoDb::load_from_string("2.28\talways\tGa^3 : Gm\t-\t-\tdup\n"
                                          "2.28\talways\tGa^3 : Gm\t-\t-\tdup\n"));
    // ke flag inconsistent with reductivity:
    CHECK_THROWS(FanoDb::load_from_string("2.27\talways\tPGL(2)\t-\tke\tx\n"));
    CHECK_THROWS(FanoDb::load_from_string("2.28\talways\tGa^3 : Gm\t-\t-\tmissing ke\n"));
    // always row without a group:
    CHECK_THROWS(FanoDb::load_from_string("2.27\talways\tfinite\t-\t-\tx\n"));
    // unknown model reference:
    CHECK_THROWS(FanoDb::load_from_string("2.27\talways\tPGL(2)\t-\tmodels=nope\tx\n"));
    // malformed group expression:
    CHECK_THROWS(FanoDb::load_from_string("2.27\talways\tPGL(\t-\t-\tx\n"));
}

TEST_CASE("model references verify against their rows") {
    const FanoDb& db = FanoDb::instance();
    // Quick rows only; the full sweep runs in the acceptance suite.
    for (const char* idstr : {"2.27", "2.28", "3.25"}) {
        const FanoFamily* f = db.find(GimelId::parse(idstr));
        REQUIRE(f);
        REQUIRE(!f->model_refs.empty());
        for (const auto& m : f->model_refs) {
            Report r = verify(build(m));
            CHECK(r.pass);
            REQUIRE(f->generic_aut0.has_value());
            CHECK(match(r.sig, *f->generic_aut0).pass);
        }
    }
}
