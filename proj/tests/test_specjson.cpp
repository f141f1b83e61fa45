#include "cogrowth/oracle.hpp"
#include "cogrowth/spec_json.hpp"
#include "doctest.h"

using namespace cogrowth;

TEST_CASE("parse_spec_json: cyclic, table, Z kinds") {
    FreeProductSpec a = parse_spec_json(
        R"([{"kind":"cyclic","order":3,"gens":["x","x^-1"],"multiplicity":2}])");
    CHECK(a.factors.size() == 1);
    CHECK(a.factors[0].order() == 3);
    CHECK(a.factors[0].multiplicity == 2);
    CHECK(a.factors[0].symmetric_gens);

    FreeProductSpec b = parse_spec_json(
        R"({"factors":[{"kind":"table","mul":[[0,1],[1,0]],"gens":[1]},)"
        R"({"kind":"Z","multiplicity":2}]})");
    CHECK(b.factors.size() == 2);
    CHECK(b.factors[0].order() == 2);
    CHECK(b.factors[1].kind == FactorSpec::Kind::infinite_cyclic);
    CHECK(b.factors[1].multiplicity == 2);

    // default multiplicity is 1
    FreeProductSpec c = parse_spec_json(R"([{"kind":"cyclic","order":4,"gens":["x"]}])");
    CHECK(c.factors[0].multiplicity == 1);
}

TEST_CASE("parse_spec_json: parsed spec drives the oracle") {
    FreeProductSpec spec = parse_spec_json(
        R"([{"kind":"cyclic","order":2,"gens":["x"]},)"
        R"({"kind":"cyclic","order":3,"gens":["x"]}])");
    auto a = cogrowth_sequence(spec, 7);
    std::vector<long> expect{1, 0, 1, 1, 1, 5, 2, 14};
    for (int i = 0; i <= 7; ++i) CHECK(a[i] == expect[i]);
}

TEST_CASE("parse_spec_json: error paths") {
    // syntax error carries line:column
    try {
        parse_spec_json("[{\"kind\":\n  oops]");
        FAIL("expected SpecParseError");
    } catch (const SpecParseError& e) {
        CHECK(std::string(e.what()).find("2:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec_json("[]"), SpecParseError);
    CHECK_THROWS_AS(parse_spec_json("{}"), SpecParseError);
    CHECK_THROWS_AS(parse_spec_json(R"([{"kind":"what"}])"), SpecParseError);
    CHECK_THROWS_AS(parse_spec_json(R"([{"kind":"cyclic","order":3,"gens":["y"]}])"),
                    SpecParseError);
    CHECK_THROWS_AS(parse_spec_json(R"([{"kind":"cyclic","order":1,"gens":["x"]}])"),
                    SpecParseError);
    // identity generator is rejected by the generating-set rules
    CHECK_THROWS_AS(
        parse_spec_json(R"([{"kind":"table","mul":[[0,1],[1,0]],"gens":[0]}])"),
        SpecParseError);
    // non-group table
    CHECK_THROWS_AS(
        parse_spec_json(R"([{"kind":"table","mul":[[0,0],[1,1]],"gens":[1]}])"),
        SpecParseError);
}

TEST_CASE("render_spec_json round-trips through parse") {
    std::vector<std::string> inputs{
        R"([{"kind":"cyclic","order":5,"gens":["x","x^-1"],"multiplicity":3}])",
        R"([{"kind":"Z","multiplicity":2},{"kind":"cyclic","order":2,"gens":["x"]}])",
        R"([{"kind":"table","mul":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],)"
        R"("gens":[1,2]}])"};
    for (const std::string& text : inputs) {
        FreeProductSpec s1 = parse_spec_json(text);
        FreeProductSpec s2 = parse_spec_json(render_spec_json(s1));
        REQUIRE(s1.factors.size() == s2.factors.size());
        for (std::size_t i = 0; i < s1.factors.size(); ++i) {
            CHECK(s1.factors[i].kind == s2.factors[i].kind);
            CHECK(s1.factors[i].mul == s2.factors[i].mul);
            CHECK(s1.factors[i].gens == s2.factors[i].gens);
            CHECK(s1.factors[i].multiplicity == s2.factors[i].multiplicity);
        }
    }
}

TEST_CASE("family shortcuts") {
    auto cy = family_cyclic(3, 2);
    CHECK(cy.factors.size() == 1);
    CHECK(cy.factors[0].order() == 3);
    CHECK(cy.factors[0].multiplicity == 2);

    auto zn = family_z2zn(5);
    CHECK(zn.factors.size() == 2);
    CHECK(zn.factors[1].order() == 5);

    auto zf = family_z2_free(2, 1);
    CHECK(zf.factors.size() == 2);
    CHECK(zf.factors[0].multiplicity == 2);
    CHECK(zf.factors[1].kind == FactorSpec::Kind::infinite_cyclic);
    CHECK(family_z2_free(0, 2).factors.size() == 1);

    CHECK_THROWS_AS(family_cyclic(1, 1), std::domain_error);
    CHECK_THROWS_AS(family_z2zn(2), std::domain_error);
    CHECK_THROWS_AS(family_z2_free(0, 0), std::domain_error);
}
