#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agora/io.hpp"

#include <fstream>
#include <string>

using namespace agora;

namespace {

literal lit(const char* text) { return parse_literal(text); }

const std::string fixture_dir = AGORA_FIXTURE_DIR;
const std::string data_dir = AGORA_DATA_DIR;

} // namespace

TEST_CASE("transcript files round trip") {
    const transcript tr = read_transcript(fixture_dir + "/three_argument_story.json");
    REQUIRE(tr.arguments().size() == 3);
    CHECK(tr.find("a_claim")->rule_chain == std::vector<std::string>{"r_support"});
    CHECK(timeline(tr, lit("theta")) == std::vector<int>{1, 0, 1});

    const ojson emitted = transcript_to_json(tr);
    const transcript reparsed = parse_transcript(emitted, "memory");
    CHECK(transcript_to_json(reparsed).dump() == emitted.dump());
    CHECK(emitted["format_version"] == 1);
    CHECK(emitted["moves"][0]["kind"] == "articulate");
}

TEST_CASE("retraction moves round trip") {
    const transcript tr = read_transcript(fixture_dir + "/retraction.json");
    CHECK(tr.active_arguments(6).size() == 1);
    CHECK(tr.active_arguments(7).empty());

    const ojson emitted = transcript_to_json(tr);
    CHECK(emitted["moves"][1]["kind"] == "retract");
    CHECK(emitted["moves"][1]["argument_id"] == "a1");
    CHECK(transcript_to_json(parse_transcript(emitted, "memory")).dump() == emitted.dump());
}

TEST_CASE("optional argument fields survive the round trip") {
    ojson doc;
    doc["format_version"] = 1;
    doc["moves"] = ojson::array();
    ojson mv;
    mv["t"] = 1;
    mv["kind"] = "articulate";
    ojson arg;
    arg["id"] = "a1";
    arg["conclusion"] = "x";
    arg["premises"] = ojson::array({"p"});
    arg["rule_chain"] = ojson::array({"r"});
    arg["strength"] = "confirmed";
    arg["proponent"] = "analyst_2";
    mv["argument"] = std::move(arg);
    doc["moves"].push_back(std::move(mv));

    const transcript tr = parse_transcript(doc, "doc");
    CHECK(tr.find("a1")->strength == "confirmed");
    CHECK(tr.find("a1")->proponent == "analyst_2");
    const ojson emitted = transcript_to_json(tr);
    CHECK(emitted["moves"][0]["argument"]["strength"] == "confirmed");
    CHECK(emitted["moves"][0]["argument"]["proponent"] == "analyst_2");
}

TEST_CASE("strict transcript schema") {
    ojson doc;
    doc["format_version"] = 1;
    doc["moves"] = ojson::array();

    SUBCASE("unknown top level field") {
        doc["extra"] = 3;
        try {
            parse_transcript(doc, "doc");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.extra");
            CHECK(std::string(e.what()) == "doc.extra: unknown field");
        }
    }

    SUBCASE("missing format_version") {
        doc.erase("format_version");
        try {
            parse_transcript(doc, "doc");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.format_version");
        }
    }

    SUBCASE("wrong format_version") {
        doc["format_version"] = 2;
        CHECK_THROWS_WITH(parse_transcript(doc, "doc"),
                          "doc.format_version: must be the integer 1");
    }

    SUBCASE("unknown move kind") {
        ojson mv;
        mv["t"] = 1;
        mv["kind"] = "whisper";
        doc["moves"].push_back(std::move(mv));
        CHECK_THROWS_WITH(parse_transcript(doc, "doc"),
                          "doc.moves[0].kind: expected \"articulate\" or \"retract\"");
    }

    SUBCASE("bad literal in argument") {
        ojson mv;
        mv["t"] = 1;
        mv["kind"] = "articulate";
        ojson arg;
        arg["id"] = "a1";
        arg["conclusion"] = "!!x";
        arg["premises"] = ojson::array();
        arg["rule_chain"] = ojson::array();
        mv["argument"] = std::move(arg);
        doc["moves"].push_back(std::move(mv));
        try {
            parse_transcript(doc, "doc");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.moves[0].argument.conclusion");
        }
    }

    SUBCASE("semantic violations point at the move list") {
        ojson mv;
        mv["t"] = 1;
        mv["kind"] = "retract";
        mv["argument_id"] = "ghost";
        doc["moves"].push_back(std::move(mv));
        try {
            parse_transcript(doc, "doc");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.moves");
            CHECK(std::string(e.what()).find("retraction of unknown argument 'ghost'") !=
                  std::string::npos);
        }
    }
}

TEST_CASE("ensemble files load with exact arithmetic") {
    const ensemble e = read_ensemble(data_dir + "/gmss.json");
    REQUIRE(e.scenarios().size() == 3);
    CHECK(e.class_epsilon() == rational(1, 20));
    CHECK(e.scenarios()[0].weight == rational(7, 10));
    CHECK(e.scenarios()[2].weight == rational(3, 10));
    CHECK(e.scenarios()[1].rules[0].consequent == lit("!demand_high"));
    CHECK(e.scenarios()[0].rules[0].mode == "deductive");

    const support_report r = ensemble_support(e, lit("demand_high"));
    CHECK(r.support == rational(10, 17));

    // emitted form reparses to the same document
    const ojson emitted = ensemble_to_json(e);
    const ensemble reparsed = parse_ensemble(emitted, "memory", ".");
    CHECK(ensemble_to_json(reparsed).dump() == emitted.dump());
    CHECK(emitted["scenarios"][0]["weight"] == "0.7");
}

TEST_CASE("hand transcripts load relative to the ensemble file") {
    const ensemble e = read_ensemble(fixture_dir + "/hand_ensemble.json");
    REQUIRE(e.scenarios().size() == 1);
    REQUIRE(e.scenarios()[0].hand_transcript.has_value());
    CHECK(e.scenarios()[0].hand_transcript->arguments().size() == 2);
    verify_transcript_against(e.scenarios()[0]);

    // the bad variant parses fine; only verification against the theory fails
    const ensemble bad = read_ensemble(fixture_dir + "/hand_bad_ensemble.json");
    CHECK_THROWS_AS(verify_transcript_against(bad.scenarios()[0]), error);
}

TEST_CASE("strict ensemble schema") {
    ojson doc;
    doc["format_version"] = 1;
    doc["class_epsilon"] = "0.05";
    doc["scenarios"] = ojson::array();
    ojson sc;
    sc["id"] = "s1";
    sc["weight"] = "0.7";
    sc["eps_new_info"] = "0.05";
    sc["assumptions"] = ojson::array({"p"});
    sc["rules"] = ojson::array();
    doc["scenarios"].push_back(sc);

    SUBCASE("well formed baseline parses") {
        const ensemble e = parse_ensemble(doc, "doc", ".");
        CHECK(e.scenarios().size() == 1);
    }

    SUBCASE("float weights are rejected with advice") {
        doc["scenarios"][0]["weight"] = 0.7;
        try {
            parse_ensemble(doc, "doc", ".");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.scenarios[0].weight");
            CHECK(std::string(e.what()).find("floating-point literals lose exactness") !=
                  std::string::npos);
        }
    }

    SUBCASE("float class_epsilon is rejected") {
        doc["class_epsilon"] = 0.05;
        CHECK_THROWS_AS(parse_ensemble(doc, "doc", "."), schema_error);
    }

    SUBCASE("integer weights are exact and accepted") {
        doc["scenarios"][0]["weight"] = 1;
        CHECK(parse_ensemble(doc, "doc", ".").scenarios()[0].weight == rational(1));
    }

    SUBCASE("unknown scenario field") {
        doc["scenarios"][0]["color"] = "green";
        try {
            parse_ensemble(doc, "doc", ".");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.scenarios[0].color");
        }
    }

    SUBCASE("rule problems name the rule") {
        ojson rule;
        rule["name"] = "";
        rule["antecedents"] = ojson::array({"p"});
        rule["consequent"] = "q";
        rule["mode"] = "deductive";
        doc["scenarios"][0]["rules"].push_back(std::move(rule));
        try {
            parse_ensemble(doc, "doc", ".");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.scenarios[0].rules[0]");
        }
    }

    SUBCASE("ensemble level violations name the document") {
        doc["scenarios"].push_back(doc["scenarios"][0]);
        try {
            parse_ensemble(doc, "doc", ".");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc");
            CHECK(std::string(e.what()).find("duplicate scenario id 's1'") != std::string::npos);
        }
    }
}

TEST_CASE("timeline documents") {
    ojson doc;
    doc["format_version"] = 1;
    doc["claim"] = "x";
    doc["values"] = ojson::array({0, 1, 1});

    const snapshot_sequence seq = parse_timeline(doc, "doc");
    CHECK(seq.claim == lit("x"));
    CHECK(seq.values == std::vector<int>{0, 1, 1});
    CHECK(seq.source == "doc");

    SUBCASE("headlines ride along and are ignored") {
        doc["headlines"] = ojson::array({"Open", "Accepted", "Accepted"});
        CHECK(parse_timeline(doc, "doc").values == std::vector<int>{0, 1, 1});
    }

    SUBCASE("headline length must match") {
        doc["headlines"] = ojson::array({"Open"});
        CHECK_THROWS_AS(parse_timeline(doc, "doc"), schema_error);
    }

    SUBCASE("values must be 0 or 1") {
        doc["values"] = ojson::array({0, 2});
        try {
            parse_timeline(doc, "doc");
            FAIL("expected schema_error");
        } catch (const schema_error& e) {
            CHECK(e.field() == "doc.values[1]");
        }
    }

    const std::vector<int> values{0, 1, 1};
    const std::vector<std::string> headlines{"Open", "Accepted", "Accepted"};
    const ojson with = timeline_to_json(lit("x"), values, headlines);
    CHECK(with.contains("headlines"));
    CHECK(parse_timeline(with, "emitted").values == values);
    const ojson without = timeline_to_json(lit("x"), values);
    CHECK_FALSE(without.contains("headlines"));
}

TEST_CASE("report serializers carry exact and nested forms") {
    const ojson rj = to_json(rational(10, 17));
    CHECK(rj["numerator"] == 10);
    CHECK(rj["denominator"] == 17);
    CHECK(rj["decimal"] == "0.588235");

    const ensemble e = read_ensemble(data_dir + "/gmss.json");
    const support_report sr = ensemble_support(e, lit("demand_high"));
    const ojson sj = to_json(sr);
    CHECK(sj["support"]["numerator"] == 10);
    CHECK(sj["classes"] == ojson::array({"Open", "5%-Possible", "Probable"}));
    CHECK(sj["headline"] == "Probable");
    CHECK(sj["per_scenario"].size() == 3);
    CHECK(sj["per_scenario"][1]["valuation"] == 0);
    CHECK_FALSE(sj.contains("time"));

    const distinctness_audit audit = audit_distinctness(e, rational(1, 10));
    const ojson aj = to_json(audit);
    CHECK(aj["compliant"] == true);
    CHECK(aj["pairs"].size() == 3);
    CHECK(aj["pairs"][0]["verdict"] == "Distinct");
    CHECK(aj["pairs"][0]["case"] == "1");
}

TEST_CASE("file level diagnostics") {
    CHECK_THROWS_WITH(load_json_file("/nonexistent/nowhere.json"),
                      "cannot open '/nonexistent/nowhere.json'");

    const std::string broken = "/tmp/agora_broken.json";
    std::ofstream(broken) << "{ not json";
    CHECK_THROWS_AS(load_json_file(broken), parse_error);
}

TEST_CASE("distinct cases fixture drives the three verdicts") {
    const ensemble e = read_ensemble(data_dir + "/distinct_cases.json");
    REQUIRE(e.scenarios().size() == 4);
    const rational tau(1, 10);

    const distinctness_verdict case1 =
        distinctness(e.scenarios()[2], e.scenarios()[0], tau); // d3 vs d1
    CHECK(case1.rule_case == "1");
    CHECK(case1.distinct);

    const distinctness_verdict case2a =
        distinctness(e.scenarios()[0], e.scenarios()[1], tau); // d1 vs d2
    CHECK(case2a.rule_case == "2A");
    CHECK_FALSE(case2a.distinct);

    const distinctness_verdict case2b =
        distinctness(e.scenarios()[3], e.scenarios()[0], tau); // d4 vs d1
    CHECK(case2b.rule_case == "2B");
    CHECK(case2b.distinct);
}
