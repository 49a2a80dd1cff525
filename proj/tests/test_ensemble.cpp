#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agora/ensemble.hpp"

#include <string>
#include <vector>

using namespace agora;

namespace {

literal lit(const char* text) { return parse_literal(text); }

scenario make_scenario(std::string id, const char* weight, const char* eps,
                       std::vector<const char*> assumptions, std::vector<inference_rule> rules) {
    scenario s;
    s.id = std::move(id);
    s.weight = rational::parse_decimal(weight);
    s.eps_new_info = rational::parse_decimal(eps);
    for (const char* a : assumptions) s.assumptions.push_back(lit(a));
    s.rules = std::move(rules);
    return s;
}

// three weighted scenarios over one demand claim: two say yes, one says no
ensemble gmss() {
    std::vector<scenario> ss;
    ss.push_back(make_scenario("s1", "0.7", "0.05", {"terrestrial_expands", "use_everywhere"},
                               {make_rule("r1", {lit("terrestrial_expands"), lit("use_everywhere")},
                                          lit("demand_high"))}));
    ss.push_back(make_scenario("s2", "0.7", "0.05", {"terrestrial_expands", "content_with_coverage"},
                               {make_rule("r2",
                                          {lit("terrestrial_expands"), lit("content_with_coverage")},
                                          lit("!demand_high"))}));
    ss.push_back(make_scenario("s3", "0.3", "0.05", {"!terrestrial_expands", "use_everywhere"},
                               {make_rule("r3", {lit("!terrestrial_expands"), lit("use_everywhere")},
                                          lit("demand_high"))}));
    return ensemble(std::move(ss), rational::parse_decimal("0.05"));
}

} // namespace

TEST_CASE("content identity ignores rule names, weights and eps") {
    const scenario a =
        make_scenario("a", "0.5", "0.1", {"g"}, {make_rule("growth_rule", {lit("g")}, lit("c"))});
    const scenario b = make_scenario("b", "0.9", "0.4", {"g"},
                                     {make_rule("growth_rule_renamed", {lit("g")}, lit("c"))});
    CHECK(same_content(a, b));

    const scenario c = make_scenario("c", "0.5", "0.1", {"g"},
                                     {make_rule("growth_rule", {lit("g")}, lit("c"), "analogical")});
    CHECK_FALSE(same_content(a, c));

    const scenario d =
        make_scenario("d", "0.5", "0.1", {"h"}, {make_rule("growth_rule", {lit("g")}, lit("c"))});
    CHECK_FALSE(same_content(a, d));

    // assumption order and duplicates do not matter
    const scenario e = make_scenario("e", "0.5", "0.1", {"x", "g", "g", "x"},
                                     {make_rule("growth_rule", {lit("g")}, lit("c"))});
    const scenario f = make_scenario("f", "0.5", "0.1", {"g", "x"},
                                     {make_rule("growth_rule", {lit("g")}, lit("c"))});
    CHECK(same_content(e, f));
}

TEST_CASE("scenario transcripts come from saturation unless written by hand") {
    scenario s = make_scenario("s", "1", "0.05", {"p"}, {make_rule("hr1", {lit("p")}, lit("q"))});
    CHECK(scenario_transcript(s).arguments().size() == 2);

    move m;
    m.t = 1;
    m.action = move_action::articulate;
    argument a;
    a.id = "only";
    a.conclusion = lit("p");
    m.arg = a;
    s.hand_transcript = transcript({m});
    CHECK(scenario_transcript(s).arguments().size() == 1);
    CHECK(scenario_transcript(s).find("only") != nullptr);
}

TEST_CASE("hand transcripts are checked against the scenario theory") {
    scenario s = make_scenario("s", "1", "0.05", {"p"}, {make_rule("hr1", {lit("p")}, lit("q"))});
    verify_transcript_against(s); // no hand transcript: nothing to check

    const auto articulate = [](time_step t, const char* id, const char* concl,
                               std::vector<const char*> prem, std::vector<std::string> chain) {
        move m;
        m.t = t;
        m.action = move_action::articulate;
        argument a;
        a.id = id;
        a.conclusion = parse_literal(concl);
        for (const char* p : prem) a.premises.push_back(parse_literal(p));
        a.rule_chain = std::move(chain);
        m.arg = std::move(a);
        return m;
    };

    s.hand_transcript = transcript({articulate(1, "m1", "p", {}, {}),
                                    articulate(2, "m2", "q", {"p"}, {"hr1"})});
    verify_transcript_against(s);

    s.hand_transcript = transcript({articulate(1, "m3", "r", {"p"}, {"hr1"})});
    CHECK_THROWS_WITH(verify_transcript_against(s),
                      "scenario 's': argument 'm3' (r) is not derivable from the scenario");

    s.hand_transcript = transcript({articulate(1, "m4", "q", {"p"}, {"mystery"})});
    CHECK_THROWS_WITH(verify_transcript_against(s),
                      "scenario 's': argument 'm4' cites unknown rule 'mystery'");
}

TEST_CASE("ensemble construction validates scenarios") {
    CHECK_THROWS_WITH(ensemble({}, rational(1, 20)), "ensemble with no scenarios");

    const auto one = [&](const char* weight, const char* eps) {
        std::vector<scenario> ss;
        ss.push_back(make_scenario("s1", weight, eps, {"p"}, {}));
        return ss;
    };
    CHECK_THROWS_WITH(ensemble(one("1", "0.05"), rational(1, 2)),
                      "class epsilon 1/2 outside the open interval (0, 1/2)");
    CHECK_THROWS_WITH(ensemble(one("1", "0.05"), rational(0)),
                      "class epsilon 0 outside the open interval (0, 1/2)");
    CHECK_THROWS_WITH(ensemble(one("1.5", "0.05"), rational(1, 20)),
                      "scenario 's1' weight 3/2 outside [0, 1]");
    CHECK_THROWS_WITH(ensemble(one("0", "0.05"), rational(1, 20)),
                      "ensemble weights sum to zero");
    CHECK_THROWS_WITH(ensemble(one("1", "2"), rational(1, 20)),
                      "scenario 's1' eps_new_info 2 outside [0, 1]");

    std::vector<scenario> dup;
    dup.push_back(make_scenario("s1", "0.5", "0.05", {"p"}, {}));
    dup.push_back(make_scenario("s1", "0.5", "0.05", {"q"}, {}));
    CHECK_THROWS_WITH(ensemble(std::move(dup), rational(1, 20)), "duplicate scenario id 's1'");

    std::vector<scenario> dup_rule;
    dup_rule.push_back(make_scenario("s1", "0.5", "0.05", {"p"},
                                     {make_rule("r", {lit("p")}, lit("q")),
                                      make_rule("r", {lit("q")}, lit("z"))}));
    CHECK_THROWS_WITH(ensemble(std::move(dup_rule), rational(1, 20)),
                      "scenario 's1' has duplicate rule name 'r'");
}

TEST_CASE("support is the exact weighted mean of valuations") {
    const std::vector<rational> weights{rational(7, 10), rational(7, 10), rational(3, 10)};
    const std::vector<int> values{1, 0, 1};
    CHECK(support_from_valuations(weights, values) == rational(10, 17));

    CHECK(support_from_valuations(std::vector<rational>{rational(1)}, std::vector<int>{0}) ==
          rational(0));
    CHECK_THROWS_WITH(
        support_from_valuations(std::vector<rational>{rational(1)}, std::vector<int>{2}),
        "valuation 2 is not 0 or 1");
    CHECK_THROWS_WITH(support_from_valuations(weights, std::vector<int>{1}),
                      "weight and valuation counts differ");
    CHECK_THROWS_WITH(support_from_valuations({}, {}), "support of an empty ensemble");

    // scaling every weight leaves the mean unchanged
    std::vector<rational> doubled;
    for (const rational& w : weights) doubled.push_back(w * rational(2));
    CHECK(support_from_valuations(doubled, values) == rational(10, 17));
}

TEST_CASE("support classes grow with m and thresholds are inclusive") {
    const rational eps(1, 20);
    using sc = support_class;

    CHECK(classify_support(rational(1, 25), eps) == std::vector<sc>{sc::open});
    CHECK(classify_support(rational(1, 20), eps) == std::vector<sc>{sc::open, sc::possible});
    CHECK(classify_support(rational(1, 2), eps) ==
          std::vector<sc>{sc::open, sc::possible, sc::probable});
    CHECK(classify_support(rational(10, 17), eps) ==
          std::vector<sc>{sc::open, sc::possible, sc::probable});
    CHECK(classify_support(rational(19, 20), eps) ==
          std::vector<sc>{sc::open, sc::possible, sc::probable, sc::certain});
    CHECK(classify_support(rational(1), eps) ==
          std::vector<sc>{sc::open, sc::possible, sc::probable, sc::certain, sc::inevitable});
    CHECK(classify_support(rational(0), eps) == std::vector<sc>{sc::open});

    CHECK_THROWS_AS(classify_support(rational(1, 2), rational(1, 2)), error);
    CHECK_THROWS_AS(classify_support(rational(3, 2), eps), error);

    // each class list is a prefix of the next as m grows
    const std::vector<rational> points{rational(0),      rational(1, 25), rational(1, 20),
                                       rational(1, 3),   rational(1, 2),  rational(9, 10),
                                       rational(19, 20), rational(1)};
    for (std::size_t i = 1; i < points.size(); ++i) {
        const auto lo = classify_support(points[i - 1], eps);
        const auto hi = classify_support(points[i], eps);
        CHECK(lo.size() <= hi.size());
        CHECK(std::equal(lo.begin(), lo.end(), hi.begin()));
    }
}

TEST_CASE("class display carries the exact threshold percent") {
    const rational eps(1, 20);
    CHECK(class_display(support_class::open, eps) == "Open");
    CHECK(class_display(support_class::possible, eps) == "5%-Possible");
    CHECK(class_display(support_class::probable, eps) == "Probable");
    CHECK(class_display(support_class::certain, eps) == "95%-Certain");
    CHECK(class_display(support_class::inevitable, eps) == "Inevitable");

    const rational eighth(1, 8);
    CHECK(class_display(support_class::possible, eighth) == "12.5%-Possible");
    CHECK(class_display(support_class::certain, eighth) == "87.5%-Certain");
}

TEST_CASE("ensemble support on the three scenario fixture") {
    const ensemble e = gmss();
    const support_report r = ensemble_support(e, lit("demand_high"));

    CHECK(r.support == rational(10, 17));
    CHECK(r.classes == std::vector<support_class>{support_class::open, support_class::possible,
                                                  support_class::probable});
    CHECK(r.headline == support_class::probable);
    CHECK_FALSE(r.requested_time.has_value());

    REQUIRE(r.valuations.size() == 3);
    CHECK(r.valuations[0].scenario_id == "s1");
    CHECK(r.valuations[0].value == 1);
    CHECK(r.valuations[0].time == 3); // two assumptions plus one derived argument
    CHECK(r.valuations[1].value == 0);
    CHECK(r.valuations[2].value == 1);

    // the negated claim picks up the complementary valuations
    const support_report neg = ensemble_support(e, lit("!demand_high"));
    CHECK(neg.support == rational(7, 17));
    CHECK(neg.headline == support_class::possible);

    // nothing concludes an unrelated claim
    const support_report none = ensemble_support(e, lit("aliens"));
    CHECK(none.support == rational(0));
    CHECK(none.classes == std::vector<support_class>{support_class::open});
}

TEST_CASE("a common evaluation time overrides per scenario horizons") {
    const ensemble e = gmss();
    const support_report r = ensemble_support(e, lit("demand_high"), time_step{1});
    CHECK(r.requested_time == time_step{1});
    for (const per_scenario_valuation& v : r.valuations) {
        CHECK(v.time == 1);
        CHECK(v.value == 0); // the claim is not yet concluded one move in
    }
    CHECK(r.support == rational(0));
    CHECK(r.headline == support_class::open);
}

TEST_CASE("distinctness cases") {
    const scenario d1 = make_scenario("d1", "0.25", "0.01", {"market_grows"},
                                      {make_rule("growth_rule", {lit("market_grows")},
                                                 lit("adoption_rises"))});
    const scenario d2 = make_scenario("d2", "0.25", "0.02", {"market_grows"},
                                      {make_rule("growth_rule_renamed", {lit("market_grows")},
                                                 lit("adoption_rises"))});
    const scenario d3 = make_scenario("d3", "0.25", "0.5", {"market_shrinks"},
                                      {make_rule("shrink_rule", {lit("market_shrinks")},
                                                 lit("!adoption_rises"))});
    const scenario d4 = make_scenario("d4", "0.25", "0.5", {"market_grows"},
                                      {make_rule("growth_rule", {lit("market_grows")},
                                                 lit("adoption_rises"))});
    const rational tau(1, 10);

    const distinctness_verdict case1 = distinctness(d1, d3, tau);
    CHECK(case1.distinct);
    CHECK(case1.rule_case == "1");
    CHECK(case1.rationale == "assumption sets differ");

    const scenario d1_mode = make_scenario("d1m", "0.25", "0.01", {"market_grows"},
                                           {make_rule("growth_rule", {lit("market_grows")},
                                                      lit("adoption_rises"), "analogical")});
    const distinctness_verdict rules_differ = distinctness(d1, d1_mode, tau);
    CHECK(rules_differ.distinct);
    CHECK(rules_differ.rule_case == "1");
    CHECK(rules_differ.rationale == "rule contents differ");

    const distinctness_verdict case2a = distinctness(d1, d2, tau);
    CHECK_FALSE(case2a.distinct);
    CHECK(case2a.rule_case == "2A");

    const distinctness_verdict case2b = distinctness(d1, d4, tau);
    CHECK(case2b.distinct);
    CHECK(case2b.rule_case == "2B");
    // rationale cites the clamped agreement bound 1 - 0.01 - 0.5
    CHECK(case2b.rationale.find("0.49") != std::string::npos);

    // boundary: max eps equal to tau still collapses the pair
    const distinctness_verdict boundary = distinctness(d1, d2, rational::parse_decimal("0.02"));
    CHECK_FALSE(boundary.distinct);
    CHECK(boundary.rule_case == "2A");

    // verdicts are symmetric in the pair
    for (const auto* other : {&d2, &d3, &d4}) {
        const distinctness_verdict ab = distinctness(d1, *other, tau);
        const distinctness_verdict ba = distinctness(*other, d1, tau);
        CHECK(ab.distinct == ba.distinct);
        CHECK(ab.rule_case == ba.rule_case);
    }
}

TEST_CASE("distinctness audit sweeps all pairs") {
    const ensemble e = gmss();
    const distinctness_audit audit = audit_distinctness(e, rational(1, 10));
    CHECK(audit.pairs.size() == 3);
    CHECK(audit.compliant);
    for (const distinctness_verdict& v : audit.pairs) {
        CHECK(v.distinct);
        CHECK(v.rule_case == "1");
    }

    std::vector<scenario> clones;
    clones.push_back(make_scenario("c1", "0.5", "0.01", {"p"}, {}));
    clones.push_back(make_scenario("c2", "0.5", "0.02", {"p"}, {}));
    const distinctness_audit bad =
        audit_distinctness(ensemble(std::move(clones), rational(1, 20)), rational(1, 10));
    CHECK_FALSE(bad.compliant);
    CHECK(bad.pairs.size() == 1);
    CHECK(bad.pairs[0].rule_case == "2A");
}

TEST_CASE("agreement lower bound clamps at zero") {
    CHECK(prop3_lower_bound(0.1, 0.2) == doctest::Approx(0.7));
    CHECK(prop3_lower_bound(0.9, 0.8) == 0.0);
    CHECK(prop3_lower_bound(rational(1, 10), rational(1, 5)) == rational(7, 10));
    CHECK(prop3_lower_bound(rational(9, 10), rational(4, 5)) == rational(0));
}
