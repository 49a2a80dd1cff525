#pragma once

#include "agora/debate.hpp"
#include "agora/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace agora {

// One weighted scenario: an assumption base and rule set that generate a
// debate, plus the chance that fresh information would change the debate's
// verdict after the snapshot. A hand-written transcript may stand in for the
// generated one.
struct scenario {
    std::string id;
    rational weight;
    rational eps_new_info;
    std::vector<literal> assumptions; // canonical order
    std::vector<inference_rule> rules;
    std::optional<transcript> hand_transcript;
};

// Content identity: equal assumption sets and equal rule contents. Rule
// names, weights, eps values and transcripts are presentation, not content.
bool same_content(const scenario& a, const scenario& b);

saturation_result saturate(const scenario& s,
                           schedule_policy policy = schedule_policy::one_per_tick);

// Hand transcript if present, otherwise the saturated one.
transcript scenario_transcript(const scenario& s,
                               schedule_policy policy = schedule_policy::one_per_tick);

// Checks that a hand transcript stays within the scenario's theory: every
// articulated argument must match a saturated (conclusion, premises) pair and
// every rule chain entry must name a scenario rule. Throws error otherwise.
void verify_transcript_against(const scenario& s);

class ensemble {
public:
    ensemble(std::vector<scenario> scenarios, rational class_epsilon);

    const std::vector<scenario>& scenarios() const noexcept { return scenarios_; }
    const rational& class_epsilon() const noexcept { return class_epsilon_; }

private:
    std::vector<scenario> scenarios_;
    rational class_epsilon_;
};

enum class support_class { open, possible, probable, certain, inevitable };

const char* to_string(support_class c) noexcept;

// "Open", "5%-Possible", "Probable", "95%-Certain", "Inevitable" for
// eps = 0.05; the percents are the exact thresholds 100*eps and 100*(1-eps).
std::string class_display(support_class c, const rational& eps);

struct per_scenario_valuation {
    std::string scenario_id;
    rational weight;
    time_step time = 0;
    int value = 0;
};

struct support_report {
    literal claim;
    std::optional<time_step> requested_time;
    std::vector<per_scenario_valuation> valuations;
    rational support;
    rational class_epsilon;
    std::vector<support_class> classes; // ascending, open first
    support_class headline = support_class::open;
};

// Weighted mean of 0/1 valuations, exact.
rational support_from_valuations(std::span<const rational> weights,
                                 std::span<const int> valuations);

// Threshold classes for support m at tolerance eps in (0, 1/2):
//   open always; possible iff m >= eps; probable iff m >= 1/2;
//   certain iff m >= 1 - eps; inevitable iff m = 1 exactly.
std::vector<support_class> classify_support(const rational& m, const rational& eps);

// Valuates the claim in every scenario (at the given common time, or at each
// transcript's own horizon when t is absent) and classifies the weighted mean.
support_report ensemble_support(const ensemble& e, const literal& claim,
                                std::optional<time_step> t = {},
                                schedule_policy policy = schedule_policy::one_per_tick);

struct distinctness_verdict {
    std::string first;
    std::string second;
    bool distinct = true;
    std::string rule_case; // "1", "2A", "2B"
    std::string rationale;
    rational tau;
};

// Distinctness decision for a scenario pair:
//   case 1:  contents differ                       -> distinct
//   case 2A: same content, max(eps1, eps2) <= tau  -> not distinct
//   case 2B: same content, max(eps1, eps2) >  tau  -> distinct
distinctness_verdict distinctness(const scenario& a, const scenario& b, const rational& tau);

struct distinctness_audit {
    std::vector<distinctness_verdict> pairs;
    bool compliant = true; // every pair distinct
};

distinctness_audit audit_distinctness(const ensemble& e, const rational& tau);

// Chance that two same-content scenarios produce equal snapshot valuations is
// at least 1 - eps1 - eps2 (clamped at zero).
double prop3_lower_bound(double eps1, double eps2);
rational prop3_lower_bound(const rational& eps1, const rational& eps2);

} // namespace agora
