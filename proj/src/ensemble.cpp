#include "agora/ensemble.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace agora {

bool same_content(const scenario& a, const scenario& b) {
    if (literal_set(a.assumptions) != literal_set(b.assumptions)) return false;
    std::set<rule_content> ra, rb;
    for (const inference_rule& r : a.rules) ra.insert(content_of(r));
    for (const inference_rule& r : b.rules) rb.insert(content_of(r));
    return ra == rb;
}

saturation_result saturate(const scenario& s, schedule_policy policy) {
    return saturate(s.assumptions, s.rules, policy);
}

transcript scenario_transcript(const scenario& s, schedule_policy policy) {
    if (s.hand_transcript) return *s.hand_transcript;
    return saturate(s, policy).tr;
}

void verify_transcript_against(const scenario& s) {
    if (!s.hand_transcript) return;
    std::set<std::pair<literal, std::vector<literal>>> derivable;
    saturation_result sat = saturate(s);
    for (const argument* a : sat.tr.arguments()) derivable.insert({a->conclusion, a->premises});
    std::unordered_set<std::string_view> rule_names;
    for (const inference_rule& r : s.rules) rule_names.insert(r.name);

    for (const argument* a : s.hand_transcript->arguments()) {
        if (!derivable.count({a->conclusion, a->premises}))
            throw error("scenario '" + s.id + "': argument '" + a->id + "' (" +
                        to_string(a->conclusion) + ") is not derivable from the scenario");
        for (const std::string& r : a->rule_chain) {
            if (!rule_names.count(r))
                throw error("scenario '" + s.id + "': argument '" + a->id +
                            "' cites unknown rule '" + r + "'");
        }
    }
}

ensemble::ensemble(std::vector<scenario> scenarios, rational class_epsilon)
    : scenarios_(std::move(scenarios)), class_epsilon_(class_epsilon) {
    if (scenarios_.empty()) throw error("ensemble with no scenarios");
    if (!(class_epsilon_ > rational(0) && class_epsilon_ < rational(1, 2)))
        throw error("class epsilon " + class_epsilon_.to_string() +
                    " outside the open interval (0, 1/2)");
    std::unordered_set<std::string_view> ids;
    rational total;
    for (scenario& s : scenarios_) {
        if (s.id.empty()) throw error("scenario with empty id");
        if (!ids.insert(s.id).second) throw error("duplicate scenario id '" + s.id + "'");
        if (s.weight < rational(0) || s.weight > rational(1))
            throw error("scenario '" + s.id + "' weight " + s.weight.to_string() +
                        " outside [0, 1]");
        if (s.eps_new_info < rational(0) || s.eps_new_info > rational(1))
            throw error("scenario '" + s.id + "' eps_new_info " + s.eps_new_info.to_string() +
                        " outside [0, 1]");
        std::unordered_set<std::string_view> rule_names;
        for (const inference_rule& r : s.rules) {
            if (!rule_names.insert(r.name).second)
                throw error("scenario '" + s.id + "' has duplicate rule name '" + r.name + "'");
        }
        s.assumptions = literal_set(std::move(s.assumptions));
        total += s.weight;
    }
    if (total == rational(0)) throw error("ensemble weights sum to zero");
}

const char* to_string(support_class c) noexcept {
    switch (c) {
        case support_class::open: return "Open";
        case support_class::possible: return "Possible";
        case support_class::probable: return "Probable";
        case support_class::certain: return "Certain";
        case support_class::inevitable: return "Inevitable";
    }
    return "Open";
}

std::string class_display(support_class c, const rational& eps) {
    switch (c) {
        case support_class::possible:
            return (rational(100) * eps).to_decimal_string(18) + "%-" + to_string(c);
        case support_class::certain:
            return (rational(100) * (rational(1) - eps)).to_decimal_string(18) + "%-" +
                   to_string(c);
        default:
            return to_string(c);
    }
}

rational support_from_valuations(std::span<const rational> weights,
                                 std::span<const int> valuations) {
    if (weights.size() != valuations.size())
        throw error("weight and valuation counts differ");
    if (weights.empty()) throw error("support of an empty ensemble");
    rational num, den;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (valuations[i] != 0 && valuations[i] != 1)
            throw error("valuation " + std::to_string(valuations[i]) + " is not 0 or 1");
        den += weights[i];
        if (valuations[i] == 1) num += weights[i];
    }
    if (den == rational(0)) throw error("ensemble weights sum to zero");
    return num / den;
}

std::vector<support_class> classify_support(const rational& m, const rational& eps) {
    if (!(eps > rational(0) && eps < rational(1, 2)))
        throw error("class epsilon " + eps.to_string() + " outside the open interval (0, 1/2)");
    if (m < rational(0) || m > rational(1))
        throw error("support " + m.to_string() + " outside [0, 1]");
    std::vector<support_class> classes{support_class::open};
    if (m >= eps) classes.push_back(support_class::possible);
    if (m >= rational(1, 2)) classes.push_back(support_class::probable);
    if (m >= rational(1) - eps) classes.push_back(support_class::certain);
    if (m == rational(1)) classes.push_back(support_class::inevitable);
    return classes;
}

support_report ensemble_support(const ensemble& e, const literal& claim,
                                std::optional<time_step> t, schedule_policy policy) {
    support_report report;
    report.claim = claim;
    report.requested_time = t;
    report.class_epsilon = e.class_epsilon();

    std::vector<rational> weights;
    std::vector<int> values;
    for (const scenario& s : e.scenarios()) {
        transcript tr = scenario_transcript(s, policy);
        time_step when = t ? *t : tr.horizon();
        int v = truth_valuation(tr, claim, when);
        report.valuations.push_back({s.id, s.weight, when, v});
        weights.push_back(s.weight);
        values.push_back(v);
    }
    report.support = support_from_valuations(weights, values);
    report.classes = classify_support(report.support, e.class_epsilon());
    report.headline = report.classes.back();
    return report;
}

distinctness_verdict distinctness(const scenario& a, const scenario& b, const rational& tau) {
    distinctness_verdict v;
    v.first = a.id;
    v.second = b.id;
    v.tau = tau;
    if (!same_content(a, b)) {
        v.distinct = true;
        v.rule_case = "1";
        v.rationale = literal_set(a.assumptions) != literal_set(b.assumptions)
                          ? "assumption sets differ"
                          : "rule contents differ";
        return v;
    }
    rational worst = max(a.eps_new_info, b.eps_new_info);
    if (worst <= tau) {
        v.distinct = false;
        v.rule_case = "2A";
        v.rationale = "same content and max new-information probability " +
                      worst.to_decimal_string(18) + " is within tolerance " +
                      tau.to_decimal_string(18) + "; treat as one scenario";
        return v;
    }
    v.distinct = true;
    v.rule_case = "2B";
    rational bound = prop3_lower_bound(a.eps_new_info, b.eps_new_info);
    v.rationale = "same content but max new-information probability " +
                  worst.to_decimal_string(18) + " exceeds tolerance " +
                  tau.to_decimal_string(18) + "; snapshot valuations agree with probability at least " +
                  bound.to_decimal_string(18) + ", leaving room for divergence";
    return v;
}

distinctness_audit audit_distinctness(const ensemble& e, const rational& tau) {
    distinctness_audit audit;
    const auto& ss = e.scenarios();
    for (std::size_t i = 0; i < ss.size(); ++i) {
        for (std::size_t j = i + 1; j < ss.size(); ++j) {
            audit.pairs.push_back(distinctness(ss[i], ss[j], tau));
            if (!audit.pairs.back().distinct) audit.compliant = false;
        }
    }
    return audit;
}

double prop3_lower_bound(double eps1, double eps2) {
    return std::max(0.0, 1.0 - eps1 - eps2);
}

rational prop3_lower_bound(const rational& eps1, const rational& eps2) {
    return max(rational(0), rational(1) - eps1 - eps2);
}

} // namespace agora
