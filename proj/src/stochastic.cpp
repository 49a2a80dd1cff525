#include "agora/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace agora {

namespace {

void require_trials(std::size_t trials) {
    if (trials < min_bound_trials)
        throw error("bound checks need at least " + std::to_string(min_bound_trials) +
                    " trials, got " + std::to_string(trials));
}

double binomial_se(double p, std::size_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

bound_report make_report(std::string id, bound_direction dir, double bound, std::size_t hits,
                         std::size_t cell_trials, std::uint64_t seed) {
    bound_report r;
    r.id = std::move(id);
    r.direction = dir;
    r.bound = bound;
    r.trials = cell_trials;
    r.seed = seed;
    if (cell_trials == 0) {
        r.evaluable = false;
        r.satisfied_within_3se = true; // vacuous: nothing to weigh against the bound
        return r;
    }
    r.frequency = static_cast<double>(hits) / static_cast<double>(cell_trials);
    r.standard_error = binomial_se(r.frequency, cell_trials);
    double slack = 3.0 * r.standard_error;
    r.satisfied_within_3se = dir == bound_direction::at_least ? r.frequency >= bound - slack
                                                             : r.frequency <= bound + slack;
    return r;
}

struct pair_draw {
    bool new_info1 = false;
    bool new_info2 = false;
};

pair_draw draw_new_info(const debate_model& m1, const debate_model& m2, coupling cpl,
                        trial_rng& rng) {
    pair_draw d;
    if (cpl == coupling::independent) {
        d.new_info1 = rng.uniform01() < m1.actual_new_info_prob;
        d.new_info2 = rng.uniform01() < m2.actual_new_info_prob;
    } else {
        double u = rng.uniform01();
        d.new_info1 = u < m1.actual_new_info_prob;
        d.new_info2 = u < m2.actual_new_info_prob;
    }
    return d;
}

int resolve_limit(const debate_model& m, bool new_info, trial_rng& rng) {
    if (new_info && rng.bernoulli(m.flip_prob_given_new_info)) return 1 - m.initial_value;
    return m.initial_value;
}

} // namespace

void debate_model::validate() const {
    if (saturation_time < 0) throw error("saturation time is negative");
    if (snapshot_time < saturation_time)
        throw error("snapshot time " + std::to_string(snapshot_time) +
                    " precedes saturation time " + std::to_string(saturation_time));
    if (horizon < snapshot_time)
        throw error("horizon " + std::to_string(horizon) + " precedes snapshot time " +
                    std::to_string(snapshot_time));
    if (eps_new_info < 0.0 || eps_new_info > 1.0)
        throw error("eps_new_info outside [0, 1]");
    if (actual_new_info_prob < 0.0 || actual_new_info_prob > eps_new_info)
        throw error("actual new-information probability outside [0, eps_new_info]");
    if (flip_prob_given_new_info < 0.0 || flip_prob_given_new_info > 1.0)
        throw error("flip probability outside [0, 1]");
    if (initial_value != 0 && initial_value != 1) throw error("initial value is not 0 or 1");
}

trial_result gen_trial(const debate_model& model, std::uint64_t seed) {
    model.validate();
    trial_rng rng(seed);
    trial_result r;
    r.v_at_snapshot = model.initial_value;
    r.new_info_occurred = rng.uniform01() < model.actual_new_info_prob;
    r.v_infinity = resolve_limit(model, r.new_info_occurred, rng);
    r.converged = true;
    return r;
}

const char* to_string(bound_direction d) noexcept {
    return d == bound_direction::at_least ? "at_least" : "at_most";
}

std::vector<bound_report> check_prop1(const debate_model& model, std::size_t trials,
                                      std::uint64_t seed) {
    model.validate();
    require_trials(trials);
    if (model.initial_value != 1)
        throw error("prop1 conditions on snapshot value 1; model initial value is 0");

    std::size_t limit_one = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        trial_result r = gen_trial(model, derive_seed(seed, 1, trial));
        if (r.v_infinity == 1) ++limit_one;
    }
    std::vector<bound_report> reports;
    reports.push_back(make_report("prop1.limit_one_given_snapshot_one", bound_direction::at_least,
                                  1.0 - model.eps_new_info, limit_one, trials, seed));
    reports.push_back(make_report("prop1.limit_zero_given_snapshot_one", bound_direction::at_most,
                                  model.eps_new_info, trials - limit_one, trials, seed));
    return reports;
}

namespace {

std::string describe_labels(const label_report& r) {
    std::ostringstream out;
    out << to_string(r.claim) << ": {";
    for (std::size_t i = 0; i < r.satisfied.size(); ++i) {
        if (i) out << ", ";
        out << to_string(r.satisfied[i]);
    }
    out << "} v=" << r.valuation;
    return out.str();
}

prop2_report compare_orders(const scenario& sc, bool exhaustive, std::size_t orders,
                            std::uint64_t seed) {
    saturation_result sat = saturate(sc);
    std::vector<const argument*> args = sat.tr.arguments();
    std::size_t n = args.size();

    std::vector<literal> claims;
    for (const argument* a : args)
        if (std::find(claims.begin(), claims.end(), a->conclusion) == claims.end())
            claims.push_back(a->conclusion);

    prop2_report report;
    report.scenario_id = sc.id;
    report.exhaustive = exhaustive;
    report.claims_checked = claims.size();

    std::vector<label_report> reference;
    for (const literal& c : claims) reference.push_back(label(sat.tr, c, sat.s));

    auto check_order = [&](std::span<const std::size_t> perm) {
        std::vector<move> moves;
        for (std::size_t k = 0; k < perm.size(); ++k) {
            move m;
            m.t = static_cast<time_step>(k + 1);
            m.action = move_action::articulate;
            m.arg = *args[perm[k]];
            moves.push_back(std::move(m));
        }
        transcript tr(std::move(moves));
        for (std::size_t ci = 0; ci < claims.size(); ++ci) {
            label_report got = label(tr, claims[ci], static_cast<time_step>(n));
            if (got.satisfied != reference[ci].satisfied ||
                got.valuation != reference[ci].valuation) {
                report.all_equal = false;
                if (report.mismatch.empty())
                    report.mismatch = "order " + std::to_string(report.orders_checked) +
                                      " changed " + describe_labels(got) + " from " +
                                      describe_labels(reference[ci]);
            }
        }
        ++report.orders_checked;
    };

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    if (exhaustive) {
        if (n > 8)
            throw error("exhaustive order sweep over " + std::to_string(n) +
                        " arguments is factorial; cap is 8");
        do {
            check_order(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        for (std::size_t o = 0; o < orders; ++o) {
            trial_rng rng(derive_seed(seed, 2, o));
            std::vector<std::size_t> shuffled = perm;
            rng.shuffle(std::span<std::size_t>(shuffled));
            check_order(shuffled);
        }
    }
    return report;
}

} // namespace

prop2_report check_prop2(const scenario& sc, std::size_t orders, std::uint64_t seed) {
    return compare_orders(sc, false, orders, seed);
}

prop2_report check_prop2_exhaustive(const scenario& sc) {
    return compare_orders(sc, true, 0, 0);
}

const char* to_string(coupling c) noexcept {
    return c == coupling::independent ? "independent" : "comonotone";
}

coupling parse_coupling(std::string_view text) {
    if (text == "independent") return coupling::independent;
    if (text == "comonotone") return coupling::comonotone;
    throw error("unknown coupling '" + std::string(text) + "'");
}

bound_report check_prop3(const debate_model& model1, const debate_model& model2, coupling cpl,
                         std::size_t trials, std::uint64_t seed) {
    model1.validate();
    model2.validate();
    require_trials(trials);
    if (model1.initial_value != model2.initial_value)
        throw error("prop3 assumes identical scenarios; initial values differ");

    std::size_t agree = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        trial_rng rng(derive_seed(seed, 5, trial));
        pair_draw d = draw_new_info(model1, model2, cpl, rng);
        int v1 = resolve_limit(model1, d.new_info1, rng);
        int v2 = resolve_limit(model2, d.new_info2, rng);
        if (v1 == v2) ++agree;
    }
    return make_report("prop3.limits_agree", bound_direction::at_least,
                       prop3_lower_bound(model1.eps_new_info, model2.eps_new_info), agree, trials,
                       seed);
}

std::vector<bound_report> check_prop5(const debate_model& model1, const debate_model& model2,
                                      coupling cpl, std::size_t trials, std::uint64_t seed) {
    model1.validate();
    model2.validate();
    require_trials(trials);

    bool snapshots_agree = model1.initial_value == model2.initial_value;
    std::size_t agree_limits = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        trial_rng rng(derive_seed(seed, 7, trial));
        pair_draw d = draw_new_info(model1, model2, cpl, rng);
        int v1 = resolve_limit(model1, d.new_info1, rng);
        int v2 = resolve_limit(model2, d.new_info2, rng);
        if (v1 == v2) ++agree_limits;
    }

    double lower = prop3_lower_bound(model1.eps_new_info, model2.eps_new_info);
    double upper = model1.eps_new_info + model2.eps_new_info;
    std::size_t covered = snapshots_agree ? trials : 0;
    std::size_t uncovered = snapshots_agree ? 0 : trials;
    std::size_t agree_if_covered = snapshots_agree ? agree_limits : 0;
    std::size_t agree_if_uncovered = snapshots_agree ? 0 : agree_limits;

    std::vector<bound_report> reports;
    reports.push_back(make_report("prop5.1.limits_agree_given_snapshots_agree",
                                  bound_direction::at_least, lower, agree_if_covered, covered,
                                  seed));
    reports.push_back(make_report("prop5.2.limits_differ_given_snapshots_agree",
                                  bound_direction::at_most, upper, covered - agree_if_covered,
                                  covered, seed));
    reports.push_back(make_report("prop5.3.limits_agree_given_snapshots_differ",
                                  bound_direction::at_most, upper, agree_if_uncovered, uncovered,
                                  seed));
    reports.push_back(make_report("prop5.4.limits_differ_given_snapshots_differ",
                                  bound_direction::at_least, lower,
                                  uncovered - agree_if_uncovered, uncovered, seed));
    return reports;
}

void axiom_sweep_params::validate() const {
    if (min_scenarios < 1 || max_scenarios < min_scenarios)
        throw error("scenario count range is empty");
    if (min_grounds < 1 || max_grounds < min_grounds || max_grounds > 16)
        throw error("ground count range is empty or above 16");
    if (min_claims < 1 || max_claims < min_claims)
        throw error("claim count range is empty");
    if (affirm_prob < 0.0 || deny_prob < 0.0 || affirm_prob + deny_prob > 1.0)
        throw error("stance probabilities must be non-negative and sum at most 1");
}

axiom_scan scan_ensemble_axioms(const ensemble& e, std::span<const literal> claims) {
    axiom_scan scan;
    std::vector<rational> weights;
    std::vector<transcript> transcripts;
    for (const scenario& s : e.scenarios()) {
        weights.push_back(s.weight);
        transcripts.push_back(scenario_transcript(s));
    }
    for (const transcript& tr : transcripts) {
        std::vector<const argument*> args = tr.arguments();
        for (const argument* attacker : args) {
            for (const argument* target : args) {
                std::optional<attack> a = attacks(*attacker, *target);
                if (a && a->kind == attack_kind::undercut) {
                    scan.has_undercuts = true;
                    break;
                }
            }
            if (scan.has_undercuts) break;
        }
        if (scan.has_undercuts) break;
    }

    for (const literal& claim : claims) {
        std::vector<int> pos, neg;
        for (const transcript& tr : transcripts) {
            time_step h = tr.horizon();
            pos.push_back(truth_valuation(tr, claim, h));
            neg.push_back(truth_valuation(tr, negate(claim), h));
        }
        rational m_pos = support_from_valuations(weights, pos);
        rational m_neg = support_from_valuations(weights, neg);
        if (m_pos + m_neg > rational(1)) {
            std::string note =
                scan.has_undercuts
                    ? "support budget exceeded, but undercut attacks are present: outside the "
                      "conjecture's hypothesis"
                    : "support budget exceeded in the rebuttal-only regime";
            scan.violations.push_back(axiom_violation{0, claim, m_pos, m_neg, scan.has_undercuts,
                                                      std::move(note), e});
        }
    }
    return scan;
}

ensemble generate_rebuttal_only_ensemble(const axiom_sweep_params& params, trial_rng& rng) {
    params.validate();
    auto span_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo) + 1));
    };
    int n_scenarios = span_int(params.min_scenarios, params.max_scenarios);
    int n_grounds = span_int(params.min_grounds, params.max_grounds);
    int n_claims = span_int(params.min_claims, params.max_claims);

    std::vector<literal> grounds;
    for (int g = 1; g <= n_grounds; ++g) grounds.push_back(literal{"g" + std::to_string(g), true});

    std::vector<scenario> scenarios;
    for (int i = 1; i <= n_scenarios; ++i) {
        scenario s;
        s.id = "s" + std::to_string(i);
        s.weight = rational(span_int(1, 10), 10);
        s.eps_new_info = rational(span_int(0, 10), 100);
        s.assumptions = grounds;
        s.assumptions.push_back(literal{"always_on", true});
        for (int j = 1; j <= n_claims; ++j) {
            double u = rng.uniform01();
            bool affirm = u < params.affirm_prob;
            bool deny = !affirm && u < params.affirm_prob + params.deny_prob;
            if (!affirm && !deny) continue;
            std::uint64_t mask =
                1 + rng.below((std::uint64_t{1} << static_cast<unsigned>(n_grounds)) - 1);
            std::vector<literal> antecedents;
            for (int g = 0; g < n_grounds; ++g)
                if (mask & (std::uint64_t{1} << static_cast<unsigned>(g)))
                    antecedents.push_back(grounds[static_cast<std::size_t>(g)]);
            literal conclusion{"c" + std::to_string(j), affirm};
            s.rules.push_back(make_rule("s" + std::to_string(i) + "_r" + std::to_string(j),
                                        std::move(antecedents), conclusion));
        }
        scenarios.push_back(std::move(s));
    }
    return ensemble(std::move(scenarios), rational(1, 20));
}

axiom_report check_support_axioms(const axiom_sweep_params& params, std::size_t trials,
                                  std::uint64_t seed) {
    params.validate();
    if (trials == 0) throw error("zero trials");
    axiom_report report;
    report.trials = trials;
    report.seed = seed;
    literal anchor{"always_on", true};

    for (std::size_t trial = 0; trial < trials; ++trial) {
        trial_rng rng(derive_seed(seed, 11, trial));
        ensemble e = generate_rebuttal_only_ensemble(params, rng);

        std::set<std::string> claim_atoms;
        for (const scenario& s : e.scenarios())
            for (const inference_rule& r : s.rules) claim_atoms.insert(r.consequent.name);
        std::vector<literal> claims;
        for (const std::string& atom : claim_atoms) claims.push_back(literal{atom, true});

        axiom_scan scan = scan_ensemble_axioms(e, claims);
        if (scan.has_undercuts) ++report.ensembles_with_undercuts;
        report.claims_checked += claims.size();
        for (axiom_violation& v : scan.violations) {
            v.trial = trial;
            report.violations.push_back(std::move(v));
        }

        std::vector<rational> weights;
        std::vector<int> anchored;
        for (const scenario& s : e.scenarios()) {
            weights.push_back(s.weight);
            transcript tr = scenario_transcript(s);
            anchored.push_back(truth_valuation(tr, anchor, tr.horizon()));
        }
        if (support_from_valuations(weights, anchored) != rational(1)) ++report.anchor_failures;
    }
    return report;
}

ensemble undercut_control_ensemble() {
    scenario s;
    s.id = "control";
    s.weight = rational(1);
    s.eps_new_info = rational(1, 20);
    s.assumptions = {literal{"g", true}, literal{"h", true}, literal{"k", true},
                     literal{"l", true}};
    s.rules.push_back(make_rule("ra", {literal{"g", true}}, literal{"theta", true}));
    s.rules.push_back(make_rule("rb", {literal{"h", true}}, literal{"theta", false}));
    s.rules.push_back(make_rule("rc", {literal{"k", true}}, literal{"g", false}));
    s.rules.push_back(make_rule("rd", {literal{"l", true}}, literal{"h", false}));
    std::vector<scenario> scenarios;
    scenarios.push_back(std::move(s));
    return ensemble(std::move(scenarios), rational(1, 20));
}

} // namespace agora
