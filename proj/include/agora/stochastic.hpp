#pragma once

#include "agora/ensemble.hpp"
#include "agora/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace agora {

// Reports backed by fewer trials than this are refused: bound checks compare
// empirical frequencies against tight inequalities and need the noise floor.
inline constexpr std::size_t min_bound_trials = 10'000;

// One debate observed at a snapshot, with a single chance of relevant new
// information arriving afterwards. The eps field is the bound the debate's
// owner asserts; the actual arrival probability must respect it.
struct debate_model {
    time_step saturation_time = 1; // s: all initial-information arguments in by here
    time_step snapshot_time = 1;   // t_m >= s: when the snapshot is taken
    time_step horizon = 1;         // >= t_m: where the limit value is read off
    double eps_new_info = 0.0;          // asserted bound on the arrival probability
    double actual_new_info_prob = 0.0;  // true arrival probability, <= eps_new_info
    double flip_prob_given_new_info = 1.0;
    int initial_value = 1; // 0 or 1, the valuation at the snapshot

    void validate() const; // throws error on any violated invariant
};

struct trial_result {
    int v_at_snapshot = 0;
    int v_infinity = 0;
    bool converged = true; // this generator always converges by the horizon
    bool new_info_occurred = false;
};

// v_at_snapshot = initial_value; with probability actual_new_info_prob new
// information arrives, in which case the limit flips from the snapshot value
// with probability flip_prob_given_new_info. Deterministic given the seed.
trial_result gen_trial(const debate_model& model, std::uint64_t seed);

enum class bound_direction { at_least, at_most };

const char* to_string(bound_direction d) noexcept;

struct bound_report {
    std::string id;
    bound_direction direction = bound_direction::at_least;
    double bound = 0.0;
    double frequency = 0.0;
    std::size_t trials = 0;
    double standard_error = 0.0;
    bool satisfied_within_3se = false;
    std::uint64_t seed = 0;
    bool evaluable = true; // false when the conditioning event never occurs
};

// Given snapshot value 1, checks Pr(limit = 1) >= 1 - eps and
// Pr(limit = 0) <= eps. Requires initial_value = 1 and >= min_bound_trials.
std::vector<bound_report> check_prop1(const debate_model& model, std::size_t trials,
                                      std::uint64_t seed);

struct prop2_report {
    std::string scenario_id;
    std::size_t orders_checked = 0;
    std::size_t claims_checked = 0;
    bool exhaustive = false;
    bool all_equal = true;
    std::string mismatch; // first discrepancy, empty when all_equal
};

// Articulates the saturated argument set of the scenario under shuffled
// one-per-tick schedules and compares post-saturation labels of every
// derivable claim against the canonical schedule.
prop2_report check_prop2(const scenario& sc, std::size_t orders, std::uint64_t seed);

// Same comparison over every permutation of the saturated argument set.
// Refused above 8 arguments (the sweep is factorial).
prop2_report check_prop2_exhaustive(const scenario& sc);

// How the two debates' new-information events are sampled: independently, or
// driven by one shared uniform draw (maximal positive dependence).
enum class coupling { independent, comonotone };

const char* to_string(coupling c) noexcept;
coupling parse_coupling(std::string_view text);

// Checks Pr(limit1 = limit2) >= 1 - eps1 - eps2 for two debates that share a
// snapshot value. The bound must hold under either coupling.
bound_report check_prop3(const debate_model& model1, const debate_model& model2, coupling cpl,
                         std::size_t trials, std::uint64_t seed);

// Checks the four conditional agreement bounds for two debates:
//   1. Pr(limits agree  | snapshots agree ) >= 1 - eps1 - eps2
//   2. Pr(limits differ | snapshots agree ) <= eps1 + eps2
//   3. Pr(limits agree  | snapshots differ) <= eps1 + eps2
//   4. Pr(limits differ | snapshots differ) >= 1 - eps1 - eps2
// Snapshot values are fixed by the model initial values, so one run leaves
// two of the four cells empty; those come back evaluable = false.
std::vector<bound_report> check_prop5(const debate_model& model1, const debate_model& model2,
                                      coupling cpl, std::size_t trials, std::uint64_t seed);

struct axiom_sweep_params {
    int min_scenarios = 2;
    int max_scenarios = 4;
    int min_grounds = 2;
    int max_grounds = 4;
    int min_claims = 1;
    int max_claims = 3;
    double affirm_prob = 0.4; // per claim per scenario; deny_prob likewise, rest silent
    double deny_prob = 0.4;

    void validate() const;
};

struct axiom_violation {
    std::size_t trial = 0;
    literal claim;
    rational support_positive;
    rational support_negative;
    bool outside_hypothesis = false; // undercut attacks present in some debate
    std::string note;
    ensemble witness;
};

struct axiom_scan {
    bool has_undercuts = false;
    std::vector<axiom_violation> violations;
};

// Checks m(claim) + m(-claim) <= 1 for each claim over the ensemble,
// recording the ensemble as witness for any excess. Undercut attacks in any
// debate put the ensemble outside the conjecture's hypothesis; violations
// found there are flagged rather than counted as counterexamples.
axiom_scan scan_ensemble_axioms(const ensemble& e, std::span<const literal> claims);

// Random ensemble in the rebuttal-only regime: positive ground assumptions,
// an "always_on" anchor assumption in every scenario, and per scenario at
// most one polarity of each claim atom concluded from a nonempty subset of
// the grounds. No conclusion negates any premise, so no undercut can form.
ensemble generate_rebuttal_only_ensemble(const axiom_sweep_params& params, trial_rng& rng);

struct axiom_report {
    std::size_t trials = 0;
    std::size_t claims_checked = 0;
    std::size_t anchor_failures = 0; // anchor support below exact 1
    std::size_t ensembles_with_undercuts = 0;
    std::vector<axiom_violation> violations;
    std::uint64_t seed = 0;
};

// Sweeps random rebuttal-only ensembles for support-budget violations and
// confirms the anchor claim is Inevitable in every one.
axiom_report check_support_axioms(const axiom_sweep_params& params, std::size_t trials,
                                  std::uint64_t seed);

// Fixed control ensemble in which undercut-based defense makes both a claim
// and its negation accepted, exceeding the support budget: the excess is
// real but lies outside the rebuttal-only hypothesis.
ensemble undercut_control_ensemble();

} // namespace agora
