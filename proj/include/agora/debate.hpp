#pragma once

#include "agora/lang.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace agora {

using time_step = std::int64_t;

// A named inference rule. Antecedents are kept in canonical literal order so
// that rule identity does not depend on authoring order. The mode is a
// free-form tag ("deductive", "analogical", ...) carried but not interpreted.
struct inference_rule {
    std::string name;
    std::vector<literal> antecedents; // canonical order, no duplicates
    literal consequent;
    std::string mode = "deductive";

    bool operator==(const inference_rule&) const = default;
};

inference_rule make_rule(std::string name, std::vector<literal> antecedents, literal consequent,
                         std::string mode = "deductive");

// Rule identity for scenario comparison: the name is presentation only.
struct rule_content {
    std::vector<literal> antecedents;
    literal consequent;
    std::string mode;

    bool operator==(const rule_content&) const = default;
    auto operator<=>(const rule_content&) const = default;
};

rule_content content_of(const inference_rule& r);

// An argument as it appears in a debate transcript: a conclusion grounded in
// a set of assumption premises via a chain of rule applications.
struct argument {
    std::string id;
    literal conclusion;
    std::vector<literal> premises; // canonical order, no duplicates
    std::vector<std::string> rule_chain;
    std::optional<std::string> strength; // opaque commitment grade, never computed with
    std::optional<std::string> proponent;
};

enum class attack_kind { rebuttal, undercut };

const char* to_string(attack_kind k) noexcept;

struct attack {
    attack_kind kind;
    // For undercuts, the attacked premise of the target.
    std::optional<literal> target_premise;
};

// Rebuttal: attacker concludes the negation of the target's conclusion.
// Undercut: attacker concludes the negation of one of the target's premises.
// When both conditions hold, the attack is classified as a rebuttal.
std::optional<attack> attacks(const argument& attacker, const argument& target);

enum class move_action { articulate, retract };

struct move {
    time_step t = 0;
    move_action action = move_action::articulate;
    std::optional<argument> arg;     // articulate
    std::optional<std::string> target_id; // retract
};

// A validated debate transcript. Moves are kept in input order; times must be
// non-decreasing and non-negative, ids unique, and each retraction must name
// an argument articulated at a strictly earlier time and not yet retracted.
class transcript {
public:
    transcript() = default;
    explicit transcript(std::vector<move> moves);

    const std::vector<move>& moves() const noexcept { return moves_; }

    // All arguments ever articulated, in articulation order.
    std::vector<const argument*> arguments() const;

    const argument* find(std::string_view id) const noexcept;

    time_step articulated_at(std::string_view id) const;
    std::optional<time_step> retracted_at(std::string_view id) const;

    // Largest move time (0 for an empty transcript).
    time_step horizon() const noexcept;

    // Arguments active at time t: articulated at or before t and not yet
    // retracted (an argument is inactive from its retraction time onward).
    std::vector<const argument*> active_arguments(time_step t) const;

private:
    std::vector<move> moves_;
};

enum class claim_label { open, supported, plausible, probable, accepted };

const char* to_string(claim_label l) noexcept;

struct label_report {
    literal claim;
    time_step time = 0;
    std::vector<claim_label> satisfied; // ascending: open first
    claim_label headline = claim_label::open;
    int valuation = 0; // 1 iff accepted
};

// Labels for a claim over the set of active arguments:
//   supported:  some active argument concludes the claim.
//   plausible:  some such argument is internally consistent.
//   probable:   plausible, and no active argument attacks any argument for
//               the claim.
//   accepted:   some argument for the claim has every attacker counterattacked
//               by an active argument other than the defended one.
//   open:       always satisfied.
label_report label(std::span<const argument* const> active, const literal& claim, time_step t);

label_report label(const transcript& tr, const literal& claim, time_step t);

int truth_valuation(const transcript& tr, const literal& claim, time_step t);

// Valuations at t = 1..t_max (t_max >= 1); the overload runs to the horizon.
std::vector<int> timeline(const transcript& tr, const literal& claim, time_step t_max);
std::vector<int> timeline(const transcript& tr, const literal& claim);

enum class schedule_policy { one_per_tick, all_at_once };

const char* to_string(schedule_policy p) noexcept;
schedule_policy parse_schedule_policy(std::string_view text);

struct saturation_result {
    transcript tr;
    time_step s = 0; // time by which every derivable argument is articulated
};

// Exhaustive forward chaining from assumptions over rules. Deterministic:
// rules fire in name order against a per-pass snapshot, and discovered
// arguments are articulated in discovery order (ids a1, a2, ...). Under
// one_per_tick each articulation gets its own tick starting at 1; under
// all_at_once everything is articulated at t = 1.
saturation_result saturate(std::span<const literal> assumptions,
                           std::span<const inference_rule> rules,
                           schedule_policy policy = schedule_policy::one_per_tick);

} // namespace agora
