#include "agora/debate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace agora {

inference_rule make_rule(std::string name, std::vector<literal> antecedents, literal consequent,
                         std::string mode) {
    if (name.empty()) throw error("rule with empty name");
    if (mode.empty()) throw error("rule '" + name + "' with empty mode");
    inference_rule r;
    r.name = std::move(name);
    r.antecedents = literal_set(std::move(antecedents));
    r.consequent = std::move(consequent);
    r.mode = std::move(mode);
    return r;
}

rule_content content_of(const inference_rule& r) {
    return rule_content{literal_set(r.antecedents), r.consequent, r.mode};
}

const char* to_string(attack_kind k) noexcept {
    return k == attack_kind::rebuttal ? "rebuttal" : "undercut";
}

std::optional<attack> attacks(const argument& attacker, const argument& target) {
    literal negated = negate(attacker.conclusion);
    if (negated == target.conclusion) return attack{attack_kind::rebuttal, std::nullopt};
    for (const literal& p : target.premises) {
        if (p == negated) return attack{attack_kind::undercut, p};
    }
    return std::nullopt;
}

transcript::transcript(std::vector<move> ms) : moves_(std::move(ms)) {
    time_step prev = 0;
    std::unordered_map<std::string, const move*> articulated;
    std::unordered_set<std::string> retracted;
    for (std::size_t i = 0; i < moves_.size(); ++i) {
        move& m = moves_[i];
        if (m.t < 0) throw error("move " + std::to_string(i) + " has negative time");
        if (i > 0 && m.t < prev)
            throw error("move " + std::to_string(i) + " has time " + std::to_string(m.t) +
                        " before preceding move at " + std::to_string(prev));
        prev = m.t;
        if (m.action == move_action::articulate) {
            if (!m.arg) throw error("articulate move " + std::to_string(i) + " has no argument");
            argument& a = *m.arg;
            if (a.id.empty()) throw error("articulate move " + std::to_string(i) + " has empty id");
            if (articulated.count(a.id))
                throw error("duplicate argument id '" + a.id + "'");
            a.premises = literal_set(std::move(a.premises));
            articulated.emplace(a.id, &m);
        } else {
            if (!m.target_id) throw error("retract move " + std::to_string(i) + " names no argument");
            auto it = articulated.find(*m.target_id);
            if (it == articulated.end())
                throw error("retraction of unknown argument '" + *m.target_id + "'");
            if (m.t <= it->second->t)
                throw error("argument '" + *m.target_id +
                            "' retracted no later than its articulation");
            if (!retracted.insert(*m.target_id).second)
                throw error("argument '" + *m.target_id + "' retracted twice");
        }
    }
}

std::vector<const argument*> transcript::arguments() const {
    std::vector<const argument*> out;
    for (const move& m : moves_)
        if (m.action == move_action::articulate) out.push_back(&*m.arg);
    return out;
}

const argument* transcript::find(std::string_view id) const noexcept {
    for (const move& m : moves_)
        if (m.action == move_action::articulate && m.arg->id == id) return &*m.arg;
    return nullptr;
}

time_step transcript::articulated_at(std::string_view id) const {
    for (const move& m : moves_)
        if (m.action == move_action::articulate && m.arg->id == id) return m.t;
    throw error("unknown argument '" + std::string(id) + "'");
}

std::optional<time_step> transcript::retracted_at(std::string_view id) const {
    for (const move& m : moves_)
        if (m.action == move_action::retract && *m.target_id == id) return m.t;
    return std::nullopt;
}

time_step transcript::horizon() const noexcept {
    time_step h = 0;
    for (const move& m : moves_) h = std::max(h, m.t);
    return h;
}

std::vector<const argument*> transcript::active_arguments(time_step t) const {
    std::vector<const argument*> out;
    std::unordered_set<std::string_view> gone;
    for (const move& m : moves_) {
        if (m.t > t) break;
        if (m.action == move_action::retract) gone.insert(*m.target_id);
    }
    for (const move& m : moves_) {
        if (m.t > t) break;
        if (m.action == move_action::articulate && !gone.count(m.arg->id))
            out.push_back(&*m.arg);
    }
    return out;
}

const char* to_string(claim_label l) noexcept {
    switch (l) {
        case claim_label::open: return "Open";
        case claim_label::supported: return "Supported";
        case claim_label::plausible: return "Plausible";
        case claim_label::probable: return "Probable";
        case claim_label::accepted: return "Accepted";
    }
    return "Open";
}

label_report label(std::span<const argument* const> active, const literal& claim, time_step t) {
    std::vector<const argument*> supporting;
    for (const argument* a : active)
        if (a->conclusion == claim) supporting.push_back(a);

    bool is_supported = !supporting.empty();

    bool is_plausible = false;
    for (const argument* a : supporting) {
        std::vector<literal> closure = a->premises;
        closure.push_back(a->conclusion);
        if (consistent(closure)) {
            is_plausible = true;
            break;
        }
    }

    bool attacked = false;
    for (const argument* a : supporting) {
        for (const argument* b : active) {
            if (attacks(*b, *a)) {
                attacked = true;
                break;
            }
        }
        if (attacked) break;
    }
    bool is_probable = is_plausible && !attacked;

    // An argument for the claim is defensible when every attack on it is
    // answered by a counterattack from a different active argument.
    bool is_accepted = false;
    for (const argument* a : supporting) {
        bool defended = true;
        for (const argument* b : active) {
            if (!attacks(*b, *a)) continue;
            bool answered = false;
            for (const argument* c : active) {
                if (c == a) continue;
                if (attacks(*c, *b)) {
                    answered = true;
                    break;
                }
            }
            if (!answered) {
                defended = false;
                break;
            }
        }
        if (defended) {
            is_accepted = true;
            break;
        }
    }

    label_report report;
    report.claim = claim;
    report.time = t;
    report.satisfied.push_back(claim_label::open);
    if (is_supported) report.satisfied.push_back(claim_label::supported);
    if (is_plausible) report.satisfied.push_back(claim_label::plausible);
    if (is_probable) report.satisfied.push_back(claim_label::probable);
    if (is_accepted) report.satisfied.push_back(claim_label::accepted);
    report.headline = report.satisfied.back();
    report.valuation = is_accepted ? 1 : 0;
    return report;
}

label_report label(const transcript& tr, const literal& claim, time_step t) {
    std::vector<const argument*> active = tr.active_arguments(t);
    return label(active, claim, t);
}

int truth_valuation(const transcript& tr, const literal& claim, time_step t) {
    return label(tr, claim, t).valuation;
}

std::vector<int> timeline(const transcript& tr, const literal& claim, time_step t_max) {
    if (t_max < 1) throw error("timeline horizon " + std::to_string(t_max) + " is below 1");
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(t_max));
    for (time_step t = 1; t <= t_max; ++t) values.push_back(truth_valuation(tr, claim, t));
    return values;
}

std::vector<int> timeline(const transcript& tr, const literal& claim) {
    return timeline(tr, claim, std::max<time_step>(1, tr.horizon()));
}

const char* to_string(schedule_policy p) noexcept {
    return p == schedule_policy::one_per_tick ? "one_per_tick" : "all_at_once";
}

schedule_policy parse_schedule_policy(std::string_view text) {
    if (text == "one_per_tick") return schedule_policy::one_per_tick;
    if (text == "all_at_once") return schedule_policy::all_at_once;
    throw error("unknown schedule policy '" + std::string(text) + "'");
}

namespace {

struct fact {
    literal conclusion;
    std::vector<literal> support; // leaf assumptions, canonical order
    std::vector<std::string> chain;
    bool from_assumption = false;
};

std::vector<std::string> chain_through(const std::vector<const fact*>& parents,
                                       const std::string& rule_name) {
    std::vector<std::string> chain;
    std::set<std::string_view> seen;
    for (const fact* p : parents) {
        for (const std::string& r : p->chain) {
            if (seen.insert(r).second) chain.push_back(r);
        }
    }
    if (seen.insert(rule_name).second) chain.push_back(rule_name);
    return chain;
}

} // namespace

saturation_result saturate(std::span<const literal> assumptions,
                           std::span<const inference_rule> rules, schedule_policy policy) {
    std::vector<literal> base(assumptions.begin(), assumptions.end());
    base = literal_set(std::move(base));

    std::vector<const inference_rule*> ordered;
    ordered.reserve(rules.size());
    for (const inference_rule& r : rules) ordered.push_back(&r);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const inference_rule* a, const inference_rule* b) {
                         return a->name < b->name;
                     });

    std::vector<fact> facts;
    std::set<std::pair<literal, std::vector<literal>>> seen;
    for (const literal& a : base) {
        facts.push_back(fact{a, {a}, {}, true});
        seen.insert({a, {a}});
    }

    for (;;) {
        std::size_t snapshot = facts.size();
        std::size_t before = facts.size();
        for (const inference_rule* rule : ordered) {
            std::vector<std::vector<std::size_t>> candidates(rule->antecedents.size());
            bool viable = true;
            for (std::size_t k = 0; k < rule->antecedents.size(); ++k) {
                for (std::size_t f = 0; f < snapshot; ++f)
                    if (facts[f].conclusion == rule->antecedents[k]) candidates[k].push_back(f);
                if (candidates[k].empty()) {
                    viable = false;
                    break;
                }
            }
            if (!viable) continue;

            std::vector<std::size_t> pick(rule->antecedents.size(), 0);
            for (;;) {
                std::vector<const fact*> parents;
                parents.reserve(pick.size());
                for (std::size_t k = 0; k < pick.size(); ++k)
                    parents.push_back(&facts[candidates[k][pick[k]]]);

                std::vector<literal> support;
                for (const fact* p : parents)
                    support.insert(support.end(), p->support.begin(), p->support.end());
                support = literal_set(std::move(support));

                if (seen.insert({rule->consequent, support}).second) {
                    facts.push_back(fact{rule->consequent, support,
                                         chain_through(parents, rule->name), false});
                }

                // Advance the combination odometer, last antecedent fastest.
                std::size_t k = pick.size();
                while (k > 0 && ++pick[k - 1] == candidates[k - 1].size()) {
                    pick[k - 1] = 0;
                    --k;
                }
                if (k == 0) break;
            }
        }
        if (facts.size() == before) break;
    }

    std::vector<move> moves;
    std::set<std::pair<literal, std::vector<literal>>> emitted;
    time_step next_time = 1;
    for (const fact& f : facts) {
        argument a;
        a.conclusion = f.conclusion;
        a.premises = f.from_assumption ? std::vector<literal>{} : f.support;
        if (!emitted.insert({a.conclusion, a.premises}).second) continue;
        a.id = "a" + std::to_string(moves.size() + 1);
        a.rule_chain = f.chain;
        move m;
        m.action = move_action::articulate;
        m.t = policy == schedule_policy::one_per_tick ? next_time++ : 1;
        m.arg = std::move(a);
        moves.push_back(std::move(m));
    }

    saturation_result result;
    time_step s = 0;
    if (!moves.empty()) s = policy == schedule_policy::one_per_tick ? moves.back().t : 1;
    result.tr = transcript(std::move(moves));
    result.s = s;
    return result;
}

} // namespace agora
