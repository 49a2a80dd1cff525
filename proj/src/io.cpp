#include "agora/io.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>

namespace agora {

namespace {

std::string joined(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

std::string indexed(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

void require_object(const ojson& j, const std::string& path) {
    if (!j.is_object()) throw schema_error(path, "expected an object");
}

void check_keys(const ojson& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    require_object(j, path);
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) ok = true;
        if (!ok) throw schema_error(joined(path, item.key()), "unknown field");
    }
}

const ojson& require_field(const ojson& j, const std::string& path, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(joined(path, key), "missing field");
    return *it;
}

void check_version(const ojson& j, const std::string& path) {
    const ojson& v = require_field(j, path, "format_version");
    if (!v.is_number_integer() || v.get<std::int64_t>() != 1)
        throw schema_error(joined(path, "format_version"), "must be the integer 1");
}

std::string get_string(const ojson& j, const std::string& path) {
    if (!j.is_string()) throw schema_error(path, "expected a string");
    return j.get<std::string>();
}

literal get_literal(const ojson& j, const std::string& path) {
    std::string text = get_string(j, path);
    try {
        return parse_literal(text);
    } catch (const parse_error& e) {
        throw schema_error(path, e.what());
    }
}

std::vector<literal> get_literal_list(const ojson& j, const std::string& path) {
    if (!j.is_array()) throw schema_error(path, "expected an array of literals");
    std::vector<literal> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_literal(j[i], indexed(path, i)));
    return out;
}

rational get_exact(const ojson& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return rational::parse_decimal(j.get<std::string>());
        } catch (const std::exception& e) {
            throw schema_error(path, e.what());
        }
    }
    if (j.is_number_integer()) return rational(j.get<std::int64_t>());
    if (j.is_number_float())
        throw schema_error(path, "floating-point literals lose exactness; quote the decimal "
                                 "(e.g. \"0.7\")");
    throw schema_error(path, "expected a decimal string or integer");
}

time_step get_time(const ojson& j, const std::string& path) {
    if (!j.is_number_integer()) throw schema_error(path, "expected an integer time");
    return j.get<time_step>();
}

argument parse_argument(const ojson& j, const std::string& path) {
    check_keys(j, path, {"id", "conclusion", "premises", "rule_chain", "strength", "proponent"});
    argument a;
    a.id = get_string(require_field(j, path, "id"), joined(path, "id"));
    a.conclusion = get_literal(require_field(j, path, "conclusion"), joined(path, "conclusion"));
    a.premises = get_literal_list(require_field(j, path, "premises"), joined(path, "premises"));
    const ojson& chain = require_field(j, path, "rule_chain");
    if (!chain.is_array()) throw schema_error(joined(path, "rule_chain"), "expected an array");
    for (std::size_t i = 0; i < chain.size(); ++i)
        a.rule_chain.push_back(
            get_string(chain[i], indexed(joined(path, "rule_chain"), i)));
    if (auto it = j.find("strength"); it != j.end())
        a.strength = get_string(*it, joined(path, "strength"));
    if (auto it = j.find("proponent"); it != j.end())
        a.proponent = get_string(*it, joined(path, "proponent"));
    return a;
}

} // namespace

transcript parse_transcript(const ojson& doc, const std::string& path_hint) {
    check_keys(doc, path_hint, {"format_version", "moves"});
    check_version(doc, path_hint);
    const ojson& moves_json = require_field(doc, path_hint, "moves");
    if (!moves_json.is_array())
        throw schema_error(joined(path_hint, "moves"), "expected an array");

    std::vector<move> moves;
    for (std::size_t i = 0; i < moves_json.size(); ++i) {
        std::string mpath = indexed(joined(path_hint, "moves"), i);
        const ojson& mj = moves_json[i];
        require_object(mj, mpath);
        std::string kind =
            get_string(require_field(mj, mpath, "kind"), joined(mpath, "kind"));
        move m;
        m.t = get_time(require_field(mj, mpath, "t"), joined(mpath, "t"));
        if (kind == "articulate") {
            check_keys(mj, mpath, {"t", "kind", "argument"});
            m.action = move_action::articulate;
            m.arg = parse_argument(require_field(mj, mpath, "argument"),
                                   joined(mpath, "argument"));
        } else if (kind == "retract") {
            check_keys(mj, mpath, {"t", "kind", "argument_id"});
            m.action = move_action::retract;
            m.target_id = get_string(require_field(mj, mpath, "argument_id"),
                                     joined(mpath, "argument_id"));
        } else {
            throw schema_error(joined(mpath, "kind"),
                               "expected \"articulate\" or \"retract\"");
        }
        moves.push_back(std::move(m));
    }
    try {
        return transcript(std::move(moves));
    } catch (const schema_error&) {
        throw;
    } catch (const error& e) {
        throw schema_error(joined(path_hint, "moves"), e.what());
    }
}

transcript read_transcript(const std::string& path) {
    return parse_transcript(load_json_file(path), path);
}

ojson transcript_to_json(const transcript& tr) {
    ojson doc;
    doc["format_version"] = 1;
    ojson moves = ojson::array();
    for (const move& m : tr.moves()) {
        ojson mj;
        mj["t"] = m.t;
        if (m.action == move_action::articulate) {
            mj["kind"] = "articulate";
            mj["argument"] = to_json(*m.arg);
        } else {
            mj["kind"] = "retract";
            mj["argument_id"] = *m.target_id;
        }
        moves.push_back(std::move(mj));
    }
    doc["moves"] = std::move(moves);
    return doc;
}

ensemble parse_ensemble(const ojson& doc, const std::string& path_hint,
                        const std::string& base_dir) {
    check_keys(doc, path_hint, {"format_version", "class_epsilon", "scenarios"});
    check_version(doc, path_hint);
    rational class_epsilon =
        get_exact(require_field(doc, path_hint, "class_epsilon"),
                  joined(path_hint, "class_epsilon"));
    const ojson& scenarios_json = require_field(doc, path_hint, "scenarios");
    if (!scenarios_json.is_array())
        throw schema_error(joined(path_hint, "scenarios"), "expected an array");

    std::vector<scenario> scenarios;
    for (std::size_t i = 0; i < scenarios_json.size(); ++i) {
        std::string spath = indexed(joined(path_hint, "scenarios"), i);
        const ojson& sj = scenarios_json[i];
        check_keys(sj, spath,
                   {"id", "weight", "eps_new_info", "assumptions", "rules", "transcript_path"});
        scenario s;
        s.id = get_string(require_field(sj, spath, "id"), joined(spath, "id"));
        s.weight = get_exact(require_field(sj, spath, "weight"), joined(spath, "weight"));
        s.eps_new_info = get_exact(require_field(sj, spath, "eps_new_info"),
                                   joined(spath, "eps_new_info"));
        s.assumptions = get_literal_list(require_field(sj, spath, "assumptions"),
                                         joined(spath, "assumptions"));
        const ojson& rules_json = require_field(sj, spath, "rules");
        if (!rules_json.is_array())
            throw schema_error(joined(spath, "rules"), "expected an array");
        for (std::size_t ri = 0; ri < rules_json.size(); ++ri) {
            std::string rpath = indexed(joined(spath, "rules"), ri);
            const ojson& rj = rules_json[ri];
            check_keys(rj, rpath, {"name", "antecedents", "consequent", "mode"});
            try {
                s.rules.push_back(make_rule(
                    get_string(require_field(rj, rpath, "name"), joined(rpath, "name")),
                    get_literal_list(require_field(rj, rpath, "antecedents"),
                                     joined(rpath, "antecedents")),
                    get_literal(require_field(rj, rpath, "consequent"),
                                joined(rpath, "consequent")),
                    get_string(require_field(rj, rpath, "mode"), joined(rpath, "mode"))));
            } catch (const schema_error&) {
                throw;
            } catch (const error& e) {
                throw schema_error(rpath, e.what());
            }
        }
        if (auto it = sj.find("transcript_path"); it != sj.end()) {
            std::string rel = get_string(*it, joined(spath, "transcript_path"));
            std::filesystem::path full = std::filesystem::path(base_dir) / rel;
            s.hand_transcript = read_transcript(full.string());
        }
        scenarios.push_back(std::move(s));
    }
    try {
        return ensemble(std::move(scenarios), class_epsilon);
    } catch (const schema_error&) {
        throw;
    } catch (const error& e) {
        throw schema_error(path_hint, e.what());
    }
}

ensemble read_ensemble(const std::string& path) {
    std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_ensemble(load_json_file(path), path, dir.empty() ? "." : dir);
}

ojson ensemble_to_json(const ensemble& e) {
    ojson doc;
    doc["format_version"] = 1;
    doc["class_epsilon"] = e.class_epsilon().to_decimal_string(18);
    ojson scenarios = ojson::array();
    for (const scenario& s : e.scenarios()) {
        ojson sj;
        sj["id"] = s.id;
        sj["weight"] = s.weight.to_decimal_string(18);
        sj["eps_new_info"] = s.eps_new_info.to_decimal_string(18);
        ojson assumptions = ojson::array();
        for (const literal& l : s.assumptions) assumptions.push_back(to_string(l));
        sj["assumptions"] = std::move(assumptions);
        ojson rules = ojson::array();
        for (const inference_rule& r : s.rules) {
            ojson rj;
            rj["name"] = r.name;
            ojson ants = ojson::array();
            for (const literal& l : r.antecedents) ants.push_back(to_string(l));
            rj["antecedents"] = std::move(ants);
            rj["consequent"] = to_string(r.consequent);
            rj["mode"] = r.mode;
            rules.push_back(std::move(rj));
        }
        sj["rules"] = std::move(rules);
        scenarios.push_back(std::move(sj));
    }
    doc["scenarios"] = std::move(scenarios);
    return doc;
}

snapshot_sequence parse_timeline(const ojson& doc, const std::string& path_hint) {
    check_keys(doc, path_hint, {"format_version", "claim", "values", "headlines"});
    check_version(doc, path_hint);
    snapshot_sequence seq;
    seq.claim = get_literal(require_field(doc, path_hint, "claim"), joined(path_hint, "claim"));
    seq.source = path_hint;
    const ojson& values = require_field(doc, path_hint, "values");
    if (!values.is_array()) throw schema_error(joined(path_hint, "values"), "expected an array");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const ojson& v = values[i];
        if (!v.is_number_integer() ||
            (v.get<std::int64_t>() != 0 && v.get<std::int64_t>() != 1))
            throw schema_error(indexed(joined(path_hint, "values"), i), "expected 0 or 1");
        seq.values.push_back(static_cast<int>(v.get<std::int64_t>()));
    }
    if (auto it = doc.find("headlines"); it != doc.end()) {
        if (!it->is_array() || it->size() != values.size())
            throw schema_error(joined(path_hint, "headlines"),
                               "expected an array matching values in length");
        for (std::size_t i = 0; i < it->size(); ++i)
            get_string((*it)[i], indexed(joined(path_hint, "headlines"), i));
    }
    return seq;
}

snapshot_sequence read_timeline(const std::string& path) {
    return parse_timeline(load_json_file(path), path);
}

ojson timeline_to_json(const literal& claim, std::span<const int> values,
                       std::span<const std::string> headlines) {
    ojson doc;
    doc["format_version"] = 1;
    doc["claim"] = to_string(claim);
    doc["values"] = ojson::array();
    for (int v : values) doc["values"].push_back(v);
    if (!headlines.empty()) {
        doc["headlines"] = ojson::array();
        for (const std::string& h : headlines) doc["headlines"].push_back(h);
    }
    return doc;
}

ojson to_json(const rational& r) {
    ojson j;
    j["numerator"] = r.numerator();
    j["denominator"] = r.denominator();
    j["decimal"] = r.to_decimal_string();
    return j;
}

ojson to_json(const argument& a) {
    ojson j;
    j["id"] = a.id;
    j["conclusion"] = to_string(a.conclusion);
    ojson premises = ojson::array();
    for (const literal& p : a.premises) premises.push_back(to_string(p));
    j["premises"] = std::move(premises);
    ojson chain = ojson::array();
    for (const std::string& r : a.rule_chain) chain.push_back(r);
    j["rule_chain"] = std::move(chain);
    if (a.strength) j["strength"] = *a.strength;
    if (a.proponent) j["proponent"] = *a.proponent;
    return j;
}

ojson to_json(const label_report& r) {
    ojson j;
    j["claim"] = to_string(r.claim);
    j["time"] = r.time;
    ojson satisfied = ojson::array();
    for (claim_label l : r.satisfied) satisfied.push_back(to_string(l));
    j["satisfied"] = std::move(satisfied);
    j["headline"] = to_string(r.headline);
    j["valuation"] = r.valuation;
    return j;
}

ojson to_json(const support_report& r) {
    ojson j;
    j["claim"] = to_string(r.claim);
    if (r.requested_time) j["time"] = *r.requested_time;
    j["support"] = to_json(r.support);
    j["class_epsilon"] = r.class_epsilon.to_decimal_string(18);
    ojson per = ojson::array();
    for (const per_scenario_valuation& v : r.valuations) {
        ojson vj;
        vj["id"] = v.scenario_id;
        vj["weight"] = v.weight.to_decimal_string(18);
        vj["time"] = v.time;
        vj["valuation"] = v.value;
        per.push_back(std::move(vj));
    }
    j["per_scenario"] = std::move(per);
    ojson classes = ojson::array();
    for (support_class c : r.classes) classes.push_back(class_display(c, r.class_epsilon));
    j["classes"] = std::move(classes);
    j["headline"] = class_display(r.headline, r.class_epsilon);
    return j;
}

ojson to_json(const distinctness_verdict& v) {
    ojson j;
    j["first"] = v.first;
    j["second"] = v.second;
    j["verdict"] = v.distinct ? "Distinct" : "NonDistinct";
    j["case"] = v.rule_case;
    j["rationale"] = v.rationale;
    j["tau"] = v.tau.to_decimal_string(18);
    return j;
}

ojson to_json(const distinctness_audit& a) {
    ojson j;
    ojson pairs = ojson::array();
    for (const distinctness_verdict& v : a.pairs) pairs.push_back(to_json(v));
    j["pairs"] = std::move(pairs);
    j["compliant"] = a.compliant;
    return j;
}

ojson to_json(const dominance_row& row) {
    ojson j;
    j["n"] = row.n;
    j["rival"] = row.rival;
    j["frequency"] = row.frequency;
    j["standard_error"] = row.standard_error;
    j["trials"] = row.trials;
    return j;
}

ojson to_json(const bound_report& r) {
    ojson j;
    j["id"] = r.id;
    j["direction"] = to_string(r.direction);
    j["bound"] = r.bound;
    j["frequency"] = r.frequency;
    j["trials"] = r.trials;
    j["standard_error"] = r.standard_error;
    j["satisfied_within_3se"] = r.satisfied_within_3se;
    j["evaluable"] = r.evaluable;
    j["seed"] = r.seed;
    return j;
}

ojson to_json(const prop2_report& r) {
    ojson j;
    j["scenario"] = r.scenario_id;
    j["orders_checked"] = r.orders_checked;
    j["claims_checked"] = r.claims_checked;
    j["exhaustive"] = r.exhaustive;
    j["all_equal"] = r.all_equal;
    if (!r.mismatch.empty()) j["mismatch"] = r.mismatch;
    return j;
}

ojson to_json(const axiom_violation& v) {
    ojson j;
    j["trial"] = v.trial;
    j["claim"] = to_string(v.claim);
    j["support_positive"] = to_json(v.support_positive);
    j["support_negative"] = to_json(v.support_negative);
    j["outside_hypothesis"] = v.outside_hypothesis;
    j["note"] = v.note;
    j["witness"] = ensemble_to_json(v.witness);
    return j;
}

ojson to_json(const axiom_report& r) {
    ojson j;
    j["trials"] = r.trials;
    j["claims_checked"] = r.claims_checked;
    j["anchor_failures"] = r.anchor_failures;
    j["ensembles_with_undercuts"] = r.ensembles_with_undercuts;
    ojson violations = ojson::array();
    for (const axiom_violation& v : r.violations) violations.push_back(to_json(v));
    j["violations"] = std::move(violations);
    j["seed"] = r.seed;
    return j;
}

ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    try {
        return ojson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(path + ": " + e.what(), e.byte);
    }
}

} // namespace agora
