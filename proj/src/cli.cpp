#include "agora/cli.hpp"

#include "agora/io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace agora {

namespace {

struct run_config {
    std::string input_path;
    std::string claim_text;
    std::string scenario_id;
    std::string policy_text = "one_per_tick";
    std::string method_text;
    std::string trim_variant_text;
    std::string coupling_text = "independent";
    std::string tau_text = "0.1";
    std::string eps_text;
    time_step time = 0;
    time_step t_max = 0;
    double eps = 0.0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double actual = -1.0;
    double actual1 = -1.0;
    double actual2 = -1.0;
    double flip = 1.0;
    double flip1 = 1.0;
    double flip2 = 1.0;
    int max_change_point = 200;
    std::string rival_text = "mean";
    std::string lengths_text = "10,100,1000";
    std::size_t trials = 100'000;
    std::size_t orders = 20;
    bool exhaustive = false;
    bool unequal_snapshots = false;
    bool with_control = false;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool strict = false;
    bool strict_distinct = false;
};

ojson versioned(ojson body) {
    ojson doc;
    doc["format_version"] = 1;
    for (auto& item : body.items()) doc[item.key()] = std::move(item.value());
    return doc;
}

void emit(std::ostream& out, const ojson& doc) { out << doc.dump(2) << "\n"; }

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
}

// Applies --strict and --strict-distinct policies right after loading.
ensemble load_ensemble(const run_config& cfg) {
    ensemble e = read_ensemble(cfg.input_path);
    if (cfg.strict)
        for (const scenario& s : e.scenarios()) verify_transcript_against(s);
    if (cfg.strict_distinct) {
        distinctness_audit audit = audit_distinctness(e, rational::parse_decimal(cfg.tau_text));
        for (const distinctness_verdict& v : audit.pairs)
            if (!v.distinct)
                throw error("scenarios '" + v.first + "' and '" + v.second +
                            "' are non-distinct (case " + v.rule_case + "): " + v.rationale);
    }
    return e;
}

const scenario* select_scenario(const ensemble& e, const std::string& wanted) {
    if (wanted.empty()) {
        if (e.scenarios().size() == 1) return &e.scenarios().front();
        return nullptr;
    }
    for (const scenario& s : e.scenarios())
        if (s.id == wanted) return &s;
    throw error("no scenario with id '" + wanted + "'");
}

void print_label_text(std::ostream& out, const label_report& r) {
    out << "claim " << to_string(r.claim) << " at t=" << r.time << "\n";
    out << "satisfied:";
    for (claim_label l : r.satisfied) out << " " << to_string(l);
    out << "\nheadline: " << to_string(r.headline) << "\nvaluation: " << r.valuation << "\n";
}

void print_support_text(std::ostream& out, const support_report& r, bool with_classes) {
    out << "claim " << to_string(r.claim) << ": support " << r.support.to_string() << " ("
        << r.support.to_decimal_string() << ")\n";
    for (const per_scenario_valuation& v : r.valuations)
        out << "  " << v.scenario_id << " weight=" << v.weight.to_decimal_string(18)
            << " t=" << v.time << " v=" << v.value << "\n";
    if (with_classes) {
        out << "classes:";
        for (support_class c : r.classes) out << " " << class_display(c, r.class_epsilon);
        out << "\nheadline: " << class_display(r.headline, r.class_epsilon) << "\n";
    }
}

void print_bound_text(std::ostream& out, const bound_report& r) {
    out << r.id << ": ";
    if (!r.evaluable) {
        out << "not evaluable (conditioning event never occurs)\n";
        return;
    }
    out << "frequency " << fmt(r.frequency) << " "
        << (r.direction == bound_direction::at_least ? ">=" : "<=") << " bound " << fmt(r.bound)
        << " (se " << fmt(r.standard_error) << ", trials " << r.trials << ") "
        << (r.satisfied_within_3se ? "PASS" : "FAIL") << "\n";
}

bool all_pass(const std::vector<bound_report>& reports) {
    for (const bound_report& r : reports)
        if (r.evaluable && !r.satisfied_within_3se) return false;
    return true;
}

ojson reports_doc(const std::vector<bound_report>& reports, bool pass) {
    ojson body;
    body["reports"] = ojson::array();
    for (const bound_report& r : reports) body["reports"].push_back(to_json(r));
    body["pass"] = pass;
    return versioned(std::move(body));
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
    std::vector<std::size_t> lengths;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(part, &used);
            if (used != part.size() || v < 1) throw error("");
            lengths.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw error("malformed length list '" + text + "'");
        }
    }
    if (lengths.empty()) throw error("empty length list");
    return lengths;
}

int run_validate(const run_config& cfg, std::ostream& out) {
    ensemble e = load_ensemble(cfg);
    distinctness_audit audit = audit_distinctness(e, rational::parse_decimal(cfg.tau_text));
    if (cfg.format == "structured") {
        ojson body;
        body["ok"] = true;
        body["scenarios"] = e.scenarios().size();
        body["distinctness"] = to_json(audit);
        emit(out, versioned(std::move(body)));
    } else {
        out << "ok: " << e.scenarios().size() << " scenario(s), class_epsilon "
            << e.class_epsilon().to_decimal_string(18) << "\n";
        for (const distinctness_verdict& v : audit.pairs)
            out << "  " << v.first << " ~ " << v.second << ": "
                << (v.distinct ? "Distinct" : "NonDistinct") << " (case " << v.rule_case << ") "
                << v.rationale << "\n";
        if (!audit.pairs.empty())
            out << (audit.compliant ? "all pairs distinct" : "non-distinct pairs present") << "\n";
    }
    return 0;
}

int run_saturate(const run_config& cfg, std::ostream& out, std::ostream& err) {
    ensemble e = load_ensemble(cfg);
    const scenario* sc = select_scenario(e, cfg.scenario_id);
    if (!sc) {
        err << "ensemble has several scenarios; pick one with --scenario\n";
        return 2;
    }
    saturation_result sat = saturate(*sc, parse_schedule_policy(cfg.policy_text));
    if (cfg.format == "structured") {
        emit(out, transcript_to_json(sat.tr));
    } else {
        for (const move& m : sat.tr.moves()) {
            const argument& a = *m.arg;
            out << a.id << " t=" << m.t << " " << to_string(a.conclusion) << " <- {";
            for (std::size_t i = 0; i < a.premises.size(); ++i)
                out << (i ? ", " : "") << to_string(a.premises[i]);
            out << "}";
            if (!a.rule_chain.empty()) {
                out << " via";
                for (const std::string& r : a.rule_chain) out << " " << r;
            }
            out << "\n";
        }
        out << "s=" << sat.s << "\n";
    }
    return 0;
}

int run_label(const run_config& cfg, std::ostream& out, bool has_time) {
    transcript tr = read_transcript(cfg.input_path);
    literal claim = parse_literal(cfg.claim_text);
    time_step t = has_time ? cfg.time : tr.horizon();
    label_report r = label(tr, claim, t);
    if (cfg.format == "structured")
        emit(out, versioned(to_json(r)));
    else
        print_label_text(out, r);
    return 0;
}

int run_timeline(const run_config& cfg, std::ostream& out, bool has_tmax) {
    transcript tr = read_transcript(cfg.input_path);
    literal claim = parse_literal(cfg.claim_text);
    time_step t_max = has_tmax ? cfg.t_max : std::max<time_step>(1, tr.horizon());
    std::vector<int> values = timeline(tr, claim, t_max);
    std::vector<std::string> headlines;
    for (time_step t = 1; t <= t_max; ++t)
        headlines.push_back(to_string(label(tr, claim, t).headline));
    if (cfg.format == "structured") {
        emit(out, timeline_to_json(claim, values, headlines));
    } else {
        for (time_step t = 1; t <= t_max; ++t)
            out << t << " " << values[static_cast<std::size_t>(t - 1)] << " "
                << headlines[static_cast<std::size_t>(t - 1)] << "\n";
    }
    return 0;
}

int run_support(const run_config& cfg, std::ostream& out, bool has_time, bool classify) {
    ensemble e = load_ensemble(cfg);
    if (classify && !cfg.eps_text.empty())
        e = ensemble(e.scenarios(), rational::parse_decimal(cfg.eps_text));
    literal claim = parse_literal(cfg.claim_text);
    std::optional<time_step> t;
    if (has_time) t = cfg.time;
    support_report r = ensemble_support(e, claim, t, parse_schedule_policy(cfg.policy_text));
    if (cfg.format == "structured") {
        ojson body = to_json(r);
        if (!classify) {
            body.erase("class_epsilon");
            body.erase("classes");
            body.erase("headline");
        }
        emit(out, versioned(std::move(body)));
    } else {
        print_support_text(out, r, classify);
    }
    return 0;
}

int run_distinct(const run_config& cfg, std::ostream& out) {
    ensemble e = read_ensemble(cfg.input_path);
    if (cfg.strict)
        for (const scenario& s : e.scenarios()) verify_transcript_against(s);
    distinctness_audit audit = audit_distinctness(e, rational::parse_decimal(cfg.tau_text));
    if (cfg.format == "structured") {
        emit(out, versioned(to_json(audit)));
    } else {
        for (const distinctness_verdict& v : audit.pairs)
            out << v.first << " ~ " << v.second << ": "
                << (v.distinct ? "Distinct" : "NonDistinct") << " (case " << v.rule_case << ") "
                << v.rationale << "\n";
        out << "compliant: " << (audit.compliant ? "true" : "false") << "\n";
    }
    if (cfg.strict_distinct && !audit.compliant) return 1;
    return 0;
}

int run_estimate(const run_config& cfg, std::ostream& out) {
    snapshot_sequence seq = read_timeline(cfg.input_path);
    estimator_spec spec = estimator_spec::parse(cfg.method_text);
    if (spec.kind() == estimator_kind::trimmed && !cfg.trim_variant_text.empty())
        spec = estimator_spec::trimmed(spec.alpha(), spec.beta(),
                                       parse_trim_variant(cfg.trim_variant_text));
    double value = spec.estimate(seq.values);
    if (cfg.format == "structured") {
        ojson body;
        body["claim"] = to_string(seq.claim);
        body["method"] = spec.name();
        body["n"] = seq.values.size();
        body["estimate"] = value;
        emit(out, versioned(std::move(body)));
    } else {
        out << "claim " << to_string(seq.claim) << ": " << spec.name() << " over "
            << seq.values.size() << " value(s) -> " << fmt(value) << "\n";
    }
    return 0;
}

int run_prop1(const run_config& cfg, std::ostream& out) {
    debate_model model;
    model.eps_new_info = cfg.eps;
    model.actual_new_info_prob = cfg.actual < 0 ? cfg.eps : cfg.actual;
    model.flip_prob_given_new_info = cfg.flip;
    model.initial_value = 1;
    std::vector<bound_report> reports = check_prop1(model, cfg.trials, cfg.seed);
    bool pass = all_pass(reports);
    if (cfg.format == "structured") {
        emit(out, reports_doc(reports, pass));
    } else {
        for (const bound_report& r : reports) print_bound_text(out, r);
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_prop2(const run_config& cfg, std::ostream& out, std::ostream& err) {
    ensemble e = load_ensemble(cfg);
    const scenario* sc = select_scenario(e, cfg.scenario_id);
    if (!sc) {
        err << "ensemble has several scenarios; pick one with --scenario\n";
        return 2;
    }
    prop2_report r = cfg.exhaustive ? check_prop2_exhaustive(*sc)
                                    : check_prop2(*sc, cfg.orders, cfg.seed);
    if (cfg.format == "structured") {
        ojson body;
        body["report"] = to_json(r);
        body["pass"] = r.all_equal;
        emit(out, versioned(std::move(body)));
    } else {
        out << "scenario " << r.scenario_id << ": " << r.orders_checked << " order(s), "
            << r.claims_checked << " claim(s), " << (r.exhaustive ? "exhaustive" : "random")
            << "\n";
        if (!r.all_equal) out << "mismatch: " << r.mismatch << "\n";
        out << (r.all_equal ? "PASS" : "FAIL") << "\n";
    }
    return r.all_equal ? 0 : 1;
}

int run_prop3(const run_config& cfg, std::ostream& out) {
    debate_model m1, m2;
    m1.eps_new_info = cfg.eps1;
    m1.actual_new_info_prob = cfg.actual1 < 0 ? cfg.eps1 : cfg.actual1;
    m1.flip_prob_given_new_info = cfg.flip1;
    m1.initial_value = 1;
    m2.eps_new_info = cfg.eps2;
    m2.actual_new_info_prob = cfg.actual2 < 0 ? cfg.eps2 : cfg.actual2;
    m2.flip_prob_given_new_info = cfg.flip2;
    m2.initial_value = 1;
    bound_report r = check_prop3(m1, m2, parse_coupling(cfg.coupling_text), cfg.trials, cfg.seed);
    bool pass = r.satisfied_within_3se;
    if (cfg.format == "structured") {
        emit(out, reports_doc({r}, pass));
    } else {
        print_bound_text(out, r);
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_prop4(const run_config& cfg, std::ostream& out) {
    convergent_sequence_model model;
    model.max_change_point = cfg.max_change_point;
    estimator_spec rival = estimator_spec::parse(cfg.rival_text);
    std::vector<std::size_t> lengths = parse_lengths(cfg.lengths_text);
    std::vector<dominance_row> rows = check_prop4(model, rival, lengths, cfg.trials, cfg.seed);

    bool pass = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double slack = 3.0 * (rows[i - 1].standard_error + rows[i].standard_error);
        if (rows[i].frequency < rows[i - 1].frequency - slack) pass = false;
    }
    for (const dominance_row& row : rows)
        if (row.n >= 1000 && row.frequency < 0.99) pass = false;

    if (cfg.format == "structured") {
        ojson body;
        body["rival"] = rival.name();
        body["rows"] = ojson::array();
        for (const dominance_row& row : rows) body["rows"].push_back(to_json(row));
        body["pass"] = pass;
        emit(out, versioned(std::move(body)));
    } else {
        for (const dominance_row& row : rows)
            out << "n=" << row.n << " rival=" << row.rival << " frequency " << fmt(row.frequency)
                << " (se " << fmt(row.standard_error) << ", trials " << row.trials << ")\n";
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_prop5(const run_config& cfg, std::ostream& out) {
    debate_model m1, m2;
    m1.eps_new_info = cfg.eps1;
    m1.actual_new_info_prob = cfg.actual1 < 0 ? cfg.eps1 : cfg.actual1;
    m1.flip_prob_given_new_info = cfg.flip1;
    m1.initial_value = 1;
    m2.eps_new_info = cfg.eps2;
    m2.actual_new_info_prob = cfg.actual2 < 0 ? cfg.eps2 : cfg.actual2;
    m2.flip_prob_given_new_info = cfg.flip2;
    m2.initial_value = cfg.unequal_snapshots ? 0 : 1;
    std::vector<bound_report> reports =
        check_prop5(m1, m2, parse_coupling(cfg.coupling_text), cfg.trials, cfg.seed);
    bool pass = all_pass(reports);
    if (cfg.format == "structured") {
        emit(out, reports_doc(reports, pass));
    } else {
        for (const bound_report& r : reports) print_bound_text(out, r);
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_axioms(const run_config& cfg, std::ostream& out) {
    axiom_sweep_params params;
    axiom_report report = check_support_axioms(params, cfg.trials, cfg.seed);

    std::size_t genuine = 0;
    for (const axiom_violation& v : report.violations)
        if (!v.outside_hypothesis) ++genuine;
    bool pass = genuine == 0 && report.anchor_failures == 0;

    std::optional<axiom_scan> control;
    if (cfg.with_control) {
        ensemble ctrl = undercut_control_ensemble();
        literal theta{"theta", true};
        control = scan_ensemble_axioms(ctrl, std::span<const literal>(&theta, 1));
        bool flagged = false;
        for (const axiom_violation& v : control->violations)
            if (v.outside_hypothesis) flagged = true;
        if (!flagged) pass = false; // the control must trip and be flagged
    }

    if (cfg.format == "structured") {
        ojson body;
        body["sweep"] = to_json(report);
        if (control) {
            ojson cj;
            cj["has_undercuts"] = control->has_undercuts;
            cj["violations"] = ojson::array();
            for (const axiom_violation& v : control->violations)
                cj["violations"].push_back(to_json(v));
            body["control"] = std::move(cj);
        }
        body["pass"] = pass;
        emit(out, versioned(std::move(body)));
    } else {
        out << "sweep: " << report.trials << " ensemble(s), " << report.claims_checked
            << " claim check(s), " << report.violations.size() << " violation(s), "
            << report.anchor_failures << " anchor failure(s)\n";
        for (const axiom_violation& v : report.violations)
            out << "  trial " << v.trial << " claim " << to_string(v.claim) << ": m+ = "
                << v.support_positive.to_string() << ", m- = " << v.support_negative.to_string()
                << " (" << v.note << ")\n";
        if (control) {
            out << "control: undercuts " << (control->has_undercuts ? "present" : "absent")
                << ", " << control->violations.size() << " violation(s)\n";
            for (const axiom_violation& v : control->violations)
                out << "  claim " << to_string(v.claim) << ": m+ = "
                    << v.support_positive.to_string() << ", m- = "
                    << v.support_negative.to_string() << " (" << v.note << ")\n";
        }
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    run_config cfg;
    CLI::App app{"Dialectical scenario analysis: debate labels, weighted ensemble support, "
                 "distinctness auditing, and seeded bound checks."};
    app.require_subcommand(1);
    app.add_option("--seed", cfg.seed, "Master seed for all randomized subcommands");
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--strict", cfg.strict,
                 "Re-derive attached transcripts against their scenarios");
    app.add_flag("--strict-distinct", cfg.strict_distinct,
                 "Refuse ensembles with non-distinct scenario pairs");

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check an ensemble file");
    validate_cmd->add_option("ensemble", cfg.input_path, "Ensemble file")->required();
    validate_cmd->add_option("--tau", cfg.tau_text, "Distinctness tolerance");

    CLI::App* saturate_cmd =
        app.add_subcommand("saturate", "Emit the saturated transcript of one scenario");
    saturate_cmd->add_option("ensemble", cfg.input_path, "Ensemble file")->required();
    saturate_cmd->add_option("--scenario", cfg.scenario_id, "Scenario id");
    saturate_cmd->add_option("--policy", cfg.policy_text, "Articulation schedule")
        ->check(CLI::IsMember({"one_per_tick", "all_at_once"}));

    CLI::App* label_cmd = app.add_subcommand("label", "Labels for a claim in a transcript");
    label_cmd->add_option("transcript", cfg.input_path, "Transcript file")->required();
    label_cmd->add_option("--claim", cfg.claim_text, "Claim literal")->required();
    label_cmd->add_option("-t,--time", cfg.time, "Evaluation time (default: horizon)");

    CLI::App* timeline_cmd =
        app.add_subcommand("timeline", "Valuation series for a claim in a transcript");
    timeline_cmd->add_option("transcript", cfg.input_path, "Transcript file")->required();
    timeline_cmd->add_option("--claim", cfg.claim_text, "Claim literal")->required();
    timeline_cmd->add_option("--t-max", cfg.t_max, "Last time step (default: horizon)");

    CLI::App* support_cmd =
        app.add_subcommand("support", "Weighted ensemble support for a claim");
    support_cmd->add_option("ensemble", cfg.input_path, "Ensemble file")->required();
    support_cmd->add_option("--claim", cfg.claim_text, "Claim literal")->required();
    support_cmd->add_option("-t,--time", cfg.time,
                            "Common evaluation time (default: each horizon)");
    support_cmd->add_option("--policy", cfg.policy_text, "Articulation schedule")
        ->check(CLI::IsMember({"one_per_tick", "all_at_once"}));
    support_cmd->add_option("--tau", cfg.tau_text, "Distinctness tolerance for --strict-distinct");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Support classes for a claim across the ensemble");
    classify_cmd->add_option("ensemble", cfg.input_path, "Ensemble file")->required();
    classify_cmd->add_option("--claim", cfg.claim_text, "Claim literal")->required();
    classify_cmd->add_option("-t,--time", cfg.time,
                             "Common evaluation time (default: each horizon)");
    classify_cmd->add_option("--eps", cfg.eps_text, "Override the file's class_epsilon");
    classify_cmd->add_option("--policy", cfg.policy_text, "Articulation schedule")
        ->check(CLI::IsMember({"one_per_tick", "all_at_once"}));
    classify_cmd->add_option("--tau", cfg.tau_text,
                             "Distinctness tolerance for --strict-distinct");

    CLI::App* distinct_cmd =
        app.add_subcommand("distinct", "Pairwise distinctness audit of an ensemble");
    distinct_cmd->add_option("ensemble", cfg.input_path, "Ensemble file")->required();
    distinct_cmd->add_option("--tau", cfg.tau_text, "Distinctness tolerance");

    CLI::App* estimate_cmd =
        app.add_subcommand("estimate", "Estimate the limit value from a timeline file");
    estimate_cmd->add_option("timeline", cfg.input_path, "Timeline file")->required();
    estimate_cmd->add_option("--method", cfg.method_text,
                             "last | mean | trimmed:<a>,<b> | mode")
        ->required();
    estimate_cmd->add_option("--trim-variant", cfg.trim_variant_text, "sorted | positional")
        ->check(CLI::IsMember({"sorted", "positional"}));

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo bound checks");
    simulate_cmd->require_subcommand(1);

    CLI::App* p1 = simulate_cmd->add_subcommand("prop1", "Snapshot-to-limit retention bounds");
    p1->add_option("--eps", cfg.eps, "Asserted new-information bound")->required();
    p1->add_option("--actual", cfg.actual, "Actual arrival probability (default: eps)");
    p1->add_option("--flip", cfg.flip, "Flip probability given new information");
    p1->add_option("--trials", cfg.trials, "Trial count");

    CLI::App* p2 = simulate_cmd->add_subcommand("prop2", "Articulation-order invariance");
    p2->add_option("ensemble", cfg.input_path, "Ensemble file")->required();
    p2->add_option("--scenario", cfg.scenario_id, "Scenario id");
    p2->add_option("--orders", cfg.orders, "Random schedules to try");
    p2->add_flag("--exhaustive", cfg.exhaustive, "Try every permutation (<= 8 arguments)");

    CLI::App* p3 = simulate_cmd->add_subcommand("prop3", "Two-debate limit agreement bound");
    p3->add_option("--eps1", cfg.eps1, "First debate's bound")->required();
    p3->add_option("--eps2", cfg.eps2, "Second debate's bound")->required();
    p3->add_option("--actual1", cfg.actual1, "First actual probability (default: eps1)");
    p3->add_option("--actual2", cfg.actual2, "Second actual probability (default: eps2)");
    p3->add_option("--flip1", cfg.flip1, "First flip probability");
    p3->add_option("--flip2", cfg.flip2, "Second flip probability");
    p3->add_option("--coupling", cfg.coupling_text, "New-information coupling")
        ->check(CLI::IsMember({"independent", "comonotone"}));
    p3->add_option("--trials", cfg.trials, "Trial count");

    CLI::App* p4 = simulate_cmd->add_subcommand("prop4", "Final-observation dominance table");
    p4->add_option("--rival", cfg.rival_text, "Rival estimator");
    p4->add_option("--lengths", cfg.lengths_text, "Comma-separated sequence lengths");
    p4->add_option("--trials", cfg.trials, "Trials per length");
    p4->add_option("--max-change-point", cfg.max_change_point,
                   "Latest possible convergence time");

    CLI::App* p5 = simulate_cmd->add_subcommand("prop5", "Conditional snapshot-comparison bounds");
    p5->add_option("--eps1", cfg.eps1, "First debate's bound")->required();
    p5->add_option("--eps2", cfg.eps2, "Second debate's bound")->required();
    p5->add_option("--actual1", cfg.actual1, "First actual probability (default: eps1)");
    p5->add_option("--actual2", cfg.actual2, "Second actual probability (default: eps2)");
    p5->add_option("--flip1", cfg.flip1, "First flip probability");
    p5->add_option("--flip2", cfg.flip2, "Second flip probability");
    p5->add_option("--coupling", cfg.coupling_text, "New-information coupling")
        ->check(CLI::IsMember({"independent", "comonotone"}));
    p5->add_flag("--unequal-snapshots", cfg.unequal_snapshots,
                 "Condition on differing snapshot values");
    p5->add_option("--trials", cfg.trials, "Trial count");

    CLI::App* ax = simulate_cmd->add_subcommand("axioms", "Support-budget conjecture sweep");
    ax->add_option("--trials", cfg.trials, "Random ensembles to generate");
    ax->add_flag("--control", cfg.with_control, "Also scan the undercut-bearing control");

    // Let --seed/--format/--strict flags appear after the subcommand name too.
    for (CLI::App* sub : {validate_cmd, saturate_cmd, label_cmd, timeline_cmd, support_cmd,
                          classify_cmd, distinct_cmd, estimate_cmd, simulate_cmd, p1, p2, p3, p4,
                          p5, ax})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    // simulate defaults differ per subcommand
    if (simulate_cmd->got_subcommand(ax) && ax->count("--trials") == 0) cfg.trials = 1000;
    if (simulate_cmd->got_subcommand(p4) && p4->count("--trials") == 0) cfg.trials = 10'000;

    try {
        if (app.got_subcommand(validate_cmd)) return run_validate(cfg, out);
        if (app.got_subcommand(saturate_cmd)) return run_saturate(cfg, out, err);
        if (app.got_subcommand(label_cmd))
            return run_label(cfg, out, label_cmd->count("--time") > 0);
        if (app.got_subcommand(timeline_cmd))
            return run_timeline(cfg, out, timeline_cmd->count("--t-max") > 0);
        if (app.got_subcommand(support_cmd))
            return run_support(cfg, out, support_cmd->count("--time") > 0, false);
        if (app.got_subcommand(classify_cmd))
            return run_support(cfg, out, classify_cmd->count("--time") > 0, true);
        if (app.got_subcommand(distinct_cmd)) return run_distinct(cfg, out);
        if (app.got_subcommand(estimate_cmd)) return run_estimate(cfg, out);
        if (app.got_subcommand(simulate_cmd)) {
            if (simulate_cmd->got_subcommand(p1)) return run_prop1(cfg, out);
            if (simulate_cmd->got_subcommand(p2)) return run_prop2(cfg, out, err);
            if (simulate_cmd->got_subcommand(p3)) return run_prop3(cfg, out);
            if (simulate_cmd->got_subcommand(p4)) return run_prop4(cfg, out);
            if (simulate_cmd->got_subcommand(p5)) return run_prop5(cfg, out);
            if (simulate_cmd->got_subcommand(ax)) return run_axioms(cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand dispatched\n";
    return 2;
}

} // namespace agora
