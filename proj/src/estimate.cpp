#include "agora/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace agora {

const char* to_string(trim_variant v) noexcept {
    return v == trim_variant::sorted ? "sorted" : "positional";
}

trim_variant parse_trim_variant(std::string_view text) {
    if (text == "sorted") return trim_variant::sorted;
    if (text == "positional") return trim_variant::positional;
    throw error("unknown trim variant '" + std::string(text) + "'");
}

estimator_spec estimator_spec::last() {
    return estimator_spec(estimator_kind::last, 0.0, 0.0, trim_variant::sorted);
}

estimator_spec estimator_spec::mean() {
    return estimator_spec(estimator_kind::mean, 0.0, 0.0, trim_variant::sorted);
}

estimator_spec estimator_spec::trimmed(double alpha_percent, double beta_percent,
                                       trim_variant variant) {
    if (!(alpha_percent >= 0.0) || !(beta_percent >= 0.0))
        throw error("trim percentages must be non-negative");
    if (!(alpha_percent + beta_percent < 100.0))
        throw error("trim percentages must sum below 100");
    return estimator_spec(estimator_kind::trimmed, alpha_percent, beta_percent, variant);
}

estimator_spec estimator_spec::mode() {
    return estimator_spec(estimator_kind::mode, 0.0, 0.0, trim_variant::sorted);
}

estimator_spec estimator_spec::parse(std::string_view text) {
    if (text == "last") return last();
    if (text == "mean") return mean();
    if (text == "mode") return mode();
    const std::string_view prefix = "trimmed:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string body(text.substr(prefix.size()));
        trim_variant variant = trim_variant::sorted;
        std::size_t second_comma = body.find(',', body.find(',') + 1);
        if (body.find(',') != std::string::npos && second_comma != std::string::npos) {
            variant = parse_trim_variant(body.substr(second_comma + 1));
            body.resize(second_comma);
        }
        std::size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw error("trimmed estimator needs two percentages, got '" + std::string(text) + "'");
        double a, b;
        try {
            std::size_t used = 0;
            a = std::stod(body.substr(0, comma), &used);
            if (used != comma) throw error("");
            std::string tail = body.substr(comma + 1);
            b = std::stod(tail, &used);
            if (used != tail.size()) throw error("");
        } catch (const std::exception&) {
            throw error("malformed trim percentages in '" + std::string(text) + "'");
        }
        return trimmed(a, b, variant);
    }
    throw error("unknown estimator '" + std::string(text) +
                "' (expected last, mean, mode, or trimmed:<a>,<b>[,<variant>])");
}

std::string estimator_spec::name() const {
    switch (kind_) {
        case estimator_kind::last: return "last";
        case estimator_kind::mean: return "mean";
        case estimator_kind::mode: return "mode";
        case estimator_kind::trimmed: {
            auto fmt = [](double v) {
                std::string s = std::to_string(v);
                s.erase(s.find_last_not_of('0') + 1);
                if (!s.empty() && s.back() == '.') s.pop_back();
                return s;
            };
            return "trimmed:" + fmt(alpha_) + "," + fmt(beta_) + "," + to_string(variant_);
        }
    }
    return "last";
}

double estimator_spec::estimate(std::span<const int> values) const {
    if (values.empty()) throw error("estimate of an empty sequence");
    for (int v : values)
        if (v != 0 && v != 1) throw error("snapshot value " + std::to_string(v) + " is not 0 or 1");

    switch (kind_) {
        case estimator_kind::last:
            return static_cast<double>(values.back());
        case estimator_kind::mean: {
            long sum = 0;
            for (int v : values) sum += v;
            return static_cast<double>(sum) / static_cast<double>(values.size());
        }
        case estimator_kind::trimmed: {
            std::size_t n = values.size();
            auto lo = static_cast<std::size_t>(std::floor(alpha_ * static_cast<double>(n) / 100.0));
            auto hi = static_cast<std::size_t>(std::floor(beta_ * static_cast<double>(n) / 100.0));
            if (lo + hi >= n) throw error("trimming removes every observation");
            std::vector<int> kept(values.begin(), values.end());
            if (variant_ == trim_variant::sorted) std::sort(kept.begin(), kept.end());
            kept.erase(kept.end() - static_cast<std::ptrdiff_t>(hi), kept.end());
            kept.erase(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(lo));
            long sum = 0;
            for (int v : kept) sum += v;
            return static_cast<double>(sum) / static_cast<double>(kept.size());
        }
        case estimator_kind::mode: {
            std::size_t ones = 0;
            for (int v : values)
                if (v == 1) ++ones;
            std::size_t zeros = values.size() - ones;
            if (ones > zeros) return 1.0;
            if (zeros > ones) return 0.0;
            return static_cast<double>(values.back());
        }
    }
    return 0.0;
}

convergent_draw generate_convergent(const convergent_sequence_model& model, std::size_t n,
                                    trial_rng& rng) {
    if (model.max_change_point < 1) throw error("change point bound below 1");
    if (n == 0) throw error("empty sequence requested");
    convergent_draw draw;
    draw.change_point =
        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(model.max_change_point)));
    draw.limit = rng.bernoulli(model.limit_one_prob) ? 1 : 0;
    draw.values.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) {
        if (static_cast<int>(t) < draw.change_point)
            draw.values.push_back(rng.bernoulli(model.pre_one_prob) ? 1 : 0);
        else
            draw.values.push_back(draw.limit);
    }
    return draw;
}

std::vector<dominance_row> check_prop4(const convergent_sequence_model& model,
                                       const estimator_spec& rival,
                                       std::span<const std::size_t> lengths, std::size_t trials,
                                       std::uint64_t seed) {
    if (lengths.empty()) throw error("no sequence lengths given");
    if (trials == 0) throw error("zero trials");
    estimator_spec final_value = estimator_spec::last();

    std::vector<dominance_row> rows;
    for (std::size_t li = 0; li < lengths.size(); ++li) {
        std::size_t n = lengths[li];
        std::size_t hits = 0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            trial_rng rng(derive_seed(seed, li, trial));
            convergent_draw draw = generate_convergent(model, n, rng);
            double last_err = std::abs(final_value.estimate(draw.values) - draw.limit);
            double rival_err = std::abs(rival.estimate(draw.values) - draw.limit);
            if (last_err <= rival_err) ++hits;
        }
        double freq = static_cast<double>(hits) / static_cast<double>(trials);
        dominance_row row;
        row.n = n;
        row.rival = rival.name();
        row.frequency = freq;
        row.standard_error = std::sqrt(freq * (1.0 - freq) / static_cast<double>(trials));
        row.trials = trials;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace agora
