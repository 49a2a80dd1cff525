#pragma once

#include "agora/lang.hpp"
#include "agora/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace agora {

// A recorded series of 0/1 truth valuations for one claim in one debate.
struct snapshot_sequence {
    literal claim;
    std::string source;
    std::vector<int> values; // each 0 or 1
};

enum class estimator_kind { last, mean, trimmed, mode };
enum class trim_variant { sorted, positional };

const char* to_string(trim_variant v) noexcept;
trim_variant parse_trim_variant(std::string_view text);

// Estimators of the limit value from a finite snapshot sequence:
//   last:    the final observation.
//   mean:    sum / n.
//   trimmed: mean after deleting floor(alpha*n/100) observations at the low
//            end and floor(beta*n/100) at the high end; the sorted variant
//            ranks first, the positional variant deletes the earliest and
//            latest observations in time order.
//   mode:    majority value, ties broken toward the final element's value.
class estimator_spec {
public:
    static estimator_spec last();
    static estimator_spec mean();
    static estimator_spec trimmed(double alpha_percent, double beta_percent,
                                  trim_variant variant = trim_variant::sorted);
    static estimator_spec mode();

    // "last" | "mean" | "mode" | "trimmed:<a>,<b>[,positional]"
    static estimator_spec parse(std::string_view text);

    estimator_kind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    trim_variant variant() const noexcept { return variant_; }

    std::string name() const;

    double estimate(std::span<const int> values) const;
    double estimate(const snapshot_sequence& seq) const { return estimate(seq.values); }

private:
    estimator_spec(estimator_kind kind, double alpha, double beta, trim_variant variant)
        : kind_(kind), alpha_(alpha), beta_(beta), variant_(variant) {}

    estimator_kind kind_;
    double alpha_;
    double beta_;
    trim_variant variant_;
};

// Random 0/1 sequences with an eventually-constant tail: Bernoulli noise
// before a uniformly drawn change point, then the limit value for good.
struct convergent_sequence_model {
    int max_change_point = 200;
    double pre_one_prob = 0.5;
    double limit_one_prob = 0.5;
};

struct convergent_draw {
    std::vector<int> values;
    int limit = 0;
    int change_point = 1; // first index (1-based) at which values are constant
};

convergent_draw generate_convergent(const convergent_sequence_model& model, std::size_t n,
                                    trial_rng& rng);

struct dominance_row {
    std::size_t n = 0;
    std::string rival;
    double frequency = 0.0; // of trials where the last value is at least as close
    double standard_error = 0.0;
    std::size_t trials = 0;
};

// Empirical check that the final observation estimates the limit at least as
// well as the rival: frequency of |last - limit| <= |rival - limit| per n.
std::vector<dominance_row> check_prop4(const convergent_sequence_model& model,
                                       const estimator_spec& rival,
                                       std::span<const std::size_t> lengths, std::size_t trials,
                                       std::uint64_t seed);

} // namespace agora
