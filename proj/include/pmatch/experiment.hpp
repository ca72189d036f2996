#pragma once

// Batch verification over generated point sets.
//
// Trial t (0-based) uses kind kinds[t % K] and size
//   n = n_min + 2 * ((t / K) mod ((n_max - n_min) / 2 + 1)),
// raised to the kind's minimum size, and generator seed (seed XOR t).

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "pmatch/classify.hpp"
#include "pmatch/error.hpp"
#include "pmatch/generate.hpp"

namespace pmatch {

struct experiment_config {
    std::size_t trials = 0;
    std::size_t n_min = 4;
    std::size_t n_max = 4;
    std::uint64_t seed = 0;
    std::vector<generator_kind> kinds{generator_kind::random_disk};
    std::size_t threads = 1;
    witness_options witness{engine_options{}, nullptr};
};

struct experiment_failure {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    generator_kind kind = generator_kind::random_disk;
    std::string check;
    friend bool operator==(const experiment_failure&, const experiment_failure&) = default;
};

struct timing_stats {
    double total_ms = 0;
    double min_ms = 0;
    double max_ms = 0;
    double mean_ms = 0;
};

struct experiment_summary {
    std::size_t trials = 0;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::vector<experiment_failure> failures;
    timing_stats timings;
};

struct trial_plan {
    generator_kind kind;
    std::size_t n;
    std::uint64_t seed;
};

inline trial_plan plan_trial(const experiment_config& config, std::size_t t) {
    const std::size_t kinds = config.kinds.size();
    const std::size_t steps = (config.n_max - config.n_min) / 2 + 1;
    trial_plan p;
    p.kind = config.kinds[t % kinds];
    p.n = config.n_min + 2 * ((t / kinds) % steps);
    if (p.kind == generator_kind::exceptional) p.n = 6;
    p.n = std::max(p.n, minimum_size(p.kind));
    p.seed = config.seed ^ static_cast<std::uint64_t>(t);
    return p;
}

namespace detail {

struct trial_outcome {
    std::vector<experiment_failure> failures;
    double ms = 0;
};

inline trial_outcome run_trial(const experiment_config& config, std::size_t t) {
    const trial_plan plan = plan_trial(config, t);
    trial_outcome out;
    const auto start = std::chrono::steady_clock::now();
    auto fail = [&](std::string label) {
        out.failures.push_back(experiment_failure{plan.seed, plan.n, plan.kind, std::move(label)});
    };
    try {
        generator_spec spec;
        spec.kind = plan.kind;
        spec.n = plan.n;
        spec.seed = plan.seed;
        const point_set s = generate(spec);
        const theorem_report r = verify_main_theorem(s, config.witness);
        for (const auto& label : r.failed_checks) fail(label);
    } catch (const error& e) {
        fail(std::string(to_string(e.code())));
    }
    out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace detail

/// The summary does not depend on config.threads apart from timings.
inline experiment_summary run_experiment(const experiment_config& config) {
    experiment_summary summary;
    summary.trials = config.trials;
    summary.n_min = config.n_min;
    summary.n_max = config.n_max;
    if (config.trials == 0) return summary;
    if (config.n_min < 2 || config.n_min % 2 != 0 || config.n_max % 2 != 0 || config.n_max < config.n_min)
        throw error(errc::invalid_argument, "n range must be even with 2 <= n_min <= n_max");
    if (config.kinds.empty()) throw error(errc::invalid_argument, "no generator kinds given");

    std::vector<detail::trial_outcome> outcomes(config.trials);
    const std::size_t workers = std::clamp<std::size_t>(config.threads, 1, config.trials);
    if (workers == 1) {
        for (std::size_t t = 0; t < config.trials; ++t) outcomes[t] = detail::run_trial(config, t);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < config.trials; t += workers) outcomes[t] = detail::run_trial(config, t);
            });
        }
    }

    summary.timings.min_ms = outcomes.front().ms;
    for (const auto& o : outcomes) {
        summary.failures.insert(summary.failures.end(), o.failures.begin(), o.failures.end());
        summary.timings.total_ms += o.ms;
        summary.timings.min_ms = std::min(summary.timings.min_ms, o.ms);
        summary.timings.max_ms = std::max(summary.timings.max_ms, o.ms);
    }
    summary.timings.mean_ms = summary.timings.total_ms / static_cast<double>(config.trials);
    return summary;
}

}  // namespace pmatch
