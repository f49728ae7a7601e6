#ifndef EXPC_EXPERIMENT_HPP
#define EXPC_EXPERIMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "expc/complexity.hpp"
#include "expc/generators.hpp"
#include "expc/parallel.hpp"

namespace expc {

// E_N over random sequences, measured against the sqrt(N/2) reference line.
// Only the dimension bound E_N <= dimension_upper_bound(N) is a hard
// invariant; the rest are statistics.
struct ExperimentReport {
    std::uint32_t p = 0;
    std::size_t N = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double threshold = 0.8; // ratio to sqrt(N/2) counted as "low"
    std::vector<std::uint64_t> sample_seeds;
    std::vector<std::uint32_t> E;
    double ratio_min = 0, ratio_median = 0, ratio_max = 0;
    std::size_t upper_bound_violations = 0;
    double fraction_below_threshold = 0;
};

inline ExperimentReport run_random_experiment(std::uint32_t p, std::size_t N, std::size_t samples, std::uint64_t seed,
                                              double threshold = 0.8,
                                              unsigned threads = std::thread::hardware_concurrency())
{
    if (samples == 0) throw invalid_param("samples must be >= 1");
    if (N == 0) throw invalid_param("N must be >= 1");
    ExperimentReport rep;
    rep.p = p;
    rep.N = N;
    rep.samples = samples;
    rep.seed = seed;
    rep.threshold = threshold;
    CounterRng seeds(seed);
    for (std::size_t i = 0; i < samples; ++i) rep.sample_seeds.push_back(seeds.next());
    rep.E.resize(samples);
    detail::parallel_for(
        samples,
        [&](std::size_t i) {
            rep.E[i] = expansion_complexity_gb(gen_random(p, N, rep.sample_seeds[i]), N, Engine::fglm).value;
        },
        threads);

    const double ref = std::sqrt(static_cast<double>(N) / 2.0);
    const std::uint32_t cap = dimension_upper_bound(N);
    std::vector<double> ratios;
    std::size_t below = 0;
    for (auto e : rep.E) {
        ratios.push_back(e / ref);
        if (e > cap) ++rep.upper_bound_violations;
        if (e < threshold * ref) ++below;
    }
    std::sort(ratios.begin(), ratios.end());
    rep.ratio_min = ratios.front();
    rep.ratio_max = ratios.back();
    const std::size_t n = ratios.size();
    rep.ratio_median = n % 2 ? ratios[n / 2] : (ratios[n / 2 - 1] + ratios[n / 2]) / 2;
    rep.fraction_below_threshold = static_cast<double>(below) / static_cast<double>(n);
    return rep;
}

inline nlohmann::ordered_json to_json(const ExperimentReport& r)
{
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["N"] = r.N;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["reference"] = "sqrt(N/2)";
    j["threshold_ratio"] = r.threshold;
    j["dimension_upper_bound"] = dimension_upper_bound(r.N);
    j["upper_bound_violations"] = r.upper_bound_violations;
    j["summary"] = {{"min", r.ratio_min}, {"median", r.ratio_median}, {"max", r.ratio_max}};
    j["fraction_below_threshold"] = r.fraction_below_threshold;
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.E.size(); ++i) per.push_back({{"seed", r.sample_seeds[i]}, {"E", r.E[i]}});
    j["per_sample"] = per;
    return j;
}

} // namespace expc

#endif
