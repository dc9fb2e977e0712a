#ifndef PUE_CHANNEL_SIM_HPP
#define PUE_CHANNEL_SIM_HPP

#include "pue/linear_code.hpp"
#include "pue/ue_bounds.hpp"

#include <cstdint>
#include <string>

namespace pue {

/// Identifier stored in every report: per-chunk std::mt19937_64 seeded through
/// std::seed_seq{seed_lo, seed_hi, chunk_lo, chunk_hi}, 2^16 trials per chunk,
/// uniforms from the top 53 bits.
inline constexpr const char* kRngAlgorithm = "mt19937_64/seed_seq/chunk65536";

struct SimulationReport {
    std::string code_id;
    unsigned q = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t undetected = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t seed = 0;
    std::string rng = kRngAlgorithm;

    static std::string csv_header();
    std::string csv_row() const;
};

/// Monte Carlo estimate of P_ue over the q-ary symmetric channel. An error pattern is
/// undetected iff it is a nonzero codeword, so only error patterns are sampled.
/// The result depends on the seed only, never on `workers`.
SimulationReport simulate_ue(const LinearCode& code, const ChannelParameter& p, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers = 1, std::string code_id = "code");

}  // namespace pue

#endif  // PUE_CHANNEL_SIM_HPP
