#include "pue/channel_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

namespace pue {
namespace {

constexpr std::uint64_t kChunkTrials = std::uint64_t{1} << 16;

std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

std::uint64_t run_chunk(const LinearCode& code, double p, std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t trials) {
    std::seed_seq seq{lo32(seed), hi32(seed), lo32(chunk), hi32(chunk)};
    std::mt19937_64 rng(seq);
    const GaloisField& f = code.field();
    const GeneratorMatrix& h = code.dual_generator();
    const std::size_t n = code.n();
    const double nonzero_symbols = f.q() - 1.0;
    std::vector<Symbol> e(n);
    std::uint64_t undetected = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) {
                // u / p is uniform on [0, 1) given an error, so it picks the nonzero symbol.
                const auto pick = static_cast<unsigned>(u / p * nonzero_symbols);
                e[j] = Symbol{1u + std::min(pick, f.q() - 2u)};
                any = true;
            } else {
                e[j] = f.zero();
            }
        }
        if (!any) continue;
        bool codeword = true;
        for (std::size_t r = 0; r < h.k() && codeword; ++r) codeword = dot(f, h.row(r), e).is_zero();
        undetected += codeword;
    }
    return undetected;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string SimulationReport::csv_header() {
    return "code_id,q,n,k,p,trials,undetected,estimate,std_error,seed,rng";
}

std::string SimulationReport::csv_row() const {
    return code_id + ',' + std::to_string(q) + ',' + std::to_string(n) + ',' + std::to_string(k) + ',' + fmt(p) + ','
           + std::to_string(trials) + ',' + std::to_string(undetected) + ',' + fmt(estimate) + ','
           + fmt(standard_error) + ',' + std::to_string(seed) + ',' + rng;
}

SimulationReport simulate_ue(const LinearCode& code, const ChannelParameter& p, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers, std::string code_id) {
    if (trials < 1) throw ParameterError("simulation needs at least one trial");
    if (p.q() != code.q()) throw DimensionMismatch("channel alphabet differs from code alphabet");

    const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
    const unsigned pool_size = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, chunks)));
    std::vector<std::uint64_t> counts(pool_size, 0);
    std::atomic<std::uint64_t> next{0};
    auto work = [&](unsigned w) {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t len = std::min(kChunkTrials, trials - c * kChunkTrials);
            counts[w] += run_chunk(code, p.p(), seed, c, len);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < pool_size; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();

    SimulationReport r;
    r.code_id = std::move(code_id);
    r.q = code.q();
    r.n = code.n();
    r.k = code.k();
    r.p = p.p();
    r.trials = trials;
    for (std::uint64_t c : counts) r.undetected += c;
    r.estimate = static_cast<double>(r.undetected) / static_cast<double>(trials);
    r.standard_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
    r.seed = seed;
    return r;
}

}  // namespace pue
