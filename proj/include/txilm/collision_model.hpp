#pragma once

#include <txilm/random_stream.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace txilm {

/** k-bit hashes, mempool of m transactions, block of n short hashes. */
struct CollisionParams {
    unsigned k = 32;
    uint64_t m = 0;
    uint64_t n = 0;

    /** Throws InvalidInput unless 1 <= k <= 64. */
    void validate() const;
};

/**
 * Single-collision probability when the block order is unconstrained:
 * 1 - (1 - 2^-k)^(mn + n^2/2), evaluated as -expm1(E * log1p(-2^-k)).
 */
double p_sc_unsorted(const CollisionParams& params);

/**
 * Single-collision probability with txid-sorted blocks, where each hash only
 * competes inside its neighbors' range: 1 - (1 - 2^-k)^m. n does not appear.
 */
double p_sc_sorted(const CollisionParams& params);

struct SimConfig {
    CollisionParams params;
    uint64_t trials = 1;
    Seed seed{};
    bool sorted = false;
    /** Worker threads; 0 picks the hardware concurrency. Results do not depend on it. */
    unsigned threads = 0;
};

struct SweepRow {
    unsigned k = 0;
    uint64_t n = 0;
    double p_analytic = 0;
    double p_empirical = 0;
    uint64_t trials = 0;
    /** T_k: trials with at least one collision. */
    uint64_t collisions = 0;
};

/**
 * Longest run of equal low-order bits between a block hash and any hash it
 * competes with, for one trial. The trial collides at width k exactly when
 * the run is >= k (64 means all 64 bits agree).
 */
struct TrialResult {
    unsigned unsorted_bits = 0;
    unsigned sorted_bits = 0;
};

/**
 * One simulation trial. Draws m mempool txids then n block txids from
 * stream `trial_index` of `seed`, one 32-byte block per txid, skipping any
 * repeat of an earlier draw. Hashes use a zero salt.
 *
 * Unsorted: a block hash competes with every other hash (mempool or block).
 * Sorted: txids are placed in order and a block hash competes only with the
 * txids strictly between its previous and next block neighbors.
 */
TrialResult run_trial(const Seed& seed, uint64_t trial_index, uint64_t m, uint64_t n);

/** Histograms over TrialResult, indexed by run length 0..=64. */
struct TrialHistogram {
    std::array<uint64_t, 65> unsorted{};
    std::array<uint64_t, 65> sorted{};
    uint64_t trials = 0;

    /** Trials colliding at width k in the given mode. */
    uint64_t collisions_at(unsigned k, bool sorted_mode) const;
};

/** Runs trials 0..trials-1, split across threads; the sum is order-independent. */
TrialHistogram run_trials(const Seed& seed, uint64_t m, uint64_t n, uint64_t trials, unsigned threads = 0);

SweepRow simulate(const SimConfig& config);

struct SweepConfig {
    unsigned k_min = 20;
    unsigned k_max = 35;
    uint64_t m = 1000;
    std::vector<uint64_t> n_list{100, 300, 500};
    uint64_t trials = 100'000;
    Seed seed{};
    bool sorted = false;
    unsigned threads = 0;

    /** Throws InvalidInput on empty or out-of-range settings. */
    void validate() const;
};

/** One row per (n, k), n-major then k-minor. Every k shares the same trials. */
std::vector<SweepRow> sweep(const SweepConfig& config);

/** Rows of a single n as TSV with header "k\tp_analytic\tp_empirical". */
std::string sweep_tsv(std::span<const SweepRow> rows);

/** "n=<n>.dat" or "sorted_n=<n>.dat". */
std::string sweep_file_name(uint64_t n, bool sorted);

} // namespace txilm
