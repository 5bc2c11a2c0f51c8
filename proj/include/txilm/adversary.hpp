#pragma once

#include <txilm/codec.hpp>
#include <txilm/core_types.hpp>
#include <txilm/mempool.hpp>
#include <txilm/random_stream.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace txilm {

struct AttackBudget {
    uint64_t max_tries_per_target = uint64_t{1} << 24;
    Seed rng_seed{};

    void validate() const;
};

/** Size of every crafted payload; each try consumes one stream block. */
inline constexpr std::size_t kCraftedPayloadBytes = 32;

/**
 * Brute-forces a transaction whose short hash under `salt` equals `target`.
 * Payloads are successive 32-byte blocks of stream `stream_index` of the
 * budget seed. With no salt the attacker grinds against the zero salt, the
 * best it can do before the real salt is announced. Returns nullopt once
 * max_tries_per_target payloads fail.
 */
std::optional<Transaction> craft_collision(const ShortHash& target, const std::optional<Salt>& salt,
                                           const AttackBudget& budget, uint64_t stream_index = 0);

/**
 * Crafts `per_target` colliders for every target value in one shared grind:
 * each try is checked against all outstanding targets, so the total cost is
 * close to that of the hardest target rather than the sum. Stops after
 * max_tries_per_target * targets.size() tries. Result i holds the colliders
 * found for targets[i] (possibly fewer than requested).
 */
std::vector<std::vector<Transaction>> craft_collisions(std::span<const uint64_t> targets, uint64_t per_target,
                                                       const Salt& salt, unsigned bits,
                                                       const AttackBudget& budget, uint64_t stream_index = 0);

struct FloodResult {
    Mempool pool;
    /** Colliders inserted per targeted block position. */
    std::map<std::size_t, uint64_t> crafted;
    bool complete = true;
};

/**
 * Post-announcement flood: the attacker knows the block salt and adds
 * colliders for the short hashes at `targets` to a copy of `pool`.
 * Throws InvalidInput on a position outside the block.
 */
FloodResult flood(const Mempool& pool, const CompactBlock& compact, uint64_t colliders_per_target,
                  std::span<const std::size_t> targets, const AttackBudget& budget);

/**
 * Pre-announcement flood: the salt is unknown, so colliders are ground
 * against the zero-salt short hashes of the targeted transactions.
 */
FloodResult flood_unsalted(const Mempool& pool, std::span<const Txid> target_txids, unsigned bits,
                           uint64_t colliders_per_target, const AttackBudget& budget);

struct DetectionPolicy {
    double expected_ambiguity = 0;
    double multiplier = 10;
    uint64_t min_absolute = 3;
    bool forks_observed = false;

    void validate() const;
};

/**
 * Expected number of ambiguous positions for an honest block of n hashes
 * against a pool of m other transactions. In sorted mode a position only
 * competes with about 2m/n transactions.
 */
double expected_ambiguity(unsigned bits, uint64_t m, uint64_t n, OrderingMode mode);

/** Ambiguity far above expectation and an observed fork, both required. */
bool detect(const DecodeStats& stats, const DetectionPolicy& policy);

enum class EncodingMode {
    ShortHash,
    FullTxidList,
};

std::string_view to_string(EncodingMode mode);

/** Falls back for exactly the block after a suspected attack. */
EncodingMode next_block_mode(std::span<const bool> history);

} // namespace txilm
