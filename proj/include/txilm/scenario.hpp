#pragma once

#include <txilm/adversary.hpp>
#include <txilm/codec.hpp>
#include <txilm/errors.hpp>
#include <txilm/random_stream.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace txilm {

/** A scenario the harness declines to run. */
class ScenarioRefused : public Error {
public:
    using Error::Error;
};

enum class SaltKnowledge {
    Known,
    Unknown,
};

/**
 * Attack scenario, parsed from "key = value" lines ('#' starts a comment).
 * Required: k, salt_mode (known|unknown), targets, colliders_per_target,
 * budget, seed. Optional: n (default 32), extra_pool (0),
 * forks_observed (true), multiplier (10), min_absolute (3).
 */
struct AttackScenario {
    unsigned k = 16;
    SaltKnowledge salt_mode = SaltKnowledge::Known;
    uint64_t targets = 5;
    uint64_t colliders_per_target = 2;
    uint64_t budget = uint64_t{1} << 24;
    Seed seed{};
    uint64_t n = 32;
    uint64_t extra_pool = 0;
    bool forks_observed = true;
    double multiplier = 10;
    uint64_t min_absolute = 3;
};

/** Throws InvalidInput on unknown keys, missing required keys or bad values. */
AttackScenario parse_scenario(std::string_view text);

struct AttackReport {
    uint64_t colliders_inserted = 0;
    bool flood_complete = true;
    std::string first_outcome;
    DecodeStats stats;
    bool fallback_used = false;
    /** Receiver ended with the sender's exact block. */
    bool reconstructed = false;
    double expected_ambiguity = 0;
    bool attack_suspected = false;
    EncodingMode next_mode = EncodingMode::ShortHash;
};

/**
 * flood -> decode -> detect -> next_block_mode over a seeded block of n
 * transactions whose receiver pool holds the whole block plus extra_pool
 * unrelated transactions. A failed search falls back to the full txid list.
 * Throws ScenarioRefused when salt_mode is known and k > 32.
 */
AttackReport run_attack(const AttackScenario& scenario);

std::string format_attack_report(const AttackReport& report);

} // namespace txilm
