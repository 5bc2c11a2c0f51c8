#pragma once

#include <txilm/core_types.hpp>
#include <txilm/mempool.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <variant>
#include <vector>

namespace txilm {

struct DecodeLimits {
    uint64_t max_combinations = uint64_t{1} << 20;
    uint64_t max_candidates_per_position = 64;

    /** Throws InvalidInput unless both limits are >= 1. */
    void validate() const;
};

struct DecodeStats {
    /** Positions left with more than one candidate after range pruning. */
    uint64_t ambiguous_positions = 0;
    uint64_t combinations_examined = 0;
    uint64_t crc_prechecks = 0;
    uint64_t crc_passes = 0;
    uint64_t sha_recomputations = 0;
    uint64_t missing_roundtrips = 0;
};

struct Resolved {
    FullBlock block;
};

struct MissingTx {
    /** Positions with no mempool candidate, increasing. */
    std::vector<std::size_t> positions;
    /** Candidates found for every other position. */
    std::map<std::size_t, std::vector<Txid>> candidates;
};

enum class FallbackReason {
    NoCombinationMatched,
    SearchBudgetExceeded,
};

std::string_view to_string(FallbackReason reason);

struct FallbackRequired {
    FallbackReason reason;
};

struct DecodeOutcome {
    std::variant<Resolved, MissingTx, FallbackRequired> result;
    DecodeStats stats;

    bool is_resolved() const { return std::holds_alternative<Resolved>(result); }
    bool is_missing() const { return std::holds_alternative<MissingTx>(result); }
    bool is_fallback() const { return std::holds_alternative<FallbackRequired>(result); }
    const FullBlock& block() const { return std::get<Resolved>(result).block; }
    const MissingTx& missing() const { return std::get<MissingTx>(result); }
    FallbackReason fallback_reason() const { return std::get<FallbackRequired>(result).reason; }
};

/**
 * Builds a full block with both Merkle roots in its header. In SortedByTxid
 * mode the transactions are sorted by txid first. Throws InvalidInput on an
 * empty list and InvalidBlock on duplicate txids.
 */
FullBlock build_block(std::vector<Transaction> txs, const Salt& salt, unsigned bits, OrderingMode mode);

CompactBlock encode(const FullBlock& block);

/** build_block followed by encode. */
CompactBlock encode(std::vector<Transaction> txs, const Salt& salt, unsigned bits, OrderingMode mode);

/**
 * Reconstructs a block from its short hashes and the receiver's mempool.
 *
 * Positions without candidates yield MissingTx before any search. Otherwise
 * candidate combinations are enumerated depth-first, candidates in increasing
 * txid order, never assigning one transaction to two positions. Each complete
 * combination is checked against the CRC-32 Merkle root first and only a CRC
 * match pays for the SHA-256 root. The first SHA match wins.
 *
 * Throws MalformedBlock if the hash list disagrees with the header.
 */
DecodeOutcome decode(const CompactBlock& compact, const Mempool& pool, const DecodeLimits& limits = {});

struct SupplyResult {
    DecodeOutcome outcome;
    /** Supplied txids that match no previously missing position. */
    std::vector<Txid> extraneous;
};

/**
 * Re-runs decode over a scratch copy of `pool` extended with `supplied`.
 * The caller's mempool is not modified.
 */
SupplyResult supply_missing(const CompactBlock& compact, const Mempool& pool,
                            std::span<const Transaction> supplied, const DecodeLimits& limits = {});

/**
 * Resolves a block from its complete txid list by exact lookup. Unknown
 * txids are reported as MissingTx; a complete list must still reproduce the
 * header's SHA-256 root or the outcome is NoCombinationMatched.
 * Throws InvalidInput on an empty list.
 */
DecodeOutcome fallback_decode(const BlockHeader& header, std::span<const Txid> txids, const Mempool& pool);

namespace detail {

enum class Visit { Continue, Stop };

/**
 * Depth-first walk over one candidate per position. Candidates at a position
 * are tried in list order; a txid is never used at two positions, and in
 * SortedByTxid mode the chosen txids must strictly increase. `visit` receives
 * the chosen index for each position.
 */
void for_each_combination(const std::vector<std::vector<Txid>>& candidates, OrderingMode mode,
                          const std::function<Visit(std::span<const std::size_t>)>& visit);

/**
 * Sorted-mode range pruning: drops candidates that cannot be strictly
 * between any choice at the neighboring positions. Returns false if some
 * position is left empty.
 */
bool prune_sorted_ranges(std::vector<std::vector<Txid>>& candidates);

} // namespace detail
} // namespace txilm
