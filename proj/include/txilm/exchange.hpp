#pragma once

#include <txilm/codec.hpp>
#include <txilm/random_stream.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace txilm {

/** Fixed framing cost charged to every message beyond the block announcement. */
inline constexpr std::size_t kMessageOverheadBytes = 16;

struct ExchangeConfig {
    uint64_t n = 200;
    uint64_t tx_size_bytes = 320;
    /** Fraction of the block's transactions already in the receiver's pool. */
    double mempool_overlap = 1.0;
    uint64_t extra_pool_size = 0;
    unsigned k = 32;
    OrderingMode mode = OrderingMode::AsProduced;
    Seed seed{};
    DecodeLimits limits{};

    void validate() const;
};

/**
 * Byte accounting for one sender-to-receiver block relay.
 *
 * bytes_txilm = wire_bytes + missing_roundtrip_bytes + fallback_bytes.
 * A missing-transaction round trip costs two messages of overhead plus
 * 32 + tx_size_bytes per missing transaction; a fallback costs two messages
 * of overhead plus the full txid list wire size.
 */
struct BandwidthReport {
    uint64_t n = 0;
    uint64_t bytes_full_block = 0;
    uint64_t bytes_txid_compact = 0;
    uint64_t wire_bytes = 0;
    uint64_t packed_hash_bytes = 0;
    uint64_t missing_roundtrip_bytes = 0;
    uint64_t fallback_bytes = 0;
    uint64_t bytes_txilm = 0;
    double ratio_vs_full = 0;
    double ratio_vs_txid_compact = 0;
    /** Packed hash bytes per transaction (k / 8). */
    double per_tx_bytes = 0;
    uint64_t missing_count = 0;
    bool fallback_used = false;
    /** Final outcome name: resolved, missing-tx or fallback-required. */
    std::string outcome;
    /** The receiver ended with exactly the sender's txid sequence. */
    bool reconstructed = false;
    DecodeStats stats;
};

BandwidthReport run_exchange(const ExchangeConfig& config);

/** One "key<TAB>value" line per field. */
std::string format_report(const BandwidthReport& report);

/** Deterministic synthetic transactions: `count` payloads of `size` bytes from stream `label` of `seed`. */
std::vector<Transaction> synthetic_transactions(const Seed& seed, std::string_view label, uint64_t count,
                                                uint64_t size);

} // namespace txilm
