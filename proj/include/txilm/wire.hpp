#pragma once

#include <txilm/core_types.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace txilm {

/*
 * Compact block wire layout (multi-byte integers little-endian unless noted):
 *
 *   "TXLM" | version u8 (=1) | flags u8 (bit0 = sorted) | hash_bits u8 |
 *   salt[4] | tx_count u32 | crc_merkle_root[4] (big-endian) |
 *   sha_merkle_root[32] | packed hashes
 *
 * Each hash value is written as hash_bits bits, most significant bit first,
 * concatenated across values and zero-padded to a byte boundary.
 *
 * Full txid list: "TXID" | version u8 (=1) | tx_count u32 | tx_count x 32 bytes.
 */
inline constexpr uint8_t kWireVersion = 1;
inline constexpr std::size_t kCompactHeaderBytes = 4 + 1 + 1 + 1 + 4 + 4 + 4 + 32;
inline constexpr std::size_t kTxidListHeaderBytes = 4 + 1 + 4;

std::size_t packed_hash_bytes(std::size_t count, unsigned bits);
std::size_t compact_wire_size(const CompactBlock& compact);
std::size_t txid_list_wire_size(std::size_t count);

std::vector<uint8_t> serialize_compact(const CompactBlock& compact);

/** Throws MalformedBlock on bad magic, version, flags, width, length or nonzero padding. */
CompactBlock parse_compact(std::span<const uint8_t> wire);

std::vector<uint8_t> serialize_txid_list(std::span<const Txid> txids);

/** Throws MalformedBlock. */
std::vector<Txid> parse_txid_list(std::span<const uint8_t> wire);

} // namespace txilm
