#pragma once

#include <txilm/sha256.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace txilm {

/** Largest accepted transaction payload, in bytes. */
inline constexpr std::size_t kMaxPayloadBytes = 100'000;

/** Short hashes are truncations of a 64-bit CRC, so 64 is the ceiling. */
inline constexpr unsigned kMaxHashBits = 64;
/**
 * Lowest width the library accepts. The protocol recommends 20..=64; narrower
 * widths exist so collision attacks can be exercised at desk scale.
 */
inline constexpr unsigned kMinHashBits = 1;
inline constexpr unsigned kMinProtocolHashBits = 20;

/** Throws InvalidInput unless kMinHashBits <= bits <= kMaxHashBits. */
void check_hash_bits(unsigned bits);

/**
 * 32-byte transaction identifier. Ordered lexicographically on the raw
 * bytes, byte 0 most significant.
 */
class Txid {
public:
    static constexpr std::size_t kSize = 32;

    Txid() = default;
    explicit Txid(const std::array<uint8_t, kSize>& bytes) : bytes_(bytes) {}

    /** Throws InvalidInput on anything but 64 hex characters. */
    static Txid from_hex(std::string_view hex);
    std::string to_hex() const;

    const std::array<uint8_t, kSize>& bytes() const { return bytes_; }
    std::span<const uint8_t, kSize> span() const { return bytes_; }

    friend auto operator<=>(const Txid&, const Txid&) = default;

private:
    std::array<uint8_t, kSize> bytes_{};
};

struct TxidHasher {
    std::size_t operator()(const Txid& id) const noexcept;
};

/** SHA-256 of the payload. Throws InvalidInput on an empty payload. */
Txid txid_of(std::span<const uint8_t> payload);

/** Opaque payload plus its derived identifier. */
class Transaction {
public:
    /** Throws InvalidInput when the payload is empty or over kMaxPayloadBytes. */
    explicit Transaction(std::vector<uint8_t> payload);

    const std::vector<uint8_t>& payload() const { return payload_; }
    const Txid& txid() const { return txid_; }

    friend bool operator==(const Transaction& a, const Transaction& b) { return a.txid_ == b.txid_; }

private:
    std::vector<uint8_t> payload_;
    Txid txid_;
};

using Salt = std::array<uint8_t, 4>;

/** k-bit short hash of a txid. */
class ShortHash {
public:
    /** Throws InvalidInput if bits is out of range or value does not fit. */
    ShortHash(unsigned bits, uint64_t value);

    unsigned bits() const { return bits_; }
    uint64_t value() const { return value_; }

    friend bool operator==(const ShortHash&, const ShortHash&) = default;

private:
    unsigned bits_;
    uint64_t value_;
};

enum class OrderingMode : uint8_t {
    AsProduced,
    SortedByTxid,
};

std::string_view to_string(OrderingMode mode);

using MerkleRoot32 = std::array<uint8_t, 4>;
using MerkleRoot256 = std::array<uint8_t, 32>;

struct BlockHeader {
    Salt salt{};
    unsigned hash_bits{32};
    OrderingMode ordering_mode{OrderingMode::AsProduced};
    MerkleRoot32 crc_merkle_root{};
    MerkleRoot256 sha_merkle_root{};
    uint32_t tx_count{0};

    friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

struct CompactBlock {
    BlockHeader header;
    std::vector<ShortHash> hashes;

    friend bool operator==(const CompactBlock&, const CompactBlock&) = default;
};

struct FullBlock {
    BlockHeader header;
    std::vector<Transaction> txs;

    std::vector<Txid> txids() const;
};

} // namespace txilm
