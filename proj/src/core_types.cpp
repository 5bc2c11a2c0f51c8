#include <txilm/core_types.hpp>
#include <txilm/errors.hpp>
#include <txilm/hex.hpp>

#include <algorithm>
#include <cstring>

namespace txilm {

std::string to_hex(std::span<const uint8_t> bytes)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

namespace {

int hex_value(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

std::vector<uint8_t> from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        throw InvalidInput("hex string has odd length");
    std::vector<uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw InvalidInput("invalid hex character");
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

void check_hash_bits(unsigned bits)
{
    if (bits < kMinHashBits || bits > kMaxHashBits)
        throw InvalidInput("hash bits must be in 1..=64, got " + std::to_string(bits));
}

Txid Txid::from_hex(std::string_view hex)
{
    if (hex.size() != 2 * kSize)
        throw InvalidInput("txid must be 64 hex characters");
    const auto raw = txilm::from_hex(hex);
    std::array<uint8_t, kSize> bytes{};
    std::copy(raw.begin(), raw.end(), bytes.begin());
    return Txid(bytes);
}

std::string Txid::to_hex() const
{
    return txilm::to_hex(bytes_);
}

std::size_t TxidHasher::operator()(const Txid& id) const noexcept
{
    // Txids are SHA-256 output; any 8 bytes are already uniform.
    std::size_t h;
    std::memcpy(&h, id.bytes().data(), sizeof(h));
    return h;
}

Txid txid_of(std::span<const uint8_t> payload)
{
    if (payload.empty())
        throw InvalidInput("transaction payload must be non-empty");
    return Txid(sha256(payload));
}

Transaction::Transaction(std::vector<uint8_t> payload) : payload_(std::move(payload))
{
    if (payload_.size() > kMaxPayloadBytes)
        throw InvalidInput("transaction payload exceeds 100000 bytes");
    txid_ = txid_of(payload_);
}

ShortHash::ShortHash(unsigned bits, uint64_t value) : bits_(bits), value_(value)
{
    check_hash_bits(bits);
    if (bits < 64 && (value >> bits) != 0)
        throw InvalidInput("short hash value does not fit in its bit width");
}

std::string_view to_string(OrderingMode mode)
{
    switch (mode) {
    case OrderingMode::AsProduced: return "as-produced";
    case OrderingMode::SortedByTxid: return "sorted";
    }
    return "unknown";
}

std::vector<Txid> FullBlock::txids() const
{
    std::vector<Txid> out;
    out.reserve(txs.size());
    for (const auto& tx : txs)
        out.push_back(tx.txid());
    return out;
}

} // namespace txilm
