#include <txilm/wire.hpp>
#include <txilm/errors.hpp>

#include <algorithm>
#include <cstring>

namespace txilm {
namespace {

constexpr uint8_t kCompactMagic[4] = {'T', 'X', 'L', 'M'};
constexpr uint8_t kTxidMagic[4] = {'T', 'X', 'I', 'D'};
constexpr uint8_t kSortedFlag = 0x01;

void put_u32le(std::vector<uint8_t>& out, uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint32_t get_u32le(const uint8_t* p)
{
    return uint32_t{p[0]} | (uint32_t{p[1]} << 8) | (uint32_t{p[2]} << 16) | (uint32_t{p[3]} << 24);
}

class BitWriter {
public:
    explicit BitWriter(std::vector<uint8_t>& out) : out_(out) {}

    void write(uint64_t value, unsigned bits)
    {
        for (unsigned i = bits; i-- > 0;) {
            if (fill_ == 0)
                out_.push_back(0);
            if ((value >> i) & 1)
                out_.back() |= static_cast<uint8_t>(0x80 >> fill_);
            fill_ = (fill_ + 1) & 7;
        }
    }

private:
    std::vector<uint8_t>& out_;
    unsigned fill_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const uint8_t> in) : in_(in) {}

    uint64_t read(unsigned bits)
    {
        uint64_t v = 0;
        for (unsigned i = 0; i < bits; ++i, ++pos_)
            v = (v << 1) | ((in_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1);
        return v;
    }

    bool rest_is_zero() const
    {
        for (std::size_t p = pos_; p < in_.size() * 8; ++p) {
            if ((in_[p >> 3] >> (7 - (p & 7))) & 1)
                return false;
        }
        return true;
    }

private:
    std::span<const uint8_t> in_;
    std::size_t pos_ = 0;
};

} // namespace

std::size_t packed_hash_bytes(std::size_t count, unsigned bits)
{
    return (count * bits + 7) / 8;
}

std::size_t compact_wire_size(const CompactBlock& compact)
{
    return kCompactHeaderBytes + packed_hash_bytes(compact.hashes.size(), compact.header.hash_bits);
}

std::size_t txid_list_wire_size(std::size_t count)
{
    return kTxidListHeaderBytes + count * Txid::kSize;
}

std::vector<uint8_t> serialize_compact(const CompactBlock& compact)
{
    const auto& h = compact.header;
    if (compact.hashes.size() != h.tx_count)
        throw MalformedBlock("hash list length differs from header tx_count");
    std::vector<uint8_t> out(std::begin(kCompactMagic), std::end(kCompactMagic));
    out.reserve(compact_wire_size(compact));
    out.push_back(kWireVersion);
    out.push_back(h.ordering_mode == OrderingMode::SortedByTxid ? kSortedFlag : 0);
    out.push_back(static_cast<uint8_t>(h.hash_bits));
    out.insert(out.end(), h.salt.begin(), h.salt.end());
    put_u32le(out, h.tx_count);
    out.insert(out.end(), h.crc_merkle_root.begin(), h.crc_merkle_root.end());
    out.insert(out.end(), h.sha_merkle_root.begin(), h.sha_merkle_root.end());
    BitWriter writer(out);
    for (const auto& hash : compact.hashes) {
        if (hash.bits() != h.hash_bits)
            throw MalformedBlock("short hash width differs from header hash_bits");
        writer.write(hash.value(), hash.bits());
    }
    return out;
}

CompactBlock parse_compact(std::span<const uint8_t> wire)
{
    if (wire.size() < kCompactHeaderBytes)
        throw MalformedBlock("compact block shorter than its header");
    if (!std::equal(std::begin(kCompactMagic), std::end(kCompactMagic), wire.begin()))
        throw MalformedBlock("bad compact block magic");
    if (wire[4] != kWireVersion)
        throw MalformedBlock("unsupported compact block version");
    if (wire[5] & ~kSortedFlag)
        throw MalformedBlock("unknown compact block flags");

    CompactBlock compact;
    auto& h = compact.header;
    h.ordering_mode = (wire[5] & kSortedFlag) ? OrderingMode::SortedByTxid : OrderingMode::AsProduced;
    h.hash_bits = wire[6];
    if (h.hash_bits < kMinHashBits || h.hash_bits > kMaxHashBits)
        throw MalformedBlock("hash width out of range");
    std::copy_n(wire.begin() + 7, 4, h.salt.begin());
    h.tx_count = get_u32le(wire.data() + 11);
    std::copy_n(wire.begin() + 15, 4, h.crc_merkle_root.begin());
    std::copy_n(wire.begin() + 19, 32, h.sha_merkle_root.begin());
    if (h.tx_count == 0)
        throw MalformedBlock("block declares zero transactions");

    const auto body = wire.subspan(kCompactHeaderBytes);
    if (body.size() != packed_hash_bytes(h.tx_count, h.hash_bits))
        throw MalformedBlock("packed hash section has the wrong length");
    BitReader reader(body);
    compact.hashes.reserve(h.tx_count);
    for (uint32_t i = 0; i < h.tx_count; ++i)
        compact.hashes.emplace_back(h.hash_bits, reader.read(h.hash_bits));
    if (!reader.rest_is_zero())
        throw MalformedBlock("nonzero padding after packed hashes");
    return compact;
}

std::vector<uint8_t> serialize_txid_list(std::span<const Txid> txids)
{
    if (txids.size() > UINT32_MAX)
        throw InvalidInput("too many txids");
    std::vector<uint8_t> out(std::begin(kTxidMagic), std::end(kTxidMagic));
    out.reserve(txid_list_wire_size(txids.size()));
    out.push_back(kWireVersion);
    put_u32le(out, static_cast<uint32_t>(txids.size()));
    for (const auto& id : txids)
        out.insert(out.end(), id.bytes().begin(), id.bytes().end());
    return out;
}

std::vector<Txid> parse_txid_list(std::span<const uint8_t> wire)
{
    if (wire.size() < kTxidListHeaderBytes)
        throw MalformedBlock("txid list shorter than its header");
    if (!std::equal(std::begin(kTxidMagic), std::end(kTxidMagic), wire.begin()))
        throw MalformedBlock("bad txid list magic");
    if (wire[4] != kWireVersion)
        throw MalformedBlock("unsupported txid list version");
    const uint32_t count = get_u32le(wire.data() + 5);
    if (wire.size() != txid_list_wire_size(count))
        throw MalformedBlock("txid list has the wrong length");
    std::vector<Txid> out;
    out.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        std::array<uint8_t, Txid::kSize> bytes{};
        std::memcpy(bytes.data(), wire.data() + kTxidListHeaderBytes + i * Txid::kSize, Txid::kSize);
        out.emplace_back(bytes);
    }
    return out;
}

} // namespace txilm
