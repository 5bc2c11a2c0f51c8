#include <txilm/merkle.hpp>
#include <txilm/crc.hpp>
#include <txilm/errors.hpp>
#include <txilm/sha256.hpp>

namespace txilm {

MerkleRoot256 sha_merkle_root(std::span<const Txid> txids)
{
    if (txids.empty())
        throw InvalidInput("merkle root of an empty list");
    std::vector<Sha256Digest> level;
    level.reserve(txids.size() + 1);
    for (const auto& id : txids)
        level.push_back(id.bytes());
    while (level.size() > 1) {
        if (level.size() & 1)
            level.push_back(level.back());
        for (std::size_t i = 0; i < level.size() / 2; ++i)
            level[i] = sha256(level[2 * i], level[2 * i + 1]);
        level.resize(level.size() / 2);
    }
    return level[0];
}

MerkleRoot32 to_root32(uint32_t value)
{
    return {static_cast<uint8_t>(value >> 24), static_cast<uint8_t>(value >> 16),
            static_cast<uint8_t>(value >> 8), static_cast<uint8_t>(value)};
}

uint32_t from_root32(const MerkleRoot32& root)
{
    return (uint32_t{root[0]} << 24) | (uint32_t{root[1]} << 16) | (uint32_t{root[2]} << 8) | root[3];
}

uint32_t crc_leaf(const Txid& txid)
{
    return crc32_iso_hdlc(txid.span());
}

uint32_t crc_merkle_root_from_leaves(std::vector<uint32_t> level)
{
    if (level.empty())
        throw InvalidInput("merkle root of an empty list");
    while (level.size() > 1) {
        if (level.size() & 1)
            level.push_back(level.back());
        for (std::size_t i = 0; i < level.size() / 2; ++i) {
            const auto l = to_root32(level[2 * i]);
            const auto r = to_root32(level[2 * i + 1]);
            const uint8_t msg[8] = {l[0], l[1], l[2], l[3], r[0], r[1], r[2], r[3]};
            level[i] = crc32_iso_hdlc(msg);
        }
        level.resize(level.size() / 2);
    }
    return level[0];
}

MerkleRoot32 crc_merkle_root(std::span<const Txid> txids)
{
    std::vector<uint32_t> leaves;
    leaves.reserve(txids.size() + 1);
    for (const auto& id : txids)
        leaves.push_back(crc_leaf(id));
    return to_root32(crc_merkle_root_from_leaves(std::move(leaves)));
}

} // namespace txilm
