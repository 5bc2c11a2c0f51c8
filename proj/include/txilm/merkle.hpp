#pragma once

#include <txilm/core_types.hpp>

#include <span>
#include <vector>

namespace txilm {

/**
 * Merkle root over raw txid leaves, internal node = SHA-256(left||right).
 * An odd level duplicates its last node; a single leaf is its own root.
 * Throws InvalidInput on an empty list.
 */
MerkleRoot256 sha_merkle_root(std::span<const Txid> txids);

/**
 * Lightweight pre-check root with the same tree shape as sha_merkle_root.
 * Leaf = CRC-32 of the txid; internal node = CRC-32 of the 8-byte message
 * left||right with each child serialized big-endian.
 * Throws InvalidInput on an empty list.
 */
MerkleRoot32 crc_merkle_root(std::span<const Txid> txids);

uint32_t crc_leaf(const Txid& txid);

/** crc_merkle_root from precomputed leaf CRCs, returned as an integer. */
uint32_t crc_merkle_root_from_leaves(std::vector<uint32_t> level);

MerkleRoot32 to_root32(uint32_t value);
uint32_t from_root32(const MerkleRoot32& root);

} // namespace txilm
