#pragma once

#include <txilm/core_types.hpp>
#include <txilm/mempool.hpp>
#include <txilm/random_stream.hpp>
#include <txilm/short_hash.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace txilm::test {

inline Seed seed_of(std::string_view label)
{
    return derive_seed(Seed{}, label);
}

/** `count` random payloads of `size` bytes. */
inline std::vector<Transaction> random_txs(std::string_view label, std::size_t count, std::size_t size = 48)
{
    DeterministicStream stream(seed_of(label), 0);
    std::vector<Transaction> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.emplace_back(stream.bytes(size));
    return out;
}

inline std::vector<Txid> ids_of(const std::vector<Transaction>& txs)
{
    std::vector<Txid> out;
    for (const auto& tx : txs)
        out.push_back(tx.txid());
    return out;
}

inline Mempool pool_of(const std::vector<Transaction>& txs)
{
    Mempool pool;
    for (const auto& tx : txs)
        pool.insert(tx);
    return pool;
}

/** Linear-scan reference for Mempool::candidates_for. */
inline std::vector<Txid> scan_candidates(const Mempool& pool, const Salt& salt, unsigned bits, uint64_t value)
{
    std::vector<Txid> out;
    for (const auto& [id, tx] : pool) {
        if (truncate_bits(salted_digest64(salt, id), bits) == value)
            out.push_back(id);
    }
    return out;
}

} // namespace txilm::test
