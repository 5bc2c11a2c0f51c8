#pragma once

#include <txilm/core_types.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace txilm {

enum class InsertResult {
    Inserted,
    AlreadyPresent,
};

/**
 * Unconfirmed transactions keyed by txid, iterated in increasing txid order.
 *
 * Thread safety: any number of concurrent readers, or a single writer. The
 * short-hash index is built lazily on the first lookup for a (salt, bits)
 * pair and replaced when a lookup arrives with a different pair; its
 * construction is serialized internally so concurrent readers are safe.
 */
class Mempool {
public:
    using Map = std::map<Txid, Transaction>;

    Mempool() = default;
    Mempool(const Mempool& other);
    Mempool& operator=(const Mempool& other);
    Mempool(Mempool&& other) noexcept;
    Mempool& operator=(Mempool&& other) noexcept;

    InsertResult insert(Transaction tx);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool contains(const Txid& id) const { return entries_.count(id) != 0; }
    const Transaction* find(const Txid& id) const;

    Map::const_iterator begin() const { return entries_.begin(); }
    Map::const_iterator end() const { return entries_.end(); }

    std::vector<Txid> txids() const;

    /** Every txid whose salted short hash equals h, in increasing order. */
    std::vector<Txid> candidates_for(const Salt& salt, unsigned bits, const ShortHash& h) const;

    /**
     * candidates_for restricted to txids strictly inside (lower, upper); an
     * absent bound leaves that side open. Throws InvalidRange if
     * lower >= upper.
     */
    std::vector<Txid> candidates_in_range(const Salt& salt, unsigned bits, const ShortHash& h,
                                          const std::optional<Txid>& lower,
                                          const std::optional<Txid>& upper) const;

private:
    struct ShortHashIndex {
        Salt salt;
        unsigned bits;
        // Sorted by (short hash, txid).
        std::vector<std::pair<uint64_t, Txid>> entries;
    };

    std::shared_ptr<const ShortHashIndex> index_for(const Salt& salt, unsigned bits) const;

    Map entries_;
    mutable std::mutex index_mutex_;
    mutable std::shared_ptr<const ShortHashIndex> index_;
};

} // namespace txilm
