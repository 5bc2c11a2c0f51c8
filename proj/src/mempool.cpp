#include <txilm/mempool.hpp>
#include <txilm/errors.hpp>
#include <txilm/short_hash.hpp>

#include <algorithm>

namespace txilm {

Mempool::Mempool(const Mempool& other) : entries_(other.entries_) {}

Mempool& Mempool::operator=(const Mempool& other)
{
    if (this != &other) {
        entries_ = other.entries_;
        std::lock_guard lock(index_mutex_);
        index_.reset();
    }
    return *this;
}

Mempool::Mempool(Mempool&& other) noexcept : entries_(std::move(other.entries_)) {}

Mempool& Mempool::operator=(Mempool&& other) noexcept
{
    if (this != &other) {
        entries_ = std::move(other.entries_);
        std::lock_guard lock(index_mutex_);
        index_.reset();
    }
    return *this;
}

InsertResult Mempool::insert(Transaction tx)
{
    const Txid id = tx.txid();
    auto [it, inserted] = entries_.try_emplace(id, std::move(tx));
    if (!inserted)
        return InsertResult::AlreadyPresent;
    std::lock_guard lock(index_mutex_);
    index_.reset();
    return InsertResult::Inserted;
}

const Transaction* Mempool::find(const Txid& id) const
{
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<Txid> Mempool::txids() const
{
    std::vector<Txid> out;
    out.reserve(entries_.size());
    for (const auto& [id, tx] : entries_)
        out.push_back(id);
    return out;
}

std::shared_ptr<const Mempool::ShortHashIndex> Mempool::index_for(const Salt& salt, unsigned bits) const
{
    std::lock_guard lock(index_mutex_);
    if (index_ && index_->salt == salt && index_->bits == bits)
        return index_;

    auto index = std::make_shared<ShortHashIndex>();
    index->salt = salt;
    index->bits = bits;
    index->entries.reserve(entries_.size());
    for (const auto& [id, tx] : entries_)
        index->entries.emplace_back(truncate_bits(salted_digest64(salt, id), bits), id);
    std::sort(index->entries.begin(), index->entries.end());
    index_ = index;
    return index_;
}

std::vector<Txid> Mempool::candidates_for(const Salt& salt, unsigned bits, const ShortHash& h) const
{
    if (h.bits() != bits)
        throw InvalidInput("short hash width does not match lookup width");
    const auto index = index_for(salt, bits);
    auto lo = std::lower_bound(index->entries.begin(), index->entries.end(), h.value(),
                               [](const auto& e, uint64_t v) { return e.first < v; });
    std::vector<Txid> out;
    for (auto it = lo; it != index->entries.end() && it->first == h.value(); ++it)
        out.push_back(it->second);
    return out;
}

std::vector<Txid> Mempool::candidates_in_range(const Salt& salt, unsigned bits, const ShortHash& h,
                                               const std::optional<Txid>& lower,
                                               const std::optional<Txid>& upper) const
{
    if (lower && upper && !(*lower < *upper))
        throw InvalidRange("candidate range requires lower < upper");
    auto all = candidates_for(salt, bits, h);
    std::erase_if(all, [&](const Txid& id) {
        return (lower && !(*lower < id)) || (upper && !(id < *upper));
    });
    return all;
}

} // namespace txilm
