#include <txilm/adversary.hpp>
#include <txilm/errors.hpp>
#include <txilm/short_hash.hpp>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace txilm {

void AttackBudget::validate() const
{
    if (max_tries_per_target < 1)
        throw InvalidInput("attack budget needs at least one try");
}

std::optional<Transaction> craft_collision(const ShortHash& target, const std::optional<Salt>& salt,
                                           const AttackBudget& budget, uint64_t stream_index)
{
    budget.validate();
    const SaltedHashParams params(salt.value_or(Salt{}), target.bits());
    DeterministicStream stream(budget.rng_seed, stream_index);
    for (uint64_t attempt = 0; attempt < budget.max_tries_per_target; ++attempt) {
        const auto block = stream.next_block();
        std::vector<uint8_t> payload(block.begin(), block.end());
        if (shorthash(params, txid_of(payload)) == target)
            return Transaction(std::move(payload));
    }
    return std::nullopt;
}

std::vector<std::vector<Transaction>> craft_collisions(std::span<const uint64_t> targets, uint64_t per_target,
                                                       const Salt& salt, unsigned bits,
                                                       const AttackBudget& budget, uint64_t stream_index)
{
    budget.validate();
    check_hash_bits(bits);
    std::vector<std::vector<Transaction>> found(targets.size());
    if (per_target == 0 || targets.empty())
        return found;

    // Outstanding target indices per short-hash value, in request order.
    std::unordered_map<uint64_t, std::vector<std::size_t>> waiting;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (bits < 64 && (targets[i] >> bits) != 0)
            throw InvalidInput("target value does not fit in the hash width");
        waiting[targets[i]].push_back(i);
    }
    uint64_t outstanding = per_target * targets.size();
    const uint64_t max_tries = budget.max_tries_per_target * targets.size();

    const SaltedHashParams params(salt, bits);
    DeterministicStream stream(budget.rng_seed, stream_index);
    for (uint64_t attempt = 0; attempt < max_tries && outstanding > 0; ++attempt) {
        const auto block = stream.next_block();
        const Txid id = txid_of(block);
        auto it = waiting.find(shorthash(params, id).value());
        if (it == waiting.end())
            continue;
        auto& queue = it->second;
        const std::size_t target = queue.front();
        found[target].emplace_back(std::vector<uint8_t>(block.begin(), block.end()));
        --outstanding;
        if (found[target].size() == per_target) {
            queue.erase(queue.begin());
            if (queue.empty())
                waiting.erase(it);
        }
    }
    return found;
}

namespace {

FloodResult insert_colliders(const Mempool& pool, std::span<const std::size_t> labels,
                             std::vector<std::vector<Transaction>> colliders, uint64_t per_target)
{
    FloodResult result{pool, {}, true};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        uint64_t& count = result.crafted[labels[i]];
        for (auto& tx : colliders[i]) {
            if (result.pool.insert(std::move(tx)) == InsertResult::Inserted)
                ++count;
        }
        result.complete &= count >= per_target;
    }
    return result;
}

} // namespace

FloodResult flood(const Mempool& pool, const CompactBlock& compact, uint64_t colliders_per_target,
                  std::span<const std::size_t> targets, const AttackBudget& budget)
{
    std::vector<uint64_t> values;
    values.reserve(targets.size());
    for (std::size_t pos : targets) {
        if (pos >= compact.hashes.size())
            throw InvalidInput("flood target position outside the block");
        values.push_back(compact.hashes[pos].value());
    }
    auto colliders = craft_collisions(values, colliders_per_target, compact.header.salt,
                                      compact.header.hash_bits, budget);
    return insert_colliders(pool, targets, std::move(colliders), colliders_per_target);
}

FloodResult flood_unsalted(const Mempool& pool, std::span<const Txid> target_txids, unsigned bits,
                           uint64_t colliders_per_target, const AttackBudget& budget)
{
    std::vector<uint64_t> values;
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < target_txids.size(); ++i) {
        values.push_back(unsalted_shorthash(target_txids[i], bits).value());
        labels.push_back(i);
    }
    auto colliders = craft_collisions(values, colliders_per_target, Salt{}, bits, budget);
    return insert_colliders(pool, labels, std::move(colliders), colliders_per_target);
}

void DetectionPolicy::validate() const
{
    if (!(multiplier >= 1.0))
        throw InvalidInput("detection multiplier must be >= 1");
}

double expected_ambiguity(unsigned bits, uint64_t m, uint64_t n, OrderingMode mode)
{
    check_hash_bits(bits);
    if (n == 0)
        return 0.0;
    const double competitors = mode == OrderingMode::SortedByTxid
        ? 2.0 * static_cast<double>(m) / static_cast<double>(n)
        : static_cast<double>(m);
    const double per_position = -std::expm1(competitors * std::log1p(-std::ldexp(1.0, -static_cast<int>(bits))));
    return static_cast<double>(n) * per_position;
}

bool detect(const DecodeStats& stats, const DetectionPolicy& policy)
{
    policy.validate();
    const double threshold = std::max(static_cast<double>(policy.min_absolute),
                                      policy.multiplier * policy.expected_ambiguity);
    return policy.forks_observed && static_cast<double>(stats.ambiguous_positions) >= threshold;
}

std::string_view to_string(EncodingMode mode)
{
    return mode == EncodingMode::FullTxidList ? "full-txid-list" : "short-hash";
}

EncodingMode next_block_mode(std::span<const bool> history)
{
    return !history.empty() && history.back() ? EncodingMode::FullTxidList : EncodingMode::ShortHash;
}

} // namespace txilm
