#include <txilm/codec.hpp>
#include <txilm/errors.hpp>
#include <txilm/merkle.hpp>
#include <txilm/short_hash.hpp>

#include <algorithm>
#include <optional>
#include <unordered_set>

namespace txilm {

void DecodeLimits::validate() const
{
    if (max_combinations < 1 || max_candidates_per_position < 1)
        throw InvalidInput("decode limits must be >= 1");
}

std::string_view to_string(FallbackReason reason)
{
    switch (reason) {
    case FallbackReason::NoCombinationMatched: return "no-combination-matched";
    case FallbackReason::SearchBudgetExceeded: return "search-budget-exceeded";
    }
    return "unknown";
}

FullBlock build_block(std::vector<Transaction> txs, const Salt& salt, unsigned bits, OrderingMode mode)
{
    check_hash_bits(bits);
    if (txs.empty())
        throw InvalidInput("a block needs at least one transaction");
    if (txs.size() > UINT32_MAX)
        throw InvalidInput("too many transactions for one block");

    std::vector<Txid> sorted_ids;
    sorted_ids.reserve(txs.size());
    for (const auto& tx : txs)
        sorted_ids.push_back(tx.txid());
    std::sort(sorted_ids.begin(), sorted_ids.end());
    if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
        throw InvalidBlock("block contains duplicate txids");

    if (mode == OrderingMode::SortedByTxid) {
        std::sort(txs.begin(), txs.end(),
                  [](const Transaction& a, const Transaction& b) { return a.txid() < b.txid(); });
    }

    FullBlock block;
    block.txs = std::move(txs);
    const auto ids = block.txids();
    block.header.salt = salt;
    block.header.hash_bits = bits;
    block.header.ordering_mode = mode;
    block.header.crc_merkle_root = crc_merkle_root(ids);
    block.header.sha_merkle_root = sha_merkle_root(ids);
    block.header.tx_count = static_cast<uint32_t>(ids.size());
    return block;
}

CompactBlock encode(const FullBlock& block)
{
    CompactBlock compact;
    compact.header = block.header;
    const SaltedHashParams params(block.header.salt, block.header.hash_bits);
    compact.hashes.reserve(block.txs.size());
    for (const auto& tx : block.txs)
        compact.hashes.push_back(shorthash(params, tx.txid()));
    return compact;
}

CompactBlock encode(std::vector<Transaction> txs, const Salt& salt, unsigned bits, OrderingMode mode)
{
    return encode(build_block(std::move(txs), salt, bits, mode));
}

namespace detail {

void for_each_combination(const std::vector<std::vector<Txid>>& candidates, OrderingMode mode,
                          const std::function<Visit(std::span<const std::size_t>)>& visit)
{
    const std::size_t n = candidates.size();
    std::vector<std::size_t> choice(n, 0);
    if (n == 0) {
        visit(choice);
        return;
    }
    const bool sorted = mode == OrderingMode::SortedByTxid;
    std::vector<std::size_t> next(n, 0);
    // Strict increase already rules out reuse in sorted mode.
    std::unordered_set<Txid, TxidHasher> used;

    std::size_t pos = 0;
    while (true) {
        if (pos == n) {
            if (visit(choice) == Visit::Stop)
                return;
            --pos;
            if (!sorted)
                used.erase(candidates[pos][choice[pos]]);
            continue;
        }
        bool placed = false;
        const auto& list = candidates[pos];
        while (next[pos] < list.size()) {
            const std::size_t idx = next[pos]++;
            const Txid& c = list[idx];
            if (sorted) {
                if (pos > 0 && !(candidates[pos - 1][choice[pos - 1]] < c))
                    continue;
            } else if (!used.insert(c).second) {
                continue;
            }
            choice[pos] = idx;
            placed = true;
            break;
        }
        if (placed) {
            ++pos;
            if (pos < n)
                next[pos] = 0;
            continue;
        }
        if (pos == 0)
            return;
        --pos;
        if (!sorted)
            used.erase(candidates[pos][choice[pos]]);
    }
}

bool prune_sorted_ranges(std::vector<std::vector<Txid>>& candidates)
{
    std::optional<Txid> lower;
    for (auto& list : candidates) {
        if (lower)
            std::erase_if(list, [&](const Txid& id) { return !(*lower < id); });
        if (list.empty())
            return false;
        lower = list.front();
    }
    std::optional<Txid> upper;
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        if (upper)
            std::erase_if(*it, [&](const Txid& id) { return !(id < *upper); });
        if (it->empty())
            return false;
        upper = it->back();
    }
    return true;
}

} // namespace detail

namespace {

void check_well_formed(const CompactBlock& compact)
{
    const auto& header = compact.header;
    if (header.hash_bits < kMinHashBits || header.hash_bits > kMaxHashBits)
        throw MalformedBlock("header hash width out of range");
    if (header.tx_count == 0)
        throw MalformedBlock("block declares zero transactions");
    if (compact.hashes.size() != header.tx_count)
        throw MalformedBlock("hash list length differs from header tx_count");
    for (const auto& h : compact.hashes) {
        if (h.bits() != header.hash_bits)
            throw MalformedBlock("short hash width differs from header hash_bits");
    }
}

FullBlock assemble(const BlockHeader& header, std::span<const Txid> ids, const Mempool& pool)
{
    FullBlock block;
    block.header = header;
    block.txs.reserve(ids.size());
    for (const auto& id : ids)
        block.txs.push_back(*pool.find(id));
    return block;
}

} // namespace

DecodeOutcome decode(const CompactBlock& compact, const Mempool& pool, const DecodeLimits& limits)
{
    check_well_formed(compact);
    limits.validate();

    const auto& header = compact.header;
    const std::size_t n = compact.hashes.size();
    DecodeOutcome outcome{FallbackRequired{FallbackReason::NoCombinationMatched}, {}};
    auto& stats = outcome.stats;

    std::vector<std::vector<Txid>> candidates(n);
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < n; ++i) {
        candidates[i] = pool.candidates_for(header.salt, header.hash_bits, compact.hashes[i]);
        if (candidates[i].empty())
            missing.push_back(i);
    }
    auto count_ambiguous = [&] {
        stats.ambiguous_positions = static_cast<uint64_t>(
            std::count_if(candidates.begin(), candidates.end(), [](const auto& c) { return c.size() > 1; }));
    };

    if (!missing.empty()) {
        count_ambiguous();
        MissingTx result;
        result.positions = std::move(missing);
        for (std::size_t i = 0; i < n; ++i) {
            if (!candidates[i].empty())
                result.candidates.emplace(i, std::move(candidates[i]));
        }
        outcome.result = std::move(result);
        return outcome;
    }

    if (header.ordering_mode == OrderingMode::SortedByTxid && !detail::prune_sorted_ranges(candidates)) {
        count_ambiguous();
        return outcome;
    }
    count_ambiguous();

    for (const auto& list : candidates) {
        if (list.size() > limits.max_candidates_per_position) {
            outcome.result = FallbackRequired{FallbackReason::SearchBudgetExceeded};
            return outcome;
        }
    }

    std::vector<std::vector<uint32_t>> leaf_crcs(n);
    for (std::size_t i = 0; i < n; ++i) {
        leaf_crcs[i].reserve(candidates[i].size());
        for (const auto& id : candidates[i])
            leaf_crcs[i].push_back(crc_leaf(id));
    }
    const uint32_t crc_target = from_root32(header.crc_merkle_root);

    bool budget_exceeded = false;
    std::vector<Txid> winner;
    std::vector<uint32_t> leaves(n);
    std::vector<Txid> ids(n);

    detail::for_each_combination(candidates, header.ordering_mode, [&](std::span<const std::size_t> choice) {
        if (stats.combinations_examined == limits.max_combinations) {
            budget_exceeded = true;
            return detail::Visit::Stop;
        }
        ++stats.combinations_examined;
        ++stats.crc_prechecks;
        for (std::size_t i = 0; i < n; ++i)
            leaves[i] = leaf_crcs[i][choice[i]];
        if (crc_merkle_root_from_leaves(leaves) != crc_target)
            return detail::Visit::Continue;
        ++stats.crc_passes;
        ++stats.sha_recomputations;
        for (std::size_t i = 0; i < n; ++i)
            ids[i] = candidates[i][choice[i]];
        if (sha_merkle_root(ids) != header.sha_merkle_root)
            return detail::Visit::Continue;
        winner = ids;
        return detail::Visit::Stop;
    });

    if (!winner.empty()) {
        outcome.result = Resolved{assemble(header, winner, pool)};
    } else if (budget_exceeded) {
        outcome.result = FallbackRequired{FallbackReason::SearchBudgetExceeded};
    }
    return outcome;
}

SupplyResult supply_missing(const CompactBlock& compact, const Mempool& pool,
                            std::span<const Transaction> supplied, const DecodeLimits& limits)
{
    check_well_formed(compact);
    const auto& header = compact.header;

    std::unordered_set<uint64_t> missing_values;
    for (const auto& h : compact.hashes) {
        if (pool.candidates_for(header.salt, header.hash_bits, h).empty())
            missing_values.insert(h.value());
    }

    SupplyResult out{decode(compact, pool, limits), {}};
    if (supplied.empty()) {
        ++out.outcome.stats.missing_roundtrips;
        return out;
    }

    Mempool scratch(pool);
    const SaltedHashParams params(header.salt, header.hash_bits);
    for (const auto& tx : supplied) {
        if (!missing_values.count(shorthash(params, tx.txid()).value()))
            out.extraneous.push_back(tx.txid());
        scratch.insert(tx);
    }
    out.outcome = decode(compact, scratch, limits);
    ++out.outcome.stats.missing_roundtrips;
    return out;
}

DecodeOutcome fallback_decode(const BlockHeader& header, std::span<const Txid> txids, const Mempool& pool)
{
    if (txids.empty())
        throw InvalidInput("fallback txid list is empty");

    DecodeOutcome outcome{FallbackRequired{FallbackReason::NoCombinationMatched}, {}};
    MissingTx missing;
    for (std::size_t i = 0; i < txids.size(); ++i) {
        if (pool.contains(txids[i]))
            missing.candidates.emplace(i, std::vector<Txid>{txids[i]});
        else
            missing.positions.push_back(i);
    }
    if (!missing.positions.empty()) {
        outcome.result = std::move(missing);
        return outcome;
    }

    outcome.stats.combinations_examined = 1;
    outcome.stats.sha_recomputations = 1;
    if (txids.size() == header.tx_count && sha_merkle_root(txids) == header.sha_merkle_root)
        outcome.result = Resolved{assemble(header, txids, pool)};
    return outcome;
}

} // namespace txilm
