#include <txilm/collision_model.hpp>
#include <txilm/core_types.hpp>
#include <txilm/errors.hpp>
#include <txilm/short_hash.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <thread>

namespace txilm {

void CollisionParams::validate() const
{
    if (k < 1 || k > 64)
        throw InvalidInput("collision model needs 1 <= k <= 64");
}

namespace {

double p_none_complement(unsigned k, double exponent)
{
    if (exponent <= 0)
        return 0.0;
    const double per_pair = std::ldexp(1.0, -static_cast<int>(k));
    return -std::expm1(exponent * std::log1p(-per_pair));
}

} // namespace

double p_sc_unsorted(const CollisionParams& params)
{
    params.validate();
    const double m = static_cast<double>(params.m);
    const double n = static_cast<double>(params.n);
    return p_none_complement(params.k, m * n + n * n / 2.0);
}

double p_sc_sorted(const CollisionParams& params)
{
    params.validate();
    return p_none_complement(params.k, static_cast<double>(params.m));
}

namespace {

uint64_t reverse_bits(uint64_t v)
{
    v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
    v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
    return (v >> 32) | (v << 32);
}

unsigned common_low_bits(uint64_t a, uint64_t b)
{
    return a == b ? 64u : static_cast<unsigned>(std::countr_zero(a ^ b));
}

uint64_t leading_key(const Txid& id)
{
    uint64_t key = 0;
    for (int i = 0; i < 8; ++i)
        key = (key << 8) | id.bytes()[i];
    return key;
}

struct Draw {
    std::vector<Txid> ids;
    std::vector<uint64_t> order; // indices sorted by txid
};

void sort_order(Draw& draw)
{
    std::vector<std::pair<uint64_t, uint32_t>> keyed(draw.ids.size());
    for (std::size_t i = 0; i < draw.ids.size(); ++i)
        keyed[i] = {leading_key(draw.ids[i]), static_cast<uint32_t>(i)};
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return draw.ids[a.second] < draw.ids[b.second];
    });
    draw.order.resize(keyed.size());
    for (std::size_t i = 0; i < keyed.size(); ++i)
        draw.order[i] = keyed[i].second;
}

Draw draw_txids(const Seed& seed, uint64_t trial_index, uint64_t count)
{
    Draw draw;
    draw.ids.reserve(count);
    DeterministicStream stream(seed, trial_index);
    for (uint64_t i = 0; i < count; ++i)
        draw.ids.emplace_back(stream.next_block());
    sort_order(draw);

    bool repeated = false;
    for (std::size_t i = 1; i < draw.order.size(); ++i)
        repeated |= draw.ids[draw.order[i - 1]] == draw.ids[draw.order[i]];
    if (!repeated)
        return draw;

    // Replay the stream, skipping repeats of earlier draws.
    draw.ids.clear();
    std::set<Txid> seen;
    DeterministicStream replay(seed, trial_index);
    while (draw.ids.size() < count) {
        Txid id(replay.next_block());
        if (seen.insert(id).second)
            draw.ids.push_back(id);
    }
    sort_order(draw);
    return draw;
}

} // namespace

TrialResult run_trial(const Seed& seed, uint64_t trial_index, uint64_t m, uint64_t n)
{
    TrialResult result;
    if (n == 0)
        return result;

    const Draw draw = draw_txids(seed, trial_index, m + n);
    const std::size_t total = draw.ids.size();
    std::vector<uint64_t> digest(total);
    for (std::size_t i = 0; i < total; ++i)
        digest[i] = salted_digest64(Salt{}, draw.ids[i]);
    auto is_block = [m](std::size_t idx) { return idx >= m; };

    // Unsorted: in bit-reversed order the longest common low-bit run of any
    // element is attained at one of its neighbors.
    std::vector<std::pair<uint64_t, bool>> reversed(total);
    for (std::size_t i = 0; i < total; ++i)
        reversed[i] = {reverse_bits(digest[i]), is_block(i)};
    std::sort(reversed.begin(), reversed.end());
    for (std::size_t p = 0; p < total; ++p) {
        if (!reversed[p].second)
            continue;
        auto shared = [&](std::size_t q) {
            const uint64_t x = reversed[p].first ^ reversed[q].first;
            return x == 0 ? 64u : static_cast<unsigned>(std::countl_zero(x));
        };
        if (p > 0)
            result.unsorted_bits = std::max(result.unsorted_bits, shared(p - 1));
        if (p + 1 < total)
            result.unsorted_bits = std::max(result.unsorted_bits, shared(p + 1));
    }

    // Sorted: compare each block txid against everything strictly between its
    // previous and next block neighbors in txid order.
    std::vector<std::size_t> block_positions;
    block_positions.reserve(n);
    for (std::size_t p = 0; p < total; ++p) {
        if (is_block(draw.order[p]))
            block_positions.push_back(p);
    }
    for (std::size_t j = 0; j < block_positions.size(); ++j) {
        const std::size_t self = block_positions[j];
        const std::size_t lo = j == 0 ? 0 : block_positions[j - 1] + 1;
        const std::size_t hi = j + 1 == block_positions.size() ? total : block_positions[j + 1];
        const uint64_t mine = digest[draw.order[self]];
        for (std::size_t q = lo; q < hi; ++q) {
            if (q != self)
                result.sorted_bits = std::max(result.sorted_bits, common_low_bits(mine, digest[draw.order[q]]));
        }
    }
    return result;
}

uint64_t TrialHistogram::collisions_at(unsigned k, bool sorted_mode) const
{
    const auto& hist = sorted_mode ? sorted : unsorted;
    uint64_t total = 0;
    for (unsigned b = k; b <= 64; ++b)
        total += hist[b];
    return total;
}

TrialHistogram run_trials(const Seed& seed, uint64_t m, uint64_t n, uint64_t trials, unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(trials, 1)));

    std::vector<TrialHistogram> partial(threads);
    auto work = [&](unsigned t) {
        auto& h = partial[t];
        for (uint64_t i = t; i < trials; i += threads) {
            const auto r = run_trial(seed, i, m, n);
            ++h.unsorted[r.unsorted_bits];
            ++h.sorted[r.sorted_bits];
            ++h.trials;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
    }

    TrialHistogram total;
    for (const auto& h : partial) {
        for (std::size_t b = 0; b < total.unsorted.size(); ++b) {
            total.unsorted[b] += h.unsorted[b];
            total.sorted[b] += h.sorted[b];
        }
        total.trials += h.trials;
    }
    return total;
}

namespace {

SweepRow make_row(const TrialHistogram& hist, unsigned k, uint64_t m, uint64_t n, bool sorted)
{
    const CollisionParams params{k, m, n};
    SweepRow row;
    row.k = k;
    row.n = n;
    row.p_analytic = sorted ? p_sc_sorted(params) : p_sc_unsorted(params);
    row.trials = hist.trials;
    row.collisions = hist.collisions_at(k, sorted);
    row.p_empirical = static_cast<double>(row.collisions) / static_cast<double>(row.trials);
    return row;
}

} // namespace

SweepRow simulate(const SimConfig& config)
{
    config.params.validate();
    if (config.trials < 1)
        throw InvalidInput("simulation needs at least one trial");
    const auto& p = config.params;
    const auto hist = run_trials(config.seed, p.m, p.n, config.trials, config.threads);
    return make_row(hist, p.k, p.m, p.n, config.sorted);
}

void SweepConfig::validate() const
{
    if (k_min < 1 || k_max > 64 || k_min > k_max)
        throw InvalidInput("k range must satisfy 1 <= k_min <= k_max <= 64");
    if (n_list.empty())
        throw InvalidInput("n list must be non-empty");
    if (trials < 1)
        throw InvalidInput("sweep needs at least one trial per cell");
}

std::vector<SweepRow> sweep(const SweepConfig& config)
{
    config.validate();
    std::vector<SweepRow> rows;
    for (uint64_t n : config.n_list) {
        const auto hist = run_trials(config.seed, config.m, n, config.trials, config.threads);
        for (unsigned k = config.k_min; k <= config.k_max; ++k)
            rows.push_back(make_row(hist, k, config.m, n, config.sorted));
    }
    return rows;
}

std::string sweep_tsv(std::span<const SweepRow> rows)
{
    std::string out = "k\tp_analytic\tp_empirical\n";
    char line[96];
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%u\t%.6e\t%.6e\n", row.k, row.p_analytic, row.p_empirical);
        out += line;
    }
    return out;
}

std::string sweep_file_name(uint64_t n, bool sorted)
{
    return (sorted ? "sorted_n=" : "n=") + std::to_string(n) + ".dat";
}

} // namespace txilm
