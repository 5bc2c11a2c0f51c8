#include <txilm/scenario.hpp>
#include <txilm/exchange.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

namespace txilm {
namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

uint64_t parse_u64(std::string_view key, std::string_view value)
{
    uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw InvalidInput("scenario key '" + std::string(key) + "' needs an unsigned integer");
    return out;
}

double parse_double(std::string_view key, std::string_view value)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(std::string(value), &used);
        if (used == value.size())
            return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput("scenario key '" + std::string(key) + "' needs a number");
}

bool parse_bool(std::string_view key, std::string_view value)
{
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw InvalidInput("scenario key '" + std::string(key) + "' needs true or false");
}

} // namespace

AttackScenario parse_scenario(std::string_view text)
{
    std::map<std::string, std::string, std::less<>> values;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw InvalidInput("scenario line without '=': " + std::string(line));
        const auto key = trim(line.substr(0, eq));
        if (!values.emplace(std::string(key), std::string(trim(line.substr(eq + 1)))).second)
            throw InvalidInput("duplicate scenario key '" + std::string(key) + "'");
    }

    for (const char* required : {"k", "salt_mode", "targets", "colliders_per_target", "budget", "seed"}) {
        if (!values.count(required))
            throw InvalidInput(std::string("scenario is missing key '") + required + "'");
    }

    AttackScenario s;
    for (const auto& [key, value] : values) {
        if (key == "k") {
            s.k = static_cast<unsigned>(parse_u64(key, value));
            check_hash_bits(s.k);
        } else if (key == "salt_mode") {
            if (value == "known")
                s.salt_mode = SaltKnowledge::Known;
            else if (value == "unknown")
                s.salt_mode = SaltKnowledge::Unknown;
            else
                throw InvalidInput("salt_mode must be known or unknown");
        } else if (key == "targets") {
            s.targets = parse_u64(key, value);
        } else if (key == "colliders_per_target") {
            s.colliders_per_target = parse_u64(key, value);
        } else if (key == "budget") {
            s.budget = parse_u64(key, value);
            if (s.budget < 1)
                throw InvalidInput("budget must be >= 1");
        } else if (key == "seed") {
            s.seed = seed_from_hex(value);
        } else if (key == "n") {
            s.n = parse_u64(key, value);
        } else if (key == "extra_pool") {
            s.extra_pool = parse_u64(key, value);
        } else if (key == "forks_observed") {
            s.forks_observed = parse_bool(key, value);
        } else if (key == "multiplier") {
            s.multiplier = parse_double(key, value);
        } else if (key == "min_absolute") {
            s.min_absolute = parse_u64(key, value);
        } else {
            throw InvalidInput("unknown scenario key '" + key + "'");
        }
    }
    if (s.n < 1)
        throw InvalidInput("scenario block needs n >= 1");
    if (s.targets > s.n)
        throw InvalidInput("more targets than block positions");
    return s;
}

AttackReport run_attack(const AttackScenario& s)
{
    if (s.salt_mode == SaltKnowledge::Known && s.k > 32)
        throw ScenarioRefused("crafting known-salt collisions above 32 bits is infeasible at desk scale");
    check_hash_bits(s.k);

    const auto block_txs = synthetic_transactions(s.seed, "attack/block", s.n, 64);
    const auto extra = synthetic_transactions(s.seed, "attack/extra", s.extra_pool, 64);
    DeterministicStream stream(derive_seed(s.seed, "attack/choices"), 0);
    Salt salt;
    stream.fill(salt);

    const FullBlock block = build_block(block_txs, salt, s.k, OrderingMode::AsProduced);
    const CompactBlock compact = encode(block);
    const auto true_ids = block.txids();

    Mempool pool;
    for (const auto& tx : block.txs)
        pool.insert(tx);
    for (const auto& tx : extra)
        pool.insert(tx);

    // Partial Fisher-Yates picks distinct target positions.
    std::vector<std::size_t> positions(block.txs.size());
    std::iota(positions.begin(), positions.end(), 0);
    for (std::size_t i = 0; i < s.targets; ++i)
        std::swap(positions[i], positions[i + stream.uniform(positions.size() - i)]);
    positions.resize(s.targets);
    std::sort(positions.begin(), positions.end());

    AttackBudget budget;
    budget.max_tries_per_target = s.budget;
    budget.rng_seed = derive_seed(s.seed, "attack/craft");

    FloodResult flooded;
    if (s.salt_mode == SaltKnowledge::Known) {
        flooded = flood(pool, compact, s.colliders_per_target, positions, budget);
    } else {
        std::vector<Txid> targets;
        for (std::size_t pos : positions)
            targets.push_back(true_ids[pos]);
        flooded = flood_unsalted(pool, targets, s.k, s.colliders_per_target, budget);
    }

    AttackReport report;
    for (const auto& [pos, count] : flooded.crafted)
        report.colliders_inserted += count;
    report.flood_complete = flooded.complete;

    DecodeOutcome outcome = decode(compact, flooded.pool);
    report.stats = outcome.stats;
    report.first_outcome = outcome.is_resolved() ? "resolved" : outcome.is_missing() ? "missing-tx" : "fallback-required";
    if (outcome.is_fallback()) {
        report.fallback_used = true;
        outcome = fallback_decode(compact.header, true_ids, flooded.pool);
    }
    report.reconstructed = outcome.is_resolved() && outcome.block().txids() == true_ids;

    DetectionPolicy policy;
    policy.expected_ambiguity = expected_ambiguity(s.k, pool.size() - 1, s.n, OrderingMode::AsProduced);
    policy.multiplier = s.multiplier;
    policy.min_absolute = s.min_absolute;
    policy.forks_observed = s.forks_observed;
    report.expected_ambiguity = policy.expected_ambiguity;
    report.attack_suspected = detect(report.stats, policy);
    const bool history[] = {report.attack_suspected};
    report.next_mode = next_block_mode(history);
    return report;
}

std::string format_attack_report(const AttackReport& r)
{
    char expected[64];
    std::snprintf(expected, sizeof(expected), "%.6e", r.expected_ambiguity);
    std::string out;
    auto line = [&](const char* key, const std::string& value) {
        out += key;
        out += '\t';
        out += value;
        out += '\n';
    };
    line("colliders_inserted", std::to_string(r.colliders_inserted));
    line("flood_complete", r.flood_complete ? "true" : "false");
    line("first_outcome", r.first_outcome);
    line("ambiguous_positions", std::to_string(r.stats.ambiguous_positions));
    line("combinations_examined", std::to_string(r.stats.combinations_examined));
    line("crc_prechecks", std::to_string(r.stats.crc_prechecks));
    line("sha_recomputations", std::to_string(r.stats.sha_recomputations));
    line("fallback_used", r.fallback_used ? "true" : "false");
    line("reconstructed", r.reconstructed ? "true" : "false");
    line("expected_ambiguity", expected);
    line("attack_suspected", r.attack_suspected ? "true" : "false");
    line("next_block_mode", std::string(to_string(r.next_mode)));
    return out;
}

} // namespace txilm
