#include <txilm/exchange.hpp>
#include <txilm/errors.hpp>
#include <txilm/wire.hpp>

#include <cmath>
#include <cstdio>
#include <numeric>

namespace txilm {

void ExchangeConfig::validate() const
{
    if (n < 1)
        throw InvalidInput("exchange needs n >= 1");
    if (tx_size_bytes < 1 || tx_size_bytes > kMaxPayloadBytes)
        throw InvalidInput("tx size must be in 1..=100000 bytes");
    if (!(mempool_overlap >= 0.0 && mempool_overlap <= 1.0))
        throw InvalidInput("mempool overlap must be in [0, 1]");
    check_hash_bits(k);
    limits.validate();
}

std::vector<Transaction> synthetic_transactions(const Seed& seed, std::string_view label, uint64_t count,
                                                uint64_t size)
{
    DeterministicStream stream(derive_seed(seed, label), 0);
    std::vector<Transaction> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i)
        out.emplace_back(stream.bytes(size));
    return out;
}

namespace {

std::string_view outcome_name(const DecodeOutcome& outcome)
{
    if (outcome.is_resolved())
        return "resolved";
    if (outcome.is_missing())
        return "missing-tx";
    return "fallback-required";
}

void add_stats(DecodeStats& into, const DecodeStats& from)
{
    into.ambiguous_positions = std::max(into.ambiguous_positions, from.ambiguous_positions);
    into.combinations_examined += from.combinations_examined;
    into.crc_prechecks += from.crc_prechecks;
    into.crc_passes += from.crc_passes;
    into.sha_recomputations += from.sha_recomputations;
    into.missing_roundtrips += from.missing_roundtrips;
}

} // namespace

BandwidthReport run_exchange(const ExchangeConfig& config)
{
    config.validate();

    auto block_txs = synthetic_transactions(config.seed, "exchange/block", config.n, config.tx_size_bytes);
    const auto extra = synthetic_transactions(config.seed, "exchange/extra", config.extra_pool_size,
                                              config.tx_size_bytes);
    DeterministicStream salt_stream(derive_seed(config.seed, "exchange/salt"), 0);
    Salt salt;
    salt_stream.fill(salt);

    const FullBlock block = build_block(block_txs, salt, config.k, config.mode);
    const auto true_ids = block.txids();

    // Receiver holds a seeded subset of floor(rho * n) block transactions.
    std::vector<std::size_t> order(block.txs.size());
    std::iota(order.begin(), order.end(), 0);
    DeterministicStream shuffle(derive_seed(config.seed, "exchange/overlap"), 0);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[shuffle.uniform(i)]);
    const auto present = static_cast<std::size_t>(std::floor(config.mempool_overlap * static_cast<double>(config.n)));

    Mempool receiver;
    for (std::size_t i = 0; i < present; ++i)
        receiver.insert(block.txs[order[i]]);
    for (const auto& tx : extra)
        receiver.insert(tx);

    BandwidthReport report;
    report.n = config.n;
    report.bytes_full_block = config.n * config.tx_size_bytes;
    report.bytes_txid_compact = txid_list_wire_size(config.n);

    const auto wire = serialize_compact(encode(block));
    report.wire_bytes = wire.size();
    report.packed_hash_bytes = wire.size() - kCompactHeaderBytes;
    report.per_tx_bytes = static_cast<double>(report.packed_hash_bytes) / static_cast<double>(config.n);

    const CompactBlock received = parse_compact(wire);
    DecodeOutcome outcome = decode(received, receiver, config.limits);
    add_stats(report.stats, outcome.stats);

    // The sender answers a missing-transaction request with the transactions
    // at the listed block positions.
    auto fetch_missing = [&](const std::vector<std::size_t>& positions) {
        std::vector<Transaction> supplied;
        for (std::size_t pos : positions)
            supplied.push_back(block.txs[pos]);
        report.missing_count += supplied.size();
        report.missing_roundtrip_bytes += 2 * kMessageOverheadBytes + supplied.size() * (Txid::kSize + config.tx_size_bytes);
        for (const auto& tx : supplied)
            receiver.insert(tx);
        return supplied;
    };

    if (outcome.is_missing()) {
        const Mempool before = receiver;
        const auto supplied = fetch_missing(outcome.missing().positions);
        outcome = supply_missing(received, before, supplied, config.limits).outcome;
        add_stats(report.stats, outcome.stats);
    }
    if (outcome.is_fallback()) {
        report.fallback_used = true;
        const auto list_wire = serialize_txid_list(true_ids);
        report.fallback_bytes += 2 * kMessageOverheadBytes + list_wire.size();
        const auto ids = parse_txid_list(list_wire);
        outcome = fallback_decode(received.header, ids, receiver);
        if (outcome.is_missing()) {
            fetch_missing(outcome.missing().positions);
            outcome = fallback_decode(received.header, ids, receiver);
            ++outcome.stats.missing_roundtrips;
        }
        add_stats(report.stats, outcome.stats);
    }

    report.outcome = outcome_name(outcome);
    report.reconstructed = outcome.is_resolved() && outcome.block().txids() == true_ids;
    report.bytes_txilm = report.wire_bytes + report.missing_roundtrip_bytes + report.fallback_bytes;
    report.ratio_vs_full = static_cast<double>(report.bytes_full_block) / static_cast<double>(report.bytes_txilm);
    report.ratio_vs_txid_compact =
        static_cast<double>(report.bytes_txid_compact) / static_cast<double>(report.bytes_txilm);
    return report;
}

std::string format_report(const BandwidthReport& r)
{
    std::string out;
    char buf[128];
    auto line = [&](const char* key, const std::string& value) {
        out += key;
        out += '\t';
        out += value;
        out += '\n';
    };
    auto num = [](uint64_t v) { return std::to_string(v); };
    auto real = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        return std::string(buf);
    };
    line("n", num(r.n));
    line("outcome", r.outcome);
    line("reconstructed", r.reconstructed ? "true" : "false");
    line("bytes_full_block", num(r.bytes_full_block));
    line("bytes_txid_compact", num(r.bytes_txid_compact));
    line("wire_bytes", num(r.wire_bytes));
    line("packed_hash_bytes", num(r.packed_hash_bytes));
    line("missing_roundtrip_bytes", num(r.missing_roundtrip_bytes));
    line("fallback_bytes", num(r.fallback_bytes));
    line("bytes_txilm", num(r.bytes_txilm));
    line("ratio_vs_full", real(r.ratio_vs_full));
    line("ratio_vs_txid_compact", real(r.ratio_vs_txid_compact));
    line("per_tx_bytes", real(r.per_tx_bytes));
    line("missing_count", num(r.missing_count));
    line("fallback_used", r.fallback_used ? "true" : "false");
    line("ambiguous_positions", num(r.stats.ambiguous_positions));
    line("combinations_examined", num(r.stats.combinations_examined));
    line("crc_prechecks", num(r.stats.crc_prechecks));
    line("sha_recomputations", num(r.stats.sha_recomputations));
    line("missing_roundtrips", num(r.stats.missing_roundtrips));
    return out;
}

} // namespace txilm
