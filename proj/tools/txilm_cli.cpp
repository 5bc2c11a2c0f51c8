// Command-line harness: collision sweeps, block encode/decode, relay
// bandwidth accounting and attack scenarios.

#include <txilm/adversary.hpp>
#include <txilm/codec.hpp>
#include <txilm/collision_model.hpp>
#include <txilm/errors.hpp>
#include <txilm/exchange.hpp>
#include <txilm/fixtures.hpp>
#include <txilm/hex.hpp>
#include <txilm/scenario.hpp>
#include <txilm/wire.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
    kOk = 0,
    kRuntimeError = 1,
    kUsage = 2,
    kMissingTx = 3,
    kFallbackRequired = 4,
    kRefused = 5,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

txilm::Seed resolve_seed(const std::string& flag)
{
    std::string hex = flag;
    if (hex.empty()) {
        if (const char* env = std::getenv("TXILM_SEED"))
            hex = env;
    }
    if (hex.empty())
        return txilm::Seed{};
    try {
        return txilm::seed_from_hex(hex);
    } catch (const txilm::InvalidInput&) {
        throw UsageError("seed must be 64 hex characters");
    }
}

std::pair<unsigned, unsigned> parse_k_range(const std::string& spec)
{
    auto to_uint = [](const std::string& s) -> unsigned {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            throw UsageError("bad k value '" + s + "'");
        }
        if (used != s.size())
            throw UsageError("bad k value '" + s + "'");
        return static_cast<unsigned>(v);
    };
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        const unsigned k = to_uint(spec);
        return {k, k};
    }
    return {to_uint(spec.substr(0, colon)), to_uint(spec.substr(colon + 1))};
}

txilm::Salt parse_salt(const std::string& hex)
{
    std::vector<uint8_t> raw;
    try {
        raw = txilm::from_hex(hex);
    } catch (const txilm::InvalidInput&) {
        throw UsageError("salt must be 8 hex characters");
    }
    if (raw.size() != 4)
        throw UsageError("salt must be 8 hex characters");
    return {raw[0], raw[1], raw[2], raw[3]};
}

int outcome_exit_code(const txilm::DecodeOutcome& outcome)
{
    if (outcome.is_resolved())
        return kOk;
    return outcome.is_missing() ? kMissingTx : kFallbackRequired;
}

void print_stats(const txilm::DecodeStats& s)
{
    std::printf("ambiguous_positions\t%llu\n", static_cast<unsigned long long>(s.ambiguous_positions));
    std::printf("combinations_examined\t%llu\n", static_cast<unsigned long long>(s.combinations_examined));
    std::printf("crc_prechecks\t%llu\n", static_cast<unsigned long long>(s.crc_prechecks));
    std::printf("crc_passes\t%llu\n", static_cast<unsigned long long>(s.crc_passes));
    std::printf("sha_recomputations\t%llu\n", static_cast<unsigned long long>(s.sha_recomputations));
}

struct CollisionsArgs {
    std::string k = "20:35";
    uint64_t m = 1000;
    std::vector<uint64_t> n{100, 300, 500};
    uint64_t trials = 100'000;
    std::string seed;
    bool sorted = false;
    std::string out_dir = ".";
    unsigned threads = 0;
};

int run_collisions(const CollisionsArgs& a)
{
    txilm::SweepConfig config;
    std::tie(config.k_min, config.k_max) = parse_k_range(a.k);
    config.m = a.m;
    config.n_list = a.n;
    config.trials = a.trials;
    config.seed = resolve_seed(a.seed);
    config.sorted = a.sorted;
    config.threads = a.threads;
    try {
        config.validate();
    } catch (const txilm::InvalidInput& e) {
        throw UsageError(e.what());
    }

    const auto rows = txilm::sweep(config);
    std::filesystem::create_directories(a.out_dir);
    const std::size_t per_n = config.k_max - config.k_min + 1;
    std::printf("n\tk\tp_analytic\tp_empirical\tT_k\n");
    for (std::size_t i = 0; i < config.n_list.size(); ++i) {
        const std::span<const txilm::SweepRow> block(rows.data() + i * per_n, per_n);
        const auto path = std::filesystem::path(a.out_dir) / txilm::sweep_file_name(config.n_list[i], config.sorted);
        txilm::write_file(path, txilm::sweep_tsv(block));
        for (const auto& row : block) {
            std::printf("%llu\t%u\t%.6e\t%.6e\t%llu\n", static_cast<unsigned long long>(row.n), row.k,
                        row.p_analytic, row.p_empirical, static_cast<unsigned long long>(row.collisions));
        }
    }
    return kOk;
}

struct ExchangeArgs {
    uint64_t n = 200;
    uint64_t tx_size = 320;
    double overlap = 1.0;
    uint64_t extra = 0;
    unsigned k = 32;
    bool sorted = false;
    std::string seed;
};

int run_exchange(const ExchangeArgs& a)
{
    txilm::ExchangeConfig config;
    config.n = a.n;
    config.tx_size_bytes = a.tx_size;
    config.mempool_overlap = a.overlap;
    config.extra_pool_size = a.extra;
    config.k = a.k;
    config.mode = a.sorted ? txilm::OrderingMode::SortedByTxid : txilm::OrderingMode::AsProduced;
    config.seed = resolve_seed(a.seed);
    try {
        config.validate();
    } catch (const txilm::InvalidInput& e) {
        throw UsageError(e.what());
    }
    std::fputs(txilm::format_report(txilm::run_exchange(config)).c_str(), stdout);
    return kOk;
}

struct EncodeArgs {
    std::string txset;
    std::string salt = "00000000";
    unsigned k = 32;
    bool sorted = false;
    std::string out;
};

int run_encode(const EncodeArgs& a)
{
    const auto salt = parse_salt(a.salt);
    if (a.k < txilm::kMinProtocolHashBits || a.k > txilm::kMaxHashBits)
        throw UsageError("--k must be in 20..=64");
    auto txs = txilm::parse_txset(txilm::read_file(a.txset));
    const auto mode = a.sorted ? txilm::OrderingMode::SortedByTxid : txilm::OrderingMode::AsProduced;
    const auto block = txilm::build_block(std::move(txs), salt, a.k, mode);
    const auto wire = txilm::serialize_compact(txilm::encode(block));
    txilm::write_binary(a.out, wire);
    std::printf("tx_count\t%u\n", block.header.tx_count);
    std::printf("wire_bytes\t%zu\n", wire.size());
    std::printf("sha_merkle_root\t%s\n", txilm::to_hex(block.header.sha_merkle_root).c_str());
    std::printf("crc_merkle_root\t%s\n", txilm::to_hex(block.header.crc_merkle_root).c_str());
    return kOk;
}

struct DecodeArgs {
    std::string wire;
    std::string pool;
    uint64_t max_combinations = uint64_t{1} << 20;
    uint64_t max_candidates = 64;
};

int run_decode(const DecodeArgs& a)
{
    const auto compact = txilm::parse_compact(txilm::read_binary(a.wire));
    txilm::Mempool pool;
    for (auto& tx : txilm::parse_txset(txilm::read_file(a.pool)))
        pool.insert(std::move(tx));
    txilm::DecodeLimits limits{a.max_combinations, a.max_candidates};
    try {
        limits.validate();
    } catch (const txilm::InvalidInput& e) {
        throw UsageError(e.what());
    }

    const auto outcome = txilm::decode(compact, pool, limits);
    if (outcome.is_resolved()) {
        std::printf("outcome\tresolved\n");
        print_stats(outcome.stats);
        for (const auto& id : outcome.block().txids())
            std::printf("%s\n", id.to_hex().c_str());
    } else if (outcome.is_missing()) {
        std::printf("outcome\tmissing-tx\n");
        print_stats(outcome.stats);
        std::printf("missing_positions");
        for (std::size_t pos : outcome.missing().positions)
            std::printf("\t%zu", pos);
        std::printf("\n");
    } else {
        std::printf("outcome\tfallback-required\n");
        std::printf("reason\t%s\n", std::string(txilm::to_string(outcome.fallback_reason())).c_str());
        print_stats(outcome.stats);
    }
    return outcome_exit_code(outcome);
}

int run_attack(const std::string& scenario_path)
{
    txilm::AttackScenario scenario;
    try {
        scenario = txilm::parse_scenario(txilm::read_file(scenario_path));
    } catch (const txilm::InvalidInput& e) {
        throw UsageError(e.what());
    }
    std::fputs(txilm::format_attack_report(txilm::run_attack(scenario)).c_str(), stdout);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Short-hash block relay: collision sweeps, codec, exchange and attack harness"};
    app.require_subcommand(1);

    CollisionsArgs coll;
    auto* c = app.add_subcommand("collisions", "Monte Carlo collision sweep; one TSV per n");
    c->add_option("--k", coll.k, "k or k_min:k_max")->capture_default_str();
    c->add_option("--m", coll.m, "mempool size")->capture_default_str();
    c->add_option("--n", coll.n, "block sizes")->delimiter(',')->capture_default_str();
    c->add_option("--trials", coll.trials, "trials per cell")->capture_default_str();
    c->add_option("--seed", coll.seed, "64-hex seed (default $TXILM_SEED, else zero)");
    c->add_flag("--sorted", coll.sorted, "txid-sorted blocks");
    c->add_option("--out", coll.out_dir, "output directory")->capture_default_str();
    c->add_option("--threads", coll.threads, "worker threads (0 = all cores)");

    ExchangeArgs ex;
    auto* e = app.add_subcommand("exchange", "Relay one synthetic block and account bytes");
    e->add_option("--n", ex.n, "block transactions")->capture_default_str();
    e->add_option("--tx-size", ex.tx_size, "payload bytes per transaction")->capture_default_str();
    e->add_option("--overlap", ex.overlap, "fraction of block txs already in the receiver pool")->capture_default_str();
    e->add_option("--extra", ex.extra, "unrelated txs in the receiver pool")->capture_default_str();
    e->add_option("--k", ex.k, "short hash bits")->capture_default_str();
    e->add_flag("--sorted", ex.sorted, "txid-sorted blocks");
    e->add_option("--seed", ex.seed, "64-hex seed");

    EncodeArgs en;
    auto* enc = app.add_subcommand("encode", "Encode a txset into a compact block wire file");
    enc->add_option("--txset", en.txset, "input txset")->required();
    enc->add_option("--salt", en.salt, "8-hex salt")->capture_default_str();
    enc->add_option("--k", en.k, "short hash bits (20..64)")->capture_default_str();
    enc->add_flag("--sorted", en.sorted, "sort by txid");
    enc->add_option("--out", en.out, "output wire file")->required();

    DecodeArgs de;
    auto* dec = app.add_subcommand("decode", "Decode a compact block wire file against a txset pool");
    dec->add_option("--wire", de.wire, "compact block wire file")->required();
    dec->add_option("--pool", de.pool, "receiver mempool txset")->required();
    dec->add_option("--max-combinations", de.max_combinations)->capture_default_str();
    dec->add_option("--max-candidates", de.max_candidates)->capture_default_str();

    std::string scenario_path;
    auto* att = app.add_subcommand("attack", "Run a collision-flood scenario");
    att->add_option("--scenario", scenario_path, "scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kUsage;
    }

    try {
        if (c->parsed())
            return run_collisions(coll);
        if (e->parsed())
            return run_exchange(ex);
        if (enc->parsed())
            return run_encode(en);
        if (dec->parsed())
            return run_decode(de);
        if (att->parsed())
            return run_attack(scenario_path);
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return kUsage;
    } catch (const txilm::ScenarioRefused& err) {
        std::cerr << "scenario refused: " << err.what() << "\n";
        return kRefused;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kRuntimeError;
    }
    return kUsage;
}
