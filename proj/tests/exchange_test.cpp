#include "test_util.hpp"

#include <txilm/errors.hpp>
#include <txilm/exchange.hpp>
#include <txilm/wire.hpp>

#include <gtest/gtest.h>

using namespace txilm;
using namespace txilm::test;

namespace {

void expect_identity(const BandwidthReport& r)
{
    EXPECT_EQ(r.bytes_txilm, r.wire_bytes + r.missing_roundtrip_bytes + r.fallback_bytes);
    EXPECT_DOUBLE_EQ(r.ratio_vs_full, static_cast<double>(r.bytes_full_block) / r.bytes_txilm);
    EXPECT_EQ(r.wire_bytes, kCompactHeaderBytes + r.packed_hash_bytes);
}

} // namespace

TEST(Exchange, FullOverlapAtDefaultWidth)
{
    ExchangeConfig cfg;
    cfg.seed = seed_of("exchange");
    const auto r = run_exchange(cfg);
    EXPECT_EQ(r.outcome, "resolved");
    EXPECT_TRUE(r.reconstructed);
    EXPECT_DOUBLE_EQ(r.per_tx_bytes, 4.0);
    EXPECT_EQ(r.packed_hash_bytes, 800u);
    EXPECT_EQ(r.bytes_txilm, 851u);
    EXPECT_EQ(r.bytes_full_block, 64000u);
    EXPECT_EQ(r.bytes_txid_compact, 9u + 6400u);
    EXPECT_GE(r.ratio_vs_full, 70.0);
    EXPECT_EQ(r.missing_count, 0u);
    expect_identity(r);
}

TEST(Exchange, EmptyPoolCostsMoreThanFullBlock)
{
    ExchangeConfig cfg;
    cfg.seed = seed_of("exchange-empty");
    cfg.mempool_overlap = 0;
    const auto r = run_exchange(cfg);
    EXPECT_TRUE(r.reconstructed);
    EXPECT_EQ(r.missing_count, 200u);
    EXPECT_EQ(r.missing_roundtrip_bytes, 2 * kMessageOverheadBytes + 200u * (32 + 320));
    EXPECT_GT(r.bytes_txilm, r.bytes_full_block);
    EXPECT_LT(r.ratio_vs_full, 1.0);
    expect_identity(r);
}

TEST(Exchange, PartialOverlapAndExtraPool)
{
    ExchangeConfig cfg;
    cfg.seed = seed_of("exchange-partial");
    cfg.mempool_overlap = 0.9;
    cfg.extra_pool_size = 2000;
    cfg.mode = OrderingMode::SortedByTxid;
    const auto r = run_exchange(cfg);
    EXPECT_TRUE(r.reconstructed);
    EXPECT_EQ(r.missing_count, 20u);
    EXPECT_EQ(r.stats.missing_roundtrips, 1u);
    expect_identity(r);
}

TEST(Exchange, SingleTransaction)
{
    ExchangeConfig cfg;
    cfg.n = 1;
    const auto r = run_exchange(cfg);
    EXPECT_TRUE(r.reconstructed);
    EXPECT_EQ(r.bytes_txilm, kCompactHeaderBytes + 4);
    expect_identity(r);
}

TEST(Exchange, ShortHashesRatioGrowsWithWidthShrinking)
{
    double previous = 0;
    for (unsigned k : {64u, 48u, 32u, 24u}) {
        ExchangeConfig cfg;
        cfg.k = k;
        cfg.seed = seed_of("exchange-k");
        const auto r = run_exchange(cfg);
        EXPECT_TRUE(r.reconstructed);
        EXPECT_GT(r.ratio_vs_full, previous);
        previous = r.ratio_vs_full;
    }
}

TEST(Exchange, Deterministic)
{
    ExchangeConfig cfg;
    cfg.seed = seed_of("exchange-det");
    cfg.mempool_overlap = 0.5;
    EXPECT_EQ(format_report(run_exchange(cfg)), format_report(run_exchange(cfg)));
}

TEST(Exchange, Validation)
{
    ExchangeConfig cfg;
    cfg.n = 0;
    EXPECT_THROW(run_exchange(cfg), InvalidInput);
    cfg = {};
    cfg.mempool_overlap = 1.5;
    EXPECT_THROW(run_exchange(cfg), InvalidInput);
    cfg = {};
    cfg.tx_size_bytes = 0;
    EXPECT_THROW(run_exchange(cfg), InvalidInput);
}

TEST(Exchange, ReportFormat)
{
    const auto text = format_report(run_exchange(ExchangeConfig{}));
    EXPECT_NE(text.find("bytes_txilm\t851\n"), std::string::npos);
    EXPECT_NE(text.find("outcome\tresolved\n"), std::string::npos);
    EXPECT_NE(text.find("per_tx_bytes\t4.0000\n"), std::string::npos);
}
