#include "test_util.hpp"

#include <txilm/codec.hpp>
#include <txilm/errors.hpp>
#include <txilm/fixtures.hpp>
#include <txilm/wire.hpp>

#include <gtest/gtest.h>

using namespace txilm;
using namespace txilm::test;

namespace {

CompactBlock golden_block()
{
    CompactBlock c;
    c.header.salt = {0xde, 0xad, 0xbe, 0xef};
    c.header.hash_bits = 20;
    c.header.ordering_mode = OrderingMode::SortedByTxid;
    c.header.crc_merkle_root = {0x01, 0x02, 0x03, 0x04};
    for (std::size_t i = 0; i < 32; ++i)
        c.header.sha_merkle_root[i] = static_cast<uint8_t>(0xa0 + i);
    c.header.tx_count = 3;
    c.hashes = {ShortHash(20, 0xabcde), ShortHash(20, 0x12345), ShortHash(20, 0xfffff)};
    return c;
}

} // namespace

TEST(Wire, HeaderSize)
{
    EXPECT_EQ(kCompactHeaderBytes, 51u);
    EXPECT_EQ(kTxidListHeaderBytes, 9u);
    EXPECT_EQ(packed_hash_bytes(200, 32), 800u);
    EXPECT_EQ(packed_hash_bytes(3, 20), 8u);
    EXPECT_EQ(packed_hash_bytes(1, 1), 1u);
    EXPECT_EQ(packed_hash_bytes(0, 32), 0u);
    EXPECT_EQ(txid_list_wire_size(200), 9u + 6400u);
}

TEST(Wire, GoldenBytes)
{
    const auto wire = serialize_compact(golden_block());
    std::vector<uint8_t> expected{'T', 'X', 'L', 'M', 0x01, 0x01, 20, 0xde, 0xad, 0xbe, 0xef,
                                  0x03, 0x00, 0x00, 0x00, 0x01, 0x02, 0x03, 0x04};
    for (std::size_t i = 0; i < 32; ++i)
        expected.push_back(static_cast<uint8_t>(0xa0 + i));
    // abcde | 12345 | fffff, MSB first, padded with four zero bits.
    for (uint8_t b : {0xab, 0xcd, 0xe1, 0x23, 0x45, 0xff, 0xff, 0xf0})
        expected.push_back(b);
    EXPECT_EQ(wire, expected);
    EXPECT_EQ(compact_wire_size(golden_block()), expected.size());
    EXPECT_EQ(parse_compact(wire), golden_block());
}

TEST(Wire, RejectsMalformedInput)
{
    const auto good = serialize_compact(golden_block());
    auto mutate = [&](std::size_t at, uint8_t value) {
        auto w = good;
        w[at] = value;
        return w;
    };
    EXPECT_THROW(parse_compact(mutate(0, 'X')), MalformedBlock);
    EXPECT_THROW(parse_compact(mutate(4, 2)), MalformedBlock);
    EXPECT_THROW(parse_compact(mutate(5, 0x80)), MalformedBlock);
    EXPECT_THROW(parse_compact(mutate(6, 0)), MalformedBlock);
    EXPECT_THROW(parse_compact(mutate(6, 65)), MalformedBlock);
    EXPECT_THROW(parse_compact(mutate(good.size() - 1, 0xf1)), MalformedBlock) << "nonzero padding";

    auto zero_count = good;
    std::fill(zero_count.begin() + 11, zero_count.begin() + 15, 0);
    zero_count.resize(kCompactHeaderBytes);
    EXPECT_THROW(parse_compact(zero_count), MalformedBlock);

    auto truncated = good;
    truncated.pop_back();
    EXPECT_THROW(parse_compact(truncated), MalformedBlock);
    auto extended = good;
    extended.push_back(0);
    EXPECT_THROW(parse_compact(extended), MalformedBlock);
    EXPECT_THROW(parse_compact(std::span<const uint8_t>(good.data(), 10)), MalformedBlock);
}

TEST(Wire, TxidListRoundTrip)
{
    const auto ids = ids_of(random_txs("wire-ids", 7));
    const auto wire = serialize_txid_list(ids);
    ASSERT_EQ(wire.size(), txid_list_wire_size(7));
    EXPECT_EQ(parse_txid_list(wire), ids);

    auto bad = wire;
    bad[0] = 'Q';
    EXPECT_THROW(parse_txid_list(bad), MalformedBlock);
    bad = wire;
    bad.pop_back();
    EXPECT_THROW(parse_txid_list(bad), MalformedBlock);
}

TEST(Wire, RandomRoundTrip)
{
    DeterministicStream stream(seed_of("wire-prop"), 0);
    for (int iter = 0; iter < 500; ++iter) {
        CompactBlock c;
        stream.fill(c.header.salt);
        c.header.hash_bits = 1 + static_cast<unsigned>(stream.uniform(64));
        c.header.ordering_mode = stream.uniform(2) ? OrderingMode::SortedByTxid : OrderingMode::AsProduced;
        stream.fill(c.header.crc_merkle_root);
        stream.fill(c.header.sha_merkle_root);
        const std::size_t n = 1 + stream.uniform(70);
        c.header.tx_count = static_cast<uint32_t>(n);
        for (std::size_t i = 0; i < n; ++i)
            c.hashes.emplace_back(c.header.hash_bits, truncate_bits(stream.next_u64(), c.header.hash_bits));
        const auto wire = serialize_compact(c);
        ASSERT_EQ(wire.size(), kCompactHeaderBytes + packed_hash_bytes(n, c.header.hash_bits));
        EXPECT_EQ(parse_compact(wire), c);
    }
}

TEST(Wire, MatchesIndependentFixture)
{
    const std::string dir = TXILM_TEST_DATA_DIR;
    const auto txs = parse_txset(read_file(dir + "/golden.txset"));
    const auto compact = encode(txs, Salt{0xde, 0xad, 0xbe, 0xef}, 32, OrderingMode::AsProduced);
    EXPECT_EQ(serialize_compact(compact), read_binary(dir + "/golden.wire"));
    EXPECT_EQ(format_txidset(ids_of(txs)), read_file(dir + "/golden.txids"));
}
