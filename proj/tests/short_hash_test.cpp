#include "test_util.hpp"

#include <txilm/crc.hpp>
#include <txilm/errors.hpp>
#include <txilm/fixtures.hpp>
#include <txilm/hex.hpp>
#include <txilm/short_hash.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <sstream>
#include <string>

using namespace txilm;
using namespace txilm::test;

namespace {

// Bit-at-a-time references, independent of the table-driven implementation.
uint64_t bitwise_crc64_xz(std::span<const uint8_t> data)
{
    uint64_t crc = ~uint64_t{0};
    for (uint8_t byte : data) {
        crc ^= byte;
        for (int i = 0; i < 8; ++i)
            crc = (crc >> 1) ^ ((crc & 1) ? 0xC96C5795D7870F42ULL : 0);
    }
    return ~crc;
}

uint32_t bitwise_crc32(std::span<const uint8_t> data)
{
    uint32_t crc = ~uint32_t{0};
    for (uint8_t byte : data) {
        crc ^= byte;
        for (int i = 0; i < 8; ++i)
            crc = (crc >> 1) ^ ((crc & 1) ? 0xEDB88320U : 0);
    }
    return ~crc;
}

std::span<const uint8_t> ascii(std::string_view s)
{
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

Txid random_txid(DeterministicStream& stream)
{
    return Txid(stream.next_block());
}

} // namespace

TEST(Crc, CheckValues)
{
    EXPECT_EQ(crc64_xz(ascii("123456789")), 0x995DC9BBDF1939FAULL);
    EXPECT_EQ(crc32_iso_hdlc(ascii("123456789")), 0xCBF43926U);
    EXPECT_EQ(crc64_xz({}), 0u);
}

TEST(Crc, TableMatchesBitwiseReference)
{
    DeterministicStream stream(seed_of("crc-ref"), 0);
    for (std::size_t len = 0; len < 100; ++len) {
        const auto data = stream.bytes(len);
        EXPECT_EQ(crc64_xz(data), bitwise_crc64_xz(data)) << len;
        EXPECT_EQ(crc32_iso_hdlc(data), bitwise_crc32(data)) << len;
    }
}

TEST(Crc, UpdateEqualsOneShot)
{
    DeterministicStream stream(seed_of("crc-update"), 0);
    const auto data = stream.bytes(77);
    const std::span<const uint8_t> all(data);
    EXPECT_EQ(crc64_xz_update(crc64_xz(all.first(30)), all.subspan(30)), crc64_xz(all));
}

TEST(ShortHash, ZeroSaltZeroTxidGoldenVector)
{
    const std::array<uint8_t, 36> zeros{};
    const uint64_t expected = bitwise_crc64_xz(zeros);
    EXPECT_EQ(expected, 0x0aeff7d356a1283cULL);
    const Txid zero_txid;
    EXPECT_EQ(shorthash(SaltedHashParams(Salt{}, 64), zero_txid).value(), expected);
    EXPECT_EQ(shorthash(SaltedHashParams(Salt{}, 32), zero_txid).value(), expected & 0xffffffffULL);
}

TEST(ShortHash, PinnedGoldenVectors)
{
    const auto text = read_file(std::string(TXILM_TEST_DATA_DIR) + "/shorthash_vectors.tsv");
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "salt_hex\ttxid_hex\tk\tvalue_hex");
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string salt_hex, txid_hex, k, value_hex;
        fields >> salt_hex >> txid_hex >> k >> value_hex;
        const auto salt_raw = from_hex(salt_hex);
        const Salt salt{salt_raw[0], salt_raw[1], salt_raw[2], salt_raw[3]};
        const auto h = shorthash(SaltedHashParams(salt, std::stoul(k)), Txid::from_hex(txid_hex));
        EXPECT_EQ(h.value(), std::stoull(value_hex, nullptr, 16)) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 42);
}

TEST(ShortHash, UnsaltedEqualsZeroSalt)
{
    DeterministicStream stream(seed_of("unsalted"), 0);
    for (int i = 0; i < 100; ++i) {
        const auto id = random_txid(stream);
        for (unsigned k : {20u, 32u, 64u})
            EXPECT_EQ(unsalted_shorthash(id, k), shorthash(SaltedHashParams(Salt{}, k), id));
    }
}

TEST(ShortHash, TruncationChain)
{
    DeterministicStream stream(seed_of("chain"), 0);
    const Salt salt{0xde, 0xad, 0xbe, 0xef};
    for (int i = 0; i < 50; ++i) {
        const auto id = random_txid(stream);
        const uint64_t full = shorthash(SaltedHashParams(salt, 64), id).value();
        for (unsigned k = 20; k < 64; ++k) {
            const uint64_t vk = shorthash(SaltedHashParams(salt, k), id).value();
            const uint64_t vk1 = shorthash(SaltedHashParams(salt, k + 1), id).value();
            EXPECT_EQ(vk, vk1 & ((uint64_t{1} << k) - 1));
            EXPECT_EQ(vk, full & ((uint64_t{1} << k) - 1));
        }
    }
}

TEST(ShortHash, InvalidWidthRejected)
{
    EXPECT_THROW(SaltedHashParams(Salt{}, 0), InvalidInput);
    EXPECT_THROW(SaltedHashParams(Salt{}, 65), InvalidInput);
}

TEST(ShortHash, OneByteSaltChangeDecorrelatesAt32Bits)
{
    DeterministicStream stream(seed_of("salt-byte"), 0);
    const Salt a{1, 2, 3, 4};
    const Salt b{1, 2, 3, 5};
    int equal = 0;
    for (int i = 0; i < 10'000; ++i) {
        const auto id = random_txid(stream);
        equal += shorthash(SaltedHashParams(a, 32), id) == shorthash(SaltedHashParams(b, 32), id);
    }
    EXPECT_EQ(equal, 0);
}

TEST(ShortHash, RandomSaltCollisionRateIsTwoToMinusK)
{
    // For a fixed txid and two independent random salts, P(equal) = 2^-k.
    DeterministicStream stream(seed_of("salt-rate"), 0);
    const auto id = random_txid(stream);
    const int samples = 200'000;
    for (unsigned k : {12u, 16u}) {
        int equal = 0;
        for (int i = 0; i < samples; ++i) {
            Salt s1, s2;
            stream.fill(s1);
            stream.fill(s2);
            if (s1 == s2)
                continue;
            equal += shorthash(SaltedHashParams(s1, k), id) == shorthash(SaltedHashParams(s2, k), id);
        }
        const double p = std::ldexp(1.0, -static_cast<int>(k));
        const double mean = samples * p;
        const double sigma = std::sqrt(samples * p * (1 - p));
        EXPECT_NEAR(equal, mean, 3 * sigma) << "k=" << k;
    }
}

TEST(ShortHash, TwentyBitValuesAreUniform)
{
    DeterministicStream stream(seed_of("chi-square"), 0);
    constexpr int kSamples = 1'000'000;
    constexpr int kBuckets = 1024;
    std::vector<int> counts(kBuckets, 0);
    for (int i = 0; i < kSamples; ++i)
        ++counts[unsalted_shorthash(random_txid(stream), 20).value() >> 10];
    const double expected = static_cast<double>(kSamples) / kBuckets;
    double chi2 = 0;
    for (int c : counts)
        chi2 += (c - expected) * (c - expected) / expected;
    // Upper 0.001 quantile of chi-square with 1023 degrees of freedom.
    EXPECT_LT(chi2, 1168.50);
}
