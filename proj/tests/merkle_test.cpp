#include "test_util.hpp"

#include <txilm/crc.hpp>
#include <txilm/errors.hpp>
#include <txilm/fixtures.hpp>
#include <txilm/hex.hpp>
#include <txilm/merkle.hpp>
#include <txilm/sha256.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace txilm;
using namespace txilm::test;

namespace {

std::vector<uint8_t> concat(std::span<const uint8_t> a, std::span<const uint8_t> b)
{
    std::vector<uint8_t> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

TEST(Merkle, EmptyListRejected)
{
    EXPECT_THROW(sha_merkle_root({}), InvalidInput);
    EXPECT_THROW(crc_merkle_root({}), InvalidInput);
}

TEST(Merkle, SingleLeafIdentity)
{
    const auto t = random_txs("leaf", 1)[0].txid();
    const Txid one[] = {t};
    EXPECT_EQ(sha_merkle_root(one), t.bytes());
    EXPECT_EQ(crc_merkle_root(one), to_root32(crc32_iso_hdlc(t.span())));
}

TEST(Merkle, TwoLeaves)
{
    const auto ids = ids_of(random_txs("two", 2));
    EXPECT_EQ(sha_merkle_root(ids), sha256(concat(ids[0].span(), ids[1].span())));
    const auto l = to_root32(crc32_iso_hdlc(ids[0].span()));
    const auto r = to_root32(crc32_iso_hdlc(ids[1].span()));
    EXPECT_EQ(crc_merkle_root(ids), to_root32(crc32_iso_hdlc(concat(l, r))));
}

TEST(Merkle, ThreeLeavesDuplicateLast)
{
    const auto ids = ids_of(random_txs("three", 3));
    const auto left = sha256(concat(ids[0].span(), ids[1].span()));
    const auto right = sha256(concat(ids[2].span(), ids[2].span()));
    EXPECT_EQ(sha_merkle_root(ids), sha256(concat(left, right)));
}

TEST(Merkle, PinnedGoldenVectors)
{
    const auto text = read_file(std::string(TXILM_TEST_DATA_DIR) + "/merkle_vectors.tsv");
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "txid_list_hex\tsha_root_hex\tcrc_root_hex");
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string list, sha_hex, crc_hex;
        fields >> list >> sha_hex >> crc_hex;
        std::vector<Txid> ids;
        std::istringstream parts(list);
        std::string part;
        while (std::getline(parts, part, ','))
            ids.push_back(Txid::from_hex(part));
        EXPECT_EQ(to_hex(sha_merkle_root(ids)), sha_hex) << ids.size();
        EXPECT_EQ(to_hex(crc_merkle_root(ids)), crc_hex) << ids.size();
        ++rows;
    }
    EXPECT_EQ(rows, 7);
}

TEST(Merkle, FourLeafPermutationsChangeRoots)
{
    auto ids = ids_of(random_txs("perm", 4));
    std::sort(ids.begin(), ids.end());
    const auto sha_identity = sha_merkle_root(ids);
    const auto crc_identity = crc_merkle_root(ids);
    int sha_changed = 0, crc_changed = 0, permutations = 0;
    while (std::next_permutation(ids.begin(), ids.end())) {
        ++permutations;
        sha_changed += sha_merkle_root(ids) != sha_identity;
        crc_changed += crc_merkle_root(ids) != crc_identity;
    }
    EXPECT_EQ(permutations, 23);
    EXPECT_EQ(sha_changed, 23);
    EXPECT_GE(crc_changed, 1);
}

TEST(Merkle, SwappingAnyTwoLeavesChangesShaRoot)
{
    for (std::size_t n : {2u, 3u, 5u, 8u, 13u}) {
        const auto ids = ids_of(random_txs("swap-" + std::to_string(n), n));
        const auto root = sha_merkle_root(ids);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                auto swapped = ids;
                std::swap(swapped[i], swapped[j]);
                EXPECT_NE(sha_merkle_root(swapped), root) << n << " " << i << " " << j;
            }
        }
    }
}

TEST(Merkle, RootsAreDeterministic)
{
    const auto ids = ids_of(random_txs("det", 17));
    EXPECT_EQ(sha_merkle_root(ids), sha_merkle_root(ids));
    EXPECT_EQ(crc_merkle_root(ids), crc_merkle_root(ids));
}

TEST(Merkle, Root32BigEndianRoundTrip)
{
    EXPECT_EQ(to_root32(0x01020304U), (MerkleRoot32{1, 2, 3, 4}));
    EXPECT_EQ(from_root32(MerkleRoot32{1, 2, 3, 4}), 0x01020304U);
}
