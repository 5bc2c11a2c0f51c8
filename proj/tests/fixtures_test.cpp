#include "test_util.hpp"

#include <txilm/errors.hpp>
#include <txilm/fixtures.hpp>

#include <gtest/gtest.h>

#include <filesystem>

using namespace txilm;
using namespace txilm::test;

TEST(Fixtures, TxsetRoundTrip)
{
    const auto txs = random_txs("fixtures", 5, 17);
    const auto text = format_txset(txs);
    const auto back = parse_txset(text);
    ASSERT_EQ(back.size(), txs.size());
    for (std::size_t i = 0; i < txs.size(); ++i)
        EXPECT_EQ(back[i].payload(), txs[i].payload());
    EXPECT_EQ(parse_txset("\n" + text + "\n\n").size(), 5u);
}

TEST(Fixtures, TxidsetRoundTrip)
{
    const auto ids = ids_of(random_txs("fixtures-ids", 4));
    EXPECT_EQ(parse_txidset(format_txidset(ids)), ids);
}

TEST(Fixtures, ParseErrorsNameTheLine)
{
    try {
        parse_txset("00ff\nzz\n");
        FAIL() << "expected InvalidInput";
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_txset("abc\n"), InvalidInput);
    EXPECT_THROW(parse_txidset("00ff\n"), InvalidInput);
}

TEST(Fixtures, FileHelpers)
{
    const auto dir = std::filesystem::temp_directory_path() / "txilm_fixtures_test";
    std::filesystem::create_directories(dir);
    write_file(dir / "a.txt", "hello\n");
    EXPECT_EQ(read_file(dir / "a.txt"), "hello\n");
    const std::vector<uint8_t> bin{0, 1, 255};
    write_binary(dir / "b.bin", bin);
    EXPECT_EQ(read_binary(dir / "b.bin"), bin);
    EXPECT_THROW(read_file(dir / "missing"), InvalidInput);
    std::filesystem::remove_all(dir);
}
