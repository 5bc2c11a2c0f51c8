#pragma once

#include <txilm/core_types.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace txilm {

// "txset": one hex-encoded payload per line. "txidset": one 64-hex txid per
// line. Blank lines are skipped; output is lowercase hex with '\n' endings.

std::vector<Transaction> parse_txset(std::string_view text);
std::string format_txset(std::span<const Transaction> txs);

std::vector<Txid> parse_txidset(std::string_view text);
std::string format_txidset(std::span<const Txid> txids);

/** Whole-file helpers; throw InvalidInput when the file cannot be opened. */
std::string read_file(const std::filesystem::path& path);
std::vector<uint8_t> read_binary(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);
void write_binary(const std::filesystem::path& path, std::span<const uint8_t> contents);

} // namespace txilm
