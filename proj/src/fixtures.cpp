#include <txilm/fixtures.hpp>
#include <txilm/errors.hpp>
#include <txilm/hex.hpp>

#include <fstream>
#include <iterator>
#include <sstream>

namespace txilm {
namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        try {
            fn(line);
        } catch (const InvalidInput& e) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

} // namespace

std::vector<Transaction> parse_txset(std::string_view text)
{
    std::vector<Transaction> out;
    for_each_line(text, [&](std::string_view line) { out.emplace_back(from_hex(line)); });
    return out;
}

std::string format_txset(std::span<const Transaction> txs)
{
    std::string out;
    for (const auto& tx : txs) {
        out += to_hex(tx.payload());
        out += '\n';
    }
    return out;
}

std::vector<Txid> parse_txidset(std::string_view text)
{
    std::vector<Txid> out;
    for_each_line(text, [&](std::string_view line) { out.push_back(Txid::from_hex(line)); });
    return out;
}

std::string format_txidset(std::span<const Txid> txids)
{
    std::string out;
    for (const auto& id : txids) {
        out += id.to_hex();
        out += '\n';
    }
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<uint8_t> read_binary(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InvalidInput("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

void write_binary(const std::filesystem::path& path, std::span<const uint8_t> contents)
{
    write_file(path, std::string_view(reinterpret_cast<const char*>(contents.data()), contents.size()));
}

} // namespace txilm
