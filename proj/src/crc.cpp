#include <txilm/crc.hpp>

#include <array>

namespace txilm {
namespace {

// Reflected forms of the generator polynomials.
constexpr uint64_t kCrc64Reflected = 0xC96C5795D7870F42ULL;
constexpr uint32_t kCrc32Reflected = 0xEDB88320U;

template <typename T, T Poly>
constexpr std::array<T, 256> make_table()
{
    std::array<T, 256> table{};
    for (unsigned i = 0; i < 256; ++i) {
        T crc = i;
        for (int bit = 0; bit < 8; ++bit)
            crc = (crc & 1) ? (crc >> 1) ^ Poly : crc >> 1;
        table[i] = crc;
    }
    return table;
}

constexpr auto kTable64 = make_table<uint64_t, kCrc64Reflected>();
constexpr auto kTable32 = make_table<uint32_t, kCrc32Reflected>();

} // namespace

uint64_t crc64_xz_update(uint64_t crc, std::span<const uint8_t> data)
{
    crc = ~crc;
    for (uint8_t byte : data)
        crc = kTable64[(crc ^ byte) & 0xff] ^ (crc >> 8);
    return ~crc;
}

uint64_t crc64_xz(std::span<const uint8_t> data)
{
    return crc64_xz_update(0, data);
}

uint32_t crc32_iso_hdlc(std::span<const uint8_t> data)
{
    uint32_t crc = 0xFFFFFFFFU;
    for (uint8_t byte : data)
        crc = kTable32[(crc ^ byte) & 0xff] ^ (crc >> 8);
    return ~crc;
}

} // namespace txilm
