#pragma once

#include <cstdint>
#include <span>

namespace txilm {

/**
 * CRC-64/XZ: poly 0x42F0E1EBA9EA3693, init and xorout all-ones, reflected.
 * Check value for "123456789" is 0x995DC9BBDF1939FA.
 */
uint64_t crc64_xz(std::span<const uint8_t> data);

/** Continue a CRC-64/XZ over a second chunk; `crc` is a previous finalized result. */
uint64_t crc64_xz_update(uint64_t crc, std::span<const uint8_t> data);

/**
 * CRC-32/ISO-HDLC (the zlib/Ethernet CRC): poly 0x04C11DB7, init and xorout
 * all-ones, reflected. Check value for "123456789" is 0xCBF43926.
 */
uint32_t crc32_iso_hdlc(std::span<const uint8_t> data);

} // namespace txilm
