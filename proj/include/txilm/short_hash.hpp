#pragma once

#include <txilm/core_types.hpp>

#include <cstdint>

namespace txilm {

/** Per-block salt and output width for the short hash. */
class SaltedHashParams {
public:
    /** Throws InvalidInput if bits is outside 1..=64. */
    SaltedHashParams(const Salt& salt, unsigned bits);

    const Salt& salt() const { return salt_; }
    unsigned bits() const { return bits_; }

private:
    Salt salt_;
    unsigned bits_;
};

/** Full 64-bit CRC-64/XZ over salt||txid; every k-bit short hash truncates it. */
uint64_t salted_digest64(const Salt& salt, const Txid& txid);

/** Keeps the low `bits` bits. */
constexpr uint64_t truncate_bits(uint64_t value, unsigned bits)
{
    return bits >= 64 ? value : value & ((uint64_t{1} << bits) - 1);
}

ShortHash shorthash(const SaltedHashParams& params, const Txid& txid);

/** shorthash with a zero salt. */
ShortHash unsalted_shorthash(const Txid& txid, unsigned bits);

} // namespace txilm
