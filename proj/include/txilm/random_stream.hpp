#pragma once

#include <txilm/sha256.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace txilm {

using Seed = std::array<uint8_t, 32>;

/** Parses exactly 64 hex characters. Throws InvalidInput. */
Seed seed_from_hex(std::string_view hex);

/** Derives an independent child seed: SHA-256(seed || label || index_le64). */
Seed derive_seed(const Seed& seed, std::string_view label, uint64_t index = 0);

/**
 * Counter-mode byte stream. Block c of stream s is
 * SHA-256(seed || s as u64 LE || c as u64 LE); bytes are consumed block by
 * block in order. Identical (seed, stream) pairs give identical bytes on
 * every platform.
 */
class DeterministicStream {
public:
    DeterministicStream(const Seed& seed, uint64_t stream_index);

    /** The next whole 32-byte block; discards any partially consumed block. */
    Sha256Digest next_block();

    void fill(std::span<uint8_t> out);
    std::vector<uint8_t> bytes(std::size_t count);

    uint64_t next_u64();

    /** Uniform in [0, bound) by rejection; bound must be >= 1. */
    uint64_t uniform(uint64_t bound);

    /** Uniform in [0, 1) with 53 bits of resolution. */
    double unit();

private:
    void refill();

    std::array<uint8_t, 48> message_;
    uint64_t counter_ = 0;
    Sha256Digest block_{};
    std::size_t used_ = block_.size();
};

} // namespace txilm
