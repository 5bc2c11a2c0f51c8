#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace txilm {

using Sha256Digest = std::array<uint8_t, 32>;

Sha256Digest sha256(std::span<const uint8_t> data);

/** SHA-256 of the concatenation a||b, without materializing it. */
Sha256Digest sha256(std::span<const uint8_t> a, std::span<const uint8_t> b);

} // namespace txilm
