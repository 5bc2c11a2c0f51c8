#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace txilm {

std::string to_hex(std::span<const uint8_t> bytes);

/** Parses an even-length hex string (either case). Throws InvalidInput. */
std::vector<uint8_t> from_hex(std::string_view hex);

} // namespace txilm
