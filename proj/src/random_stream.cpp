#include <txilm/random_stream.hpp>
#include <txilm/errors.hpp>
#include <txilm/hex.hpp>

#include <algorithm>
#include <cstring>

namespace txilm {
namespace {

void put_le64(uint8_t* out, uint64_t v)
{
    for (int i = 0; i < 8; ++i)
        out[i] = static_cast<uint8_t>(v >> (8 * i));
}

} // namespace

Seed seed_from_hex(std::string_view hex)
{
    if (hex.size() != 64)
        throw InvalidInput("seed must be 64 hex characters");
    const auto raw = from_hex(hex);
    Seed seed;
    std::copy(raw.begin(), raw.end(), seed.begin());
    return seed;
}

Seed derive_seed(const Seed& seed, std::string_view label, uint64_t index)
{
    std::vector<uint8_t> msg(seed.begin(), seed.end());
    msg.insert(msg.end(), label.begin(), label.end());
    uint8_t le[8];
    put_le64(le, index);
    msg.insert(msg.end(), le, le + 8);
    return sha256(msg);
}

DeterministicStream::DeterministicStream(const Seed& seed, uint64_t stream_index)
{
    std::memcpy(message_.data(), seed.data(), seed.size());
    put_le64(message_.data() + 32, stream_index);
}

void DeterministicStream::refill()
{
    put_le64(message_.data() + 40, counter_++);
    block_ = sha256(message_);
    used_ = 0;
}

Sha256Digest DeterministicStream::next_block()
{
    refill();
    used_ = block_.size();
    return block_;
}

void DeterministicStream::fill(std::span<uint8_t> out)
{
    std::size_t pos = 0;
    while (pos < out.size()) {
        if (used_ == block_.size())
            refill();
        const std::size_t take = std::min(out.size() - pos, block_.size() - used_);
        std::memcpy(out.data() + pos, block_.data() + used_, take);
        used_ += take;
        pos += take;
    }
}

std::vector<uint8_t> DeterministicStream::bytes(std::size_t count)
{
    std::vector<uint8_t> out(count);
    fill(out);
    return out;
}

uint64_t DeterministicStream::next_u64()
{
    uint8_t raw[8];
    fill(raw);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | raw[i];
    return v;
}

uint64_t DeterministicStream::uniform(uint64_t bound)
{
    if (bound == 0)
        throw InvalidInput("uniform bound must be >= 1");
    // Reject the tail that would bias the modulo.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

double DeterministicStream::unit()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

} // namespace txilm
