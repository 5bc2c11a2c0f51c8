#include <txilm/sha256.hpp>

// The one-shot and EVP entry points carry per-call setup that dominates for
// the short messages hashed here; the legacy context API does not.
#define OPENSSL_SUPPRESS_DEPRECATED
#include <openssl/sha.h>

namespace txilm {

Sha256Digest sha256(std::span<const uint8_t> data)
{
    Sha256Digest out;
    SHA256_CTX ctx;
    SHA256_Init(&ctx);
    SHA256_Update(&ctx, data.data(), data.size());
    SHA256_Final(out.data(), &ctx);
    return out;
}

Sha256Digest sha256(std::span<const uint8_t> a, std::span<const uint8_t> b)
{
    Sha256Digest out;
    SHA256_CTX ctx;
    SHA256_Init(&ctx);
    SHA256_Update(&ctx, a.data(), a.size());
    SHA256_Update(&ctx, b.data(), b.size());
    SHA256_Final(out.data(), &ctx);
    return out;
}

} // namespace txilm
