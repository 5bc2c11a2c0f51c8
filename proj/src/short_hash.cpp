#include <txilm/short_hash.hpp>
#include <txilm/crc.hpp>

namespace txilm {

SaltedHashParams::SaltedHashParams(const Salt& salt, unsigned bits) : salt_(salt), bits_(bits)
{
    check_hash_bits(bits);
}

uint64_t salted_digest64(const Salt& salt, const Txid& txid)
{
    return crc64_xz_update(crc64_xz(salt), txid.span());
}

ShortHash shorthash(const SaltedHashParams& params, const Txid& txid)
{
    return ShortHash(params.bits(), truncate_bits(salted_digest64(params.salt(), txid), params.bits()));
}

ShortHash unsalted_shorthash(const Txid& txid, unsigned bits)
{
    return shorthash(SaltedHashParams(Salt{}, bits), txid);
}

} // namespace txilm
