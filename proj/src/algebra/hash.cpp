#include <codelab/error.hpp>
#include <codelab/hash.hpp>

#include <openssl/evp.h>

namespace codelab {

namespace {

Bytes digest(const uint8_t* data, size_t len)
{
    Bytes out(32);
    unsigned int outlen = 0;
    if (!EVP_Digest(data, len, out.data(), &outlen, EVP_sha256(), nullptr) || outlen != 32)
        fail(Errc::invalid_argument, "SHA-256 failed");
    return out;
}

}

Bytes sha256(const Bytes& data) { return digest(data.data(), data.size()); }

Bytes sha256(std::string_view data) { return digest(reinterpret_cast<const uint8_t*>(data.data()), data.size()); }

Bytes expand_hash(const Bytes& seed, size_t len)
{
    Bytes out;
    for (uint32_t ctr = 0; out.size() < len; ++ctr) {
        Bytes block = seed;
        for (int s = 24; s >= 0; s -= 8) block.push_back(uint8_t(ctr >> s));
        Bytes h = sha256(block);
        out.insert(out.end(), h.begin(), h.end());
    }
    out.resize(len);
    return out;
}

Bytes concat(const Bytes& a, const Bytes& b)
{
    Bytes r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}
