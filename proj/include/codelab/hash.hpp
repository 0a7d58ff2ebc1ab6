#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace codelab {

using Bytes = std::vector<uint8_t>;

Bytes sha256(const Bytes& data);
Bytes sha256(std::string_view data);
// SHA-256(seed || be32 counter) blocks, truncated to len bytes
Bytes expand_hash(const Bytes& seed, size_t len);
Bytes concat(const Bytes& a, const Bytes& b);

}
