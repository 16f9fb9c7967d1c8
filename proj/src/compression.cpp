#include "cosmobound/compression.hpp"

#include <zlib.h>

#include <stdexcept>

#include "cosmobound/errors.hpp"

namespace cosmobound {

std::vector<std::uint8_t> compress_bytes(const std::vector<std::uint8_t>& data) {
    uLongf cap = compressBound(static_cast<uLong>(data.size()));
    std::vector<std::uint8_t> out(cap);
    const int rc = compress2(out.data(), &cap, data.data(),
                             static_cast<uLong>(data.size()), 9);
    if (rc != Z_OK)
        throw Error("compression failed with zlib status " + std::to_string(rc));
    out.resize(cap);
    return out;
}

std::vector<std::uint8_t> decompress_bytes(const std::vector<std::uint8_t>& data,
                                           std::size_t expected_size) {
    std::vector<std::uint8_t> out(expected_size);
    uLongf size = static_cast<uLongf>(expected_size);
    const int rc = uncompress(out.data(), &size, data.data(),
                              static_cast<uLong>(data.size()));
    if (rc != Z_OK)
        throw Error("decompression failed with zlib status " + std::to_string(rc));
    out.resize(size);
    return out;
}

}  // namespace cosmobound
