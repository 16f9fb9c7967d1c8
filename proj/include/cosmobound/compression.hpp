#pragma once

#include <cstdint>
#include <vector>

namespace cosmobound {

/// Identifier stamped on every complexity estimate. The exact stream format
/// and level are fixed so that equal inputs compress to equal outputs across
/// runs and platforms.
inline constexpr const char* kCompressorId = "zlib-deflate-9";

/// Deterministic lossless compression of a byte buffer (zlib stream, level 9).
std::vector<std::uint8_t> compress_bytes(const std::vector<std::uint8_t>& data);

/// Inverse of compress_bytes; expected_size is the original length.
std::vector<std::uint8_t> decompress_bytes(const std::vector<std::uint8_t>& data,
                                           std::size_t expected_size);

}  // namespace cosmobound
