#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace invlab {

/// CRC-64/XZ (reflected, poly 0xC96C5795D7870F42, init/xorout ~0).
/// Used for snapshot integrity and as the content hash in reports.
std::uint64_t crc64(const void* data, std::size_t len, std::uint64_t seed = 0);

std::string crc64_hex(std::uint64_t crc);

}  // namespace invlab
