#include "invlab/crc64.hpp"

#include <array>

namespace invlab {

namespace {

constexpr std::uint64_t kPoly = 0xC96C5795D7870F42ULL;  // reflected ECMA-182

std::array<std::uint64_t, 256> make_table() {
    std::array<std::uint64_t, 256> t{};
    for (std::uint64_t b = 0; b < 256; ++b) {
        std::uint64_t crc = b;
        for (int k = 0; k < 8; ++k)
            crc = (crc & 1) ? (crc >> 1) ^ kPoly : crc >> 1;
        t[b] = crc;
    }
    return t;
}

const std::array<std::uint64_t, 256>& table() {
    static const auto t = make_table();
    return t;
}

}  // namespace

std::uint64_t crc64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t crc = ~seed;
    for (std::size_t n = 0; n < len; ++n)
        crc = table()[(crc ^ p[n]) & 0xFF] ^ (crc >> 8);
    return ~crc;
}

std::string crc64_hex(std::uint64_t crc) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int k = 15; k >= 0; --k) {
        s[k] = digits[crc & 0xF];
        crc >>= 4;
    }
    return s;
}

}  // namespace invlab
