#include "invlab/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "invlab/crc64.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; big-endian hosts unsupported");

namespace invlab {

namespace {

constexpr char kMagic[4] = {'I', 'V', 'L', 'B'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kNameBytes = 16;

void append(std::string& buf, const void* p, std::size_t n) {
    buf.append(static_cast<const char*>(p), n);
}

template <class T>
void append_pod(std::string& buf, const T& v) {
    append(buf, &v, sizeof(T));
}

template <class T>
T read_pod(std::istream& in) {
    T v{};
    if (!in.read(reinterpret_cast<char*>(&v), sizeof(T)))
        throw std::runtime_error("snapshot: truncated file");
    return v;
}

}  // namespace

void save_snapshot(const std::string& path, const Snapshot& snap) {
    std::string buf;
    append(buf, kMagic, 4);
    append_pod(buf, kVersion);
    append_pod(buf, static_cast<std::uint8_t>(snap.kind));
    append_pod(buf, snap.nx);
    append_pod(buf, snap.ny);
    append_pod(buf, snap.lx);
    append_pod(buf, snap.ly);
    append_pod(buf, snap.nu);
    append_pod(buf, snap.t);
    append_pod(buf, static_cast<std::uint32_t>(snap.fields.size()));
    for (const auto& f : snap.fields) {
        if (f.name.size() >= kNameBytes)
            throw std::invalid_argument("snapshot: field name too long: " + f.name);
        if (f.data.size() != snap.field_size())
            throw std::invalid_argument("snapshot: field payload size mismatch: " + f.name);
        char name[kNameBytes] = {};
        std::memcpy(name, f.name.data(), f.name.size());
        append(buf, name, kNameBytes);
        append(buf, f.data.data(), f.data.size() * sizeof(double));
    }
    const std::uint64_t crc = crc64(buf.data(), buf.size());
    append_pod(buf, crc);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("snapshot: cannot open for writing: " + path);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("snapshot: write failed: " + path);
}

namespace {

Snapshot read_header(std::istream& in, const std::string& path) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    const auto version = read_pod<std::uint32_t>(in);
    if (version != kVersion)
        throw std::runtime_error("snapshot: unsupported version " + std::to_string(version));
    Snapshot s;
    s.kind = static_cast<Snapshot::GridKind>(read_pod<std::uint8_t>(in));
    s.nx = read_pod<std::uint32_t>(in);
    s.ny = read_pod<std::uint32_t>(in);
    s.lx = read_pod<double>(in);
    s.ly = read_pod<double>(in);
    s.nu = read_pod<double>(in);
    s.t = read_pod<double>(in);
    return s;
}

}  // namespace

Snapshot load_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open: " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 53 + sizeof(std::uint64_t))
        throw std::runtime_error("snapshot: truncated file: " + path);

    std::uint64_t stored;
    std::memcpy(&stored, buf.data() + buf.size() - 8, 8);
    if (crc64(buf.data(), buf.size() - 8) != stored)
        throw std::runtime_error("snapshot: checksum failure: " + path);

    std::istringstream ss(buf.substr(0, buf.size() - 8));
    Snapshot snap = read_header(ss, path);
    const auto count = read_pod<std::uint32_t>(ss);
    for (std::uint32_t n = 0; n < count; ++n) {
        char name[kNameBytes];
        if (!ss.read(name, kNameBytes))
            throw std::runtime_error("snapshot: truncated field table: " + path);
        Snapshot::Field f;
        f.name.assign(name, strnlen(name, kNameBytes));
        f.data.resize(snap.field_size());
        if (!ss.read(reinterpret_cast<char*>(f.data.data()),
                     static_cast<std::streamsize>(f.data.size() * sizeof(double))))
            throw std::runtime_error("snapshot: truncated payload: " + path);
        snap.fields.push_back(std::move(f));
    }
    return snap;
}

Snapshot inspect_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open: " + path);
    return read_header(in, path);
}

std::string snapshot_content_hash(const Snapshot& snap) {
    std::uint64_t crc = 0;
    for (const auto& f : snap.fields) {
        crc = crc64(f.name.data(), f.name.size(), crc);
        crc = crc64(f.data.data(), f.data.size() * sizeof(double), crc);
    }
    return crc64_hex(crc);
}

}  // namespace invlab
