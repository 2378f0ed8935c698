#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invlab {

/// On-disk state format: magic "IVLB", u32 version=1, u8 grid-kind,
/// u32 nx, u32 ny, f64 lx, ly, nu, t, u32 field-count, then per field a
/// 16-byte zero-padded name and a row-major f64 little-endian payload,
/// closed by a CRC64 of all preceding bytes. The header is fixed-offset so
/// `inspect` never touches the payload.
struct Snapshot {
    enum class GridKind : std::uint8_t { torus = 0, channel = 1 };

    struct Field {
        std::string name;  ///< at most 15 bytes
        std::vector<double> data;
    };

    GridKind kind = GridKind::torus;
    std::uint32_t nx = 0;
    std::uint32_t ny = 0;  ///< channel: number of wall-normal intervals (ny+1 nodes)
    double lx = 0.0, ly = 0.0;
    double nu = 0.0, t = 0.0;
    std::vector<Field> fields;

    /// Node count per field payload.
    std::size_t field_size() const {
        return kind == GridKind::torus
                   ? static_cast<std::size_t>(nx) * ny
                   : static_cast<std::size_t>(nx) * (ny + 1);
    }
};

void save_snapshot(const std::string& path, const Snapshot& snap);

/// Full load with checksum verification; throws std::runtime_error on
/// magic/version mismatch, truncation, or checksum failure.
Snapshot load_snapshot(const std::string& path);

/// Header-only load (fields left empty); payload is not read.
Snapshot inspect_snapshot(const std::string& path);

/// Content hash (CRC64 hex) of a snapshot's payload, for report rows.
std::string snapshot_content_hash(const Snapshot& snap);

}  // namespace invlab
