#pragma once

#include <filesystem>

#include "terra/grid.hpp"

namespace terra {

// MGRD raster container, version 1. Little-endian throughout:
//   bytes 0..3   magic "MGRD"
//   bytes 4..5   version, u16  (= 1)
//   byte  6      dtype,   u8   (0 = u8, 1 = f32, 2 = bool-as-u8)
//   bytes 7..10  width,   u32
//   bytes 11..14 height,  u32
//   bytes 15..   row-major payload, f32 as IEEE-754 binary32
// The format is deliberately minimal so grids round-trip bit-exactly.

void grid_write(const Grid& grid, const std::filesystem::path& path);

Grid grid_read(const std::filesystem::path& path);

} // namespace terra
