#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "terra/errors.hpp"

namespace terra {

/// Elevation value marking pixels where stereo correlation failed.
inline constexpr float kNodataSentinel = -32767.0f;

enum class Dtype : std::uint8_t {
    U8 = 0,   // 8-bit intensity
    F32 = 1,  // 32-bit float elevation (meters)
    Mask = 2, // boolean stored as u8, values 0/1
};

/// Single-channel 2-D raster, row-major. Intensity and mask grids share u8
/// storage and are told apart by dtype; masks hold only 0/1.
class Grid {
public:
    Grid() = default;

    static Grid intensity(int width, int height, std::uint8_t fill = 0);
    static Grid elevation(int width, int height, float fill = 0.0f);
    static Grid mask(int width, int height, std::uint8_t fill = 0);

    Dtype dtype() const { return dtype_; }
    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }
    bool empty() const { return pixel_count() == 0; }

    bool is_f32() const { return dtype_ == Dtype::F32; }
    bool is_mask() const { return dtype_ == Dtype::Mask; }

    std::span<float> f32();
    std::span<const float> f32() const;
    std::span<std::uint8_t> u8();
    std::span<const std::uint8_t> u8() const;

    float& fat(int x, int y) { return f_[idx(x, y)]; }
    float fat(int x, int y) const { return f_[idx(x, y)]; }
    std::uint8_t& uat(int x, int y) { return b_[idx(x, y)]; }
    std::uint8_t uat(int x, int y) const { return b_[idx(x, y)]; }

    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    bool operator==(const Grid& other) const;

private:
    Dtype dtype_ = Dtype::U8;
    int width_ = 0;
    int height_ = 0;
    std::vector<float> f_;
    std::vector<std::uint8_t> b_;
};

/// mask := a OR b, elementwise. Dimensions must match.
Grid mask_or(const Grid& a, const Grid& b);

/// Number of set pixels in a mask.
std::size_t mask_count(const Grid& mask);

/// Horizontal mirror (left-right flip), any dtype.
Grid hflip(const Grid& grid);

} // namespace terra
