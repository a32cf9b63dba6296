#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace mvs {

// Dense row-major H x W x C buffer. Pixel (x, y) with x in [0, w), y in [0, h);
// y advances downward, matching image file order.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, int channels, T fill = T{})
        : width_(width), height_(height), channels_(channels),
          data_(static_cast<size_t>(width) * height * channels, fill) {
        assert(width >= 0 && height >= 0 && channels >= 1);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    bool empty() const { return data_.empty(); }
    size_t size() const { return data_.size(); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    T& operator()(int x, int y, int c = 0) {
        assert(in_bounds(x, y) && c >= 0 && c < channels_);
        return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
    }
    const T& operator()(int x, int y, int c = 0) const {
        assert(in_bounds(x, y) && c >= 0 && c < channels_);
        return data_[(static_cast<size_t>(y) * width_ + x) * channels_ + c];
    }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::span<const T> values() const { return data_; }
    std::span<T> values() { return data_; }

    void fill(T v) { data_.assign(data_.size(), v); }

    bool same_shape(const Grid& o) const {
        return width_ == o.width_ && height_ == o.height_ && channels_ == o.channels_;
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ &&
               a.channels_ == b.channels_ && a.data_ == b.data_;
    }

private:
    int width_ = 0, height_ = 0, channels_ = 1;
    std::vector<T> data_;
};

using GridF = Grid<float>;
using GridD = Grid<double>;
using GridI = Grid<int32_t>;
using MaskU8 = Grid<uint8_t>;  // binary: 0 or 1
using ImageF = Grid<float>;    // color, 3 channels, values in [0, 1]

inline size_t count_nonzero(const MaskU8& m) {
    size_t n = 0;
    for (uint8_t v : m.values()) n += (v != 0);
    return n;
}

}  // namespace mvs
