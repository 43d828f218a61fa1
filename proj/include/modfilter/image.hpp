#ifndef MODFILTER_IMAGE_HPP
#define MODFILTER_IMAGE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modfilter {

/// One pixel as replicated RGB. Grayscale images present their single
/// channel in all three components so the color weight formula applies
/// unchanged.
struct Rgb {
    int r = 0;
    int g = 0;
    int b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// 8-bit raster image, 1 (gray) or 3 (RGB) channels, row-major storage.
/// Treated as a value type: all library operations take const references
/// and return fresh images.
class Image {
public:
    static constexpr int kMaxval = 255;

    Image(int width, int height, int channels, std::uint8_t fill = 0);
    Image(int width, int height, int channels, std::vector<std::uint8_t> data);

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }

    const std::vector<std::uint8_t>& data() const { return data_; }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    /// Raw channel value; no bounds checking beyond the debug assert in at().
    std::uint8_t value(int x, int y, int c) const {
        return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
    }

    /// Pixel as replicated RGB (grayscale replicates the single channel).
    /// Throws std::out_of_range on bad coordinates.
    Rgb pixel(int x, int y) const;

    /// Unchecked variant of pixel() for hot loops.
    Rgb pixel_unchecked(int x, int y) const {
        if (channels_ == 1) {
            const int g = value(x, y, 0);
            return {g, g, g};
        }
        return {value(x, y, 0), value(x, y, 1), value(x, y, 2)};
    }

    /// Stores a color; grayscale images keep the r component.
    void set_pixel(int x, int y, const Rgb& color);

    friend bool operator==(const Image&, const Image&) = default;

private:
    int width_;
    int height_;
    int channels_;
    std::vector<std::uint8_t> data_;
};

/// Per-pixel damage flags; ground truth from the injector, predictions
/// from the detector.
class DamageMask {
public:
    DamageMask(int width, int height, bool fill = false);

    int width() const { return width_; }
    int height() const { return height_; }

    bool at(int x, int y) const {
        return flags_[static_cast<std::size_t>(y) * width_ + x] != 0;
    }
    void set(int x, int y, bool damaged) {
        flags_[static_cast<std::size_t>(y) * width_ + x] = damaged ? 1 : 0;
    }

    std::size_t count() const;

    friend bool operator==(const DamageMask&, const DamageMask&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> flags_;
};

/// Malformed PNM header; the message names the byte offset.
struct PnmParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Valid PNM, but not a flavor this library supports (e.g. maxval != 255).
struct PnmUnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Payload size disagrees with the header dimensions.
struct PnmLengthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decodes binary PNM (P5 grayscale or P6 color, maxval 255). Header
/// comments ('#' to end of line) are accepted anywhere whitespace is.
Image load_pnm(std::span<const std::uint8_t> bytes);
Image load_pnm_file(const std::string& path);

/// Canonical encoding: "P5\n{w} {h}\n255\n" (or P6) + raw payload.
/// load_pnm(save_pnm(img)) == img for every valid image.
std::vector<std::uint8_t> save_pnm(const Image& image);
void save_pnm_file(const Image& image, const std::string& path);

/// Mask <-> P5 convention: 255 = damaged, 0 = clean. Any nonzero byte
/// reads back as damaged.
Image mask_to_image(const DamageMask& mask);
DamageMask image_to_mask(const Image& image);

} // namespace modfilter

#endif // MODFILTER_IMAGE_HPP
