#include "modfilter/image.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace modfilter {

namespace {

void check_dims(int width, int height, int channels) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("Image: dimensions must be positive");
    if (channels != 1 && channels != 3)
        throw std::invalid_argument("Image: channels must be 1 or 3");
}

} // namespace

Image::Image(int width, int height, int channels, std::uint8_t fill)
    : width_(width), height_(height), channels_(channels) {
    check_dims(width, height, channels);
    data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

Image::Image(int width, int height, int channels, std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
    check_dims(width, height, channels);
    const std::size_t expected = static_cast<std::size_t>(width) * height * channels;
    if (data_.size() != expected)
        throw std::invalid_argument("Image: data length does not match dimensions");
}

Rgb Image::pixel(int x, int y) const {
    if (!in_bounds(x, y)) throw std::out_of_range("Image::pixel: coordinates out of range");
    return pixel_unchecked(x, y);
}

void Image::set_pixel(int x, int y, const Rgb& color) {
    if (!in_bounds(x, y)) throw std::out_of_range("Image::set_pixel: coordinates out of range");
    const std::size_t base = (static_cast<std::size_t>(y) * width_ + x) * channels_;
    if (channels_ == 1) {
        data_[base] = static_cast<std::uint8_t>(color.r);
    } else {
        data_[base] = static_cast<std::uint8_t>(color.r);
        data_[base + 1] = static_cast<std::uint8_t>(color.g);
        data_[base + 2] = static_cast<std::uint8_t>(color.b);
    }
}

DamageMask::DamageMask(int width, int height, bool fill) : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("DamageMask: dimensions must be positive");
    flags_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

std::size_t DamageMask::count() const {
    return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

namespace {

// Header token scanner; tracks the absolute byte offset so parse errors
// can name it.
class HeaderScanner {
public:
    HeaderScanner(std::span<const std::uint8_t> bytes, std::size_t start)
        : bytes_(bytes), pos_(start) {}

    [[noreturn]] void fail(const std::string& what) const {
        char buf[160];
        std::snprintf(buf, sizeof buf, "PNM parse error at byte %zu: %s", pos_, what.c_str());
        throw PnmParseError(buf);
    }

    // Whitespace and '#'-to-newline comments separate header tokens.
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            const std::uint8_t c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (is_space(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long read_number(const char* name) {
        skip_separators();
        if (pos_ >= bytes_.size()) fail(std::string("unexpected end of header reading ") + name);
        if (!is_digit(bytes_[pos_])) fail(std::string("expected digit for ") + name);
        long value = 0;
        while (pos_ < bytes_.size() && is_digit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000'000L) fail(std::string(name) + " out of range");
            ++pos_;
        }
        return value;
    }

    // The maxval token is followed by exactly one whitespace byte, then
    // the raw payload begins.
    void consume_payload_separator() {
        if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
            fail("expected single whitespace before payload");
        ++pos_;
    }

    std::size_t offset() const { return pos_; }

private:
    static bool is_space(std::uint8_t c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    }
    static bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_;
};

} // namespace

Image load_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2) HeaderScanner(bytes, 0).fail("missing magic");
    int channels = 0;
    if (bytes[0] == 'P' && bytes[1] == '5') channels = 1;
    else if (bytes[0] == 'P' && bytes[1] == '6') channels = 3;
    else HeaderScanner(bytes, 0).fail("magic is not P5 or P6");

    HeaderScanner scan(bytes, 2);
    const long width = scan.read_number("width");
    const long height = scan.read_number("height");
    const long maxval = scan.read_number("maxval");
    if (width <= 0 || height <= 0) scan.fail("non-positive dimensions");
    if (maxval != Image::kMaxval)
        throw PnmUnsupportedError("PNM maxval " + std::to_string(maxval) +
                                  " not supported (only 255)");
    scan.consume_payload_separator();

    const std::size_t payload_start = scan.offset();
    const std::size_t expected =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
    const std::size_t available = bytes.size() - payload_start;
    if (available != expected)
        throw PnmLengthError("PNM payload is " + std::to_string(available) +
                             " bytes, header needs " + std::to_string(expected));

    std::vector<std::uint8_t> data(bytes.begin() + static_cast<std::ptrdiff_t>(payload_start),
                                   bytes.end());
    return Image(static_cast<int>(width), static_cast<int>(height), channels, std::move(data));
}

Image load_pnm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return load_pnm(bytes);
}

std::vector<std::uint8_t> save_pnm(const Image& image) {
    char header[64];
    const int n = std::snprintf(header, sizeof header, "P%c\n%d %d\n255\n",
                                image.channels() == 1 ? '5' : '6', image.width(), image.height());
    std::vector<std::uint8_t> out(header, header + n);
    out.insert(out.end(), image.data().begin(), image.data().end());
    return out;
}

void save_pnm_file(const Image& image, const std::string& path) {
    const std::vector<std::uint8_t> bytes = save_pnm(image);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("failed writing " + path);
}

Image mask_to_image(const DamageMask& mask) {
    Image out(mask.width(), mask.height(), 1);
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            out.set_pixel(x, y, mask.at(x, y) ? Rgb{255, 255, 255} : Rgb{0, 0, 0});
    return out;
}

DamageMask image_to_mask(const Image& image) {
    if (image.channels() != 1)
        throw std::invalid_argument("image_to_mask: mask images must be grayscale");
    DamageMask mask(image.width(), image.height());
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            mask.set(x, y, image.value(x, y, 0) != 0);
    return mask;
}

} // namespace modfilter
