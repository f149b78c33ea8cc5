#include "gcrop/io/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace gcrop::io {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Whitespace and '#' comments separate header tokens.
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            const char c = static_cast<char>(bytes_[pos_]);
            if (c == '#') {
                while (pos_ < bytes_.size() && static_cast<char>(bytes_[pos_]) != '\n')
                    ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int read_int(const char* what) {
        skip_separators();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_]))
            throw std::runtime_error(std::string("ppm: missing ") + what);
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1 << 24) throw std::runtime_error("ppm: header value too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    // The maxval is terminated by exactly one whitespace byte.
    void consume_single_separator() {
        if (pos_ >= bytes_.size())
            throw std::runtime_error("ppm: truncated header");
        const char c = static_cast<char>(bytes_[pos_]);
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n')
            throw std::runtime_error("ppm: malformed header");
        ++pos_;
    }

    std::size_t pos() const { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

Image load_ppm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2)
        throw std::runtime_error("ppm: file too short");
    if (bytes[0] != 'P' || bytes[1] != '6') {
        const std::string magic{static_cast<char>(bytes[0]), static_cast<char>(bytes[1])};
        throw std::runtime_error("ppm: unsupported magic '" + magic + "' (want P6)");
    }

    HeaderReader header(bytes.subspan(2));
    const int width = header.read_int("width");
    const int height = header.read_int("height");
    const int maxval = header.read_int("maxval");
    if (width < 1 || height < 1)
        throw std::runtime_error("ppm: non-positive dimensions");
    if (maxval != 255)
        throw std::runtime_error("ppm: unsupported maxval " + std::to_string(maxval));
    header.consume_single_separator();

    const std::size_t offset = 2 + header.pos();
    const std::size_t expected =
        static_cast<std::size_t>(width) * height * 3;
    if (bytes.size() - offset < expected)
        throw std::runtime_error("ppm: truncated pixel payload");
    if (bytes.size() - offset > expected)
        throw std::runtime_error("ppm: trailing bytes after pixel payload");

    Image img = Image::filled({width, height}, 3);
    for (std::size_t i = 0; i < expected; ++i)
        img.pixels[i] = bytes[offset + i] / 255.0;
    return img;
}

std::vector<std::uint8_t> save_ppm(const Image& image) {
    if (image.channels != 1 && image.channels != 3)
        throw std::runtime_error("ppm: unsupported channel count");
    const std::string header = "P6\n" + std::to_string(image.dims.width) + " " +
                               std::to_string(image.dims.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() +
                static_cast<std::size_t>(image.dims.width) * image.dims.height * 3);
    const auto to_byte = [](double v) {
        return static_cast<std::uint8_t>(
            std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
    };
    const std::size_t n =
        static_cast<std::size_t>(image.dims.width) * image.dims.height;
    for (std::size_t p = 0; p < n; ++p) {
        if (image.channels == 3) {
            out.push_back(to_byte(image.pixels[p * 3]));
            out.push_back(to_byte(image.pixels[p * 3 + 1]));
            out.push_back(to_byte(image.pixels[p * 3 + 2]));
        } else {
            const std::uint8_t g = to_byte(image.pixels[p]);
            out.push_back(g);
            out.push_back(g);
            out.push_back(g);
        }
    }
    return out;
}

Image load_ppm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("ppm: cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return load_ppm(bytes);
}

void save_ppm_file(const Image& image, const std::filesystem::path& path) {
    const auto bytes = save_ppm(image);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("ppm: cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

}  // namespace gcrop::io
