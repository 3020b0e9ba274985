#include "sbtc/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

namespace sbtc {

namespace {

class PnmCursor {
 public:
  explicit PnmCursor(std::span<const std::uint8_t> b) : bytes_(b) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint32_t read_uint(const char* what) {
    skip_space_and_comments();
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 0xFFFFFFFFu) throw IoError(std::string("PNM ") + what + " too large");
    }
    if (pos_ == start) throw IoError(std::string("PNM header: missing ") + what);
    return static_cast<std::uint32_t>(v);
  }

  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> pnm(const RgbImage& image, bool gray) {
  const std::string header = std::string(gray ? "P5" : "P6") + "\n" +
                             std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (gray) {
    const auto& r = image.plane(Channel::R);
    out.insert(out.end(), r.begin(), r.end());
  } else {
    const auto rgb = image.to_interleaved();
    out.insert(out.end(), rgb.begin(), rgb.end());
  }
  return out;
}

bool has_png_signature(std::span<const std::uint8_t> b) {
  return b.size() >= 8 && png_sig_cmp(b.data(), 0, 8) == 0;
}

}  // namespace

RgbImage parse_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '6' && bytes[1] != '5')) {
    throw IoError("not a binary PPM/PGM (P6/P5) file");
  }
  const bool gray = bytes[1] == '5';
  PnmCursor cur(bytes.subspan(2));
  const std::uint32_t width = cur.read_uint("width");
  const std::uint32_t height = cur.read_uint("height");
  const std::uint32_t maxval = cur.read_uint("maxval");
  if (maxval != 255) {
    throw IoError("unsupported PNM maxval " + std::to_string(maxval) + " (need 255)");
  }
  if (width == 0 || height == 0) throw IoError("PNM image has zero size");
  // Exactly one whitespace byte separates the header from the raster.
  const std::size_t raster = 2 + cur.pos() + 1;
  const std::uint64_t need = std::uint64_t{width} * height * (gray ? 1 : 3);
  if (raster > bytes.size() || bytes.size() - raster < need) {
    throw IoError("PNM raster truncated: need " + std::to_string(need) + " bytes");
  }
  const auto data = bytes.subspan(raster, need);
  if (!gray) return RgbImage::from_interleaved(width, height, data);
  std::vector<std::uint8_t> g(data.begin(), data.end());
  return RgbImage(width, height, g, g, g);
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& image) { return pnm(image, false); }
std::vector<std::uint8_t> encode_pgm(const RgbImage& image) { return pnm(image, true); }

RgbImage parse_png(std::span<const std::uint8_t> bytes) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
    throw IoError(std::string("PNG decode failed: ") + img.message);
  }
  img.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, rgb.data(), 0, nullptr)) {
    const std::string msg = img.message;
    png_image_free(&img);
    throw IoError("PNG decode failed: " + msg);
  }
  return RgbImage::from_interleaved(img.width, img.height, rgb);
}

std::vector<std::uint8_t> encode_png(const RgbImage& image, bool gray) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  img.width = image.width();
  img.height = image.height();
  img.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  const std::vector<std::uint8_t> pixels =
      gray ? image.plane(Channel::R) : image.to_interleaved();

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&img, nullptr, &size, 0, pixels.data(), 0, nullptr)) {
    throw IoError(std::string("PNG encode failed: ") + img.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&img, out.data(), &size, 0, pixels.data(), 0, nullptr)) {
    throw IoError(std::string("PNG encode failed: ") + img.message);
  }
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::random_device rd;
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create '" + tmp.string() + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed for '" + path.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

RgbImage read_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  if (has_png_signature(bytes)) return parse_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '6' || bytes[1] == '5')) {
    return parse_pnm(bytes);
  }
  throw IoError("'" + path.string() + "': unsupported image format (need PPM P6, PGM P5 or PNG)");
}

void write_image(const std::filesystem::path& path, const RgbImage& image, bool gray) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".png") {
    write_file_atomic(path, encode_png(image, gray));
  } else {
    write_file_atomic(path, gray ? encode_pgm(image) : encode_ppm(image));
  }
}

}  // namespace sbtc
