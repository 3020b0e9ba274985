#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <variant>

#include "sbtc/bitstream.hpp"
#include "sbtc/btc_gray.hpp"
#include "sbtc/codec.hpp"
#include "sbtc/image_io.hpp"
#include "sbtc/metrics.hpp"
#include "sbtc/parallel.hpp"
#include "sbtc/refine.hpp"
#include "sbtc/wplane.hpp"

namespace py = pybind11;
using namespace sbtc;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

// HxWx3 (or HxW gray) uint8 array -> image.
RgbImage to_image(const U8Array& a) {
  if (a.ndim() == 2) {
    const auto h = static_cast<std::uint32_t>(a.shape(0));
    const auto w = static_cast<std::uint32_t>(a.shape(1));
    std::vector<std::uint8_t> v(a.data(), a.data() + a.size());
    return RgbImage(w, h, v, v, v);
  }
  if (a.ndim() != 3 || a.shape(2) != 3) {
    throw InvalidInput("expected an HxWx3 or HxW uint8 array");
  }
  return RgbImage::from_interleaved(static_cast<std::uint32_t>(a.shape(1)),
                                    static_cast<std::uint32_t>(a.shape(0)),
                                    std::span(a.data(), static_cast<std::size_t>(a.size())));
}

U8Array to_array(const RgbImage& img) {
  U8Array out({static_cast<py::ssize_t>(img.height()), static_cast<py::ssize_t>(img.width()),
               py::ssize_t{3}});
  const auto rgb = img.to_interleaved();
  std::copy(rgb.begin(), rgb.end(), out.mutable_data());
  return out;
}

Block to_block(const U8Array& a) {
  if (a.ndim() != 3 || a.shape(2) != 3) throw InvalidInput("expected an MxNx3 uint8 block");
  Block b;
  b.pixels = PixelGrid(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
  for (std::size_t k = 0; k < b.pixels.size(); ++k) {
    b.pixels[k] = {a.data()[3 * k], a.data()[3 * k + 1], a.data()[3 * k + 2]};
  }
  return b;
}

Bitmap to_bitmap(const U8Array& a) {
  if (a.ndim() != 2) throw InvalidInput("expected a 2-D bitmap");
  Bitmap m(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = a.data()[k] ? 1 : 0;
  return m;
}

U8Array from_bitmap(const Bitmap& m) {
  U8Array out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  std::copy(m.begin(), m.end(), out.mutable_data());
  return out;
}

py::tuple quant_tuple(const QuantPair& q) {
  return py::make_tuple(q.r_high, q.r_low, q.g_high, q.g_low, q.b_high, q.b_low);
}

QuantPair to_quant(const std::array<double, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

BlockShape to_shape(const std::variant<std::string, std::pair<int, int>, int>& block) {
  if (const auto* s = std::get_if<std::string>(&block)) return parse_block_shape(*s);
  if (const auto* p = std::get_if<std::pair<int, int>>(&block)) return {p->first, p->second};
  const int n = std::get<int>(block);
  return {n, n};
}

std::span<const std::uint8_t> byte_span(const py::bytes& data) {
  char* buffer = nullptr;
  py::ssize_t length = 0;
  PYBIND11_BYTES_AS_STRING_AND_SIZE(data.ptr(), &buffer, &length);
  return {reinterpret_cast<const std::uint8_t*>(buffer), static_cast<std::size_t>(length)};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

}  // namespace

PYBIND11_MODULE(_sbtc, m) {
  m.doc() = "Single-bitmap block truncation coding for color images";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def(
      "encode",
      [](const U8Array& image, const std::variant<std::string, std::pair<int, int>, int>& block,
         const std::string& scheme, std::optional<std::size_t> threads, bool iterate) {
        EncodeOptions opt;
        opt.block = to_shape(block);
        opt.scheme = parse_scheme(scheme);
        opt.threads = threads;
        opt.iterate = iterate;
        const RgbImage img = to_image(image);
        std::vector<std::uint8_t> out;
        {
          py::gil_scoped_release release;
          out = serialize(encode_image(img, opt));
        }
        return to_bytes(out);
      },
      py::arg("image"), py::arg("block") = "4x4", py::arg("scheme") = "proposed",
      py::arg("threads") = py::none(), py::arg("iterate") = false,
      "Encode an HxWx3 uint8 array to .sbtc bytes.");

  m.def(
      "decode",
      [](const py::bytes& data) {
        const EncodedImage e = deserialize(byte_span(data));
        return to_array(decode_image(e));
      },
      py::arg("data"), "Decode .sbtc bytes to an HxWx3 uint8 array.");

  m.def(
      "header",
      [](const py::bytes& data) {
        const StreamHeader h = deserialize(byte_span(data)).header;
        py::dict d;
        d["scheme"] = std::string(scheme_name(h.mode));
        d["width"] = h.width;
        d["height"] = h.height;
        d["block"] = py::make_tuple(h.block_rows, h.block_cols);
        return d;
      },
      py::arg("data"));

  m.def(
      "encoded_size",
      [](std::uint32_t width, std::uint32_t height,
         const std::variant<std::string, std::pair<int, int>, int>& block,
         const std::string& scheme) {
        const BlockShape s = to_shape(block);
        return encoded_size({parse_scheme(scheme), width, height,
                             static_cast<std::uint8_t>(s.rows), static_cast<std::uint8_t>(s.cols)});
      },
      py::arg("width"), py::arg("height"), py::arg("block") = "4x4",
      py::arg("scheme") = "proposed");

  m.def(
      "color_mse",
      [](const U8Array& a, const U8Array& b) { return color_mse(to_image(a), to_image(b)); },
      py::arg("original"), py::arg("reconstructed"));
  m.def(
      "saturated_mse",
      [](const U8Array& a, const U8Array& b) { return saturated_mse(to_image(a), to_image(b)); },
      py::arg("original"), py::arg("reconstructed"));
  m.def(
      "ssim",
      [](const U8Array& a, const U8Array& b, bool global) {
        return ssim(to_image(a), to_image(b), global ? SsimMode::Global : SsimMode::Windowed);
      },
      py::arg("original"), py::arg("reconstructed"), py::arg("global_window") = false);

  m.def(
      "encode_gray_block",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& block) {
        if (block.ndim() != 2) throw InvalidInput("expected a 2-D block");
        SampleGrid g(static_cast<int>(block.shape(0)), static_cast<int>(block.shape(1)),
                     std::vector<double>(block.data(), block.data() + block.size()));
        const GrayBlockCode c = encode_gray_block(g);
        return py::make_tuple(from_bitmap(c.bitmap), c.mean, c.high, c.low);
      },
      py::arg("block"), "Returns (bitmap, mean, high, low).");

  m.def(
      "initial_bitmap", [](const U8Array& block) { return from_bitmap(initial_bitmap(to_block(block))); },
      py::arg("block"));
  m.def(
      "quantize_channels",
      [](const U8Array& block, const U8Array& bitmap) {
        return quant_tuple(quantize_channels(to_block(block), to_bitmap(bitmap)));
      },
      py::arg("block"), py::arg("bitmap"),
      "Returns (r_high, r_low, g_high, g_low, b_high, b_low).");
  m.def(
      "refine_bitmap",
      [](const U8Array& block, const U8Array& bitmap, const std::array<double, 6>& quant) {
        const RefineResult r = refine_bitmap(to_block(block), to_bitmap(bitmap), to_quant(quant));
        return py::make_tuple(from_bitmap(r.final_bitmap), r.initial_cost, r.final_cost, r.flips);
      },
      py::arg("block"), py::arg("bitmap"), py::arg("quant"),
      "Returns (final_bitmap, initial_cost, final_cost, flips).");

  m.def(
      "plan",
      [](std::size_t blocks, std::size_t workers) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const Chunk& c : plan(blocks, workers).chunks) out.emplace_back(c.begin, c.end);
        return out;
      },
      py::arg("blocks"), py::arg("workers"), "Contiguous [begin, end) chunk per worker.");

  m.def(
      "read_image", [](const std::filesystem::path& p) { return to_array(read_image(p)); },
      py::arg("path"));
  m.def(
      "write_image",
      [](const std::filesystem::path& p, const U8Array& image) { write_image(p, to_image(image)); },
      py::arg("path"), py::arg("image"));
}
