#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sbtc/codec.hpp"
#include "sbtc/image_io.hpp"
#include "sbtc/metrics.hpp"
#include "sbtc/parallel.hpp"
#include "sbtc/reference.hpp"

namespace sbtc::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kMaxBlockArea = 4096;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

BlockShape checked_block(const std::string& text) {
  BlockShape shape;
  try {
    shape = parse_block_shape(text);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  if (shape.rows > 255 || shape.cols > 255 || shape.area() > kMaxBlockArea) {
    throw UsageError("unsupported block size " + text + " (m, n <= 255 and m*n <= 4096)");
  }
  return shape;
}

std::string block_label(BlockShape s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct EncodeArgs {
  std::string input, output, block = "4x4", scheme = "proposed";
  std::optional<std::size_t> threads;
  bool iterate = false;
};

int cmd_encode(const EncodeArgs& a, std::ostream& out) {
  EncodeOptions opts;
  opts.block = checked_block(a.block);
  try {
    opts.scheme = parse_scheme(a.scheme);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  opts.threads = a.threads;
  opts.iterate = a.iterate;

  const RgbImage image = read_image(a.input);
  const auto bytes = serialize(encode_image(image, opts));
  write_file_atomic(a.output, bytes);
  const double bpp = 8.0 * static_cast<double>(bytes.size()) /
                     static_cast<double>(image.pixel_count());
  char line[160];
  std::snprintf(line, sizeof line, "wrote %zu bytes to %s (%.4f bits/pixel)\n", bytes.size(),
                a.output.c_str(), bpp);
  out << line;
  return kOk;
}

int cmd_decode(const std::string& input, const std::string& output, std::ostream& out) {
  const EncodedImage encoded = deserialize(read_file(input));
  const RgbImage image = decode_image(encoded);
  write_image(output, image, encoded.header.mode == Scheme::GrayBtc);
  out << "decoded " << image.width() << "x" << image.height() << " ("
      << scheme_name(encoded.header.mode) << ") to " << output << "\n";
  return kOk;
}

int cmd_metrics(const std::string& original, const std::string& reconstructed,
                bool ssim_global, std::ostream& out) {
  const RgbImage a = read_image(original);
  const RgbImage b = read_image(reconstructed);
  const QualityReport r =
      quality_report(a, b, ssim_global ? SsimMode::Global : SsimMode::Windowed);
  char line[256];
  std::snprintf(line, sizeof line,
                "mse %.4f\nssim %.4f\nmse_r %.4f\nmse_g %.4f\nmse_b %.4f\nmse_saturated %.4f\n",
                r.mse, r.ssim, r.per_channel_mse[0], r.per_channel_mse[1], r.per_channel_mse[2],
                saturated_mse(a, b));
  out << line;
  return kOk;
}

struct BenchArgs {
  std::string corpus;
  std::string blocks = "4x4,8x8";
  std::string schemes = "wplane,proposed";
  std::optional<std::size_t> threads;
  std::string threads_sweep;
  std::string sweep_data;
  std::string mse = "exact";
  bool ssim_global = false;
  int repeat = 1;
};

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".ppm" || ext == ".pgm" || ext == ".pnm" || ext == ".png";
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<BlockShape> blocks;
  for (const auto& b : split_list(a.blocks)) blocks.push_back(checked_block(b));
  std::vector<Scheme> schemes;
  for (const auto& s : split_list(a.schemes)) {
    try {
      schemes.push_back(parse_scheme(s));
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<std::size_t> thread_counts;
  if (!a.threads_sweep.empty()) {
    for (const auto& t : split_list(a.threads_sweep)) {
      std::size_t n = 0;
      try {
        n = std::stoul(t);
      } catch (const std::exception&) {
        throw UsageError("bad --threads-sweep entry '" + t + "'");
      }
      thread_counts.push_back(n == 0 ? hardware_workers() : n);
    }
  } else {
    thread_counts.push_back(resolve_worker_count(a.threads));
  }
  if (a.mse != "exact" && a.mse != "saturated") {
    throw UsageError("--mse must be 'exact' or 'saturated'");
  }
  if (a.repeat < 1) throw UsageError("--repeat must be at least 1");
  if (!fs::is_directory(a.corpus)) {
    throw UsageError("corpus '" + a.corpus + "' is not a directory");
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.corpus)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::ofstream sweep;
  if (!a.sweep_data.empty()) {
    sweep.open(a.sweep_data);
    if (!sweep) throw IoError("cannot open '" + a.sweep_data + "'");
    sweep << "# threads encode_seconds\n";
  }

  const SsimMode ssim_mode = a.ssim_global ? SsimMode::Global : SsimMode::Windowed;
  out << kBenchCsvHeader << "\n";
  int failures = 0;
  for (const auto& file : files) {
    const std::string name = file.stem().string();
    RgbImage image;
    try {
      image = read_image(file);
    } catch (const std::exception& e) {
      err << "bench: skipping " << file.string() << ": " << e.what() << "\n";
      ++failures;
      continue;
    }
    for (BlockShape shape : blocks) {
      std::optional<double> scheme_mse[3];
      for (Scheme scheme : schemes) {
        if (sweep.is_open()) {
          sweep << "\n\n# " << name << " " << block_label(shape) << " "
                << scheme_name(scheme) << "\n";
        }
        for (std::size_t threads : thread_counts) {
          EncodeOptions opts{shape, scheme, threads, false};
          EncodedImage encoded;
          double best = 0.0;
          for (int r = 0; r < a.repeat; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            encoded = encode_image(image, opts);
            const double s = seconds_since(t0);
            best = r == 0 ? s : std::min(best, s);
          }
          const RgbImage recon = decode_image(encoded);
          const RgbImage& reference = scheme == Scheme::GrayBtc ? to_gray(image) : image;
          BenchRow row;
          row.image = name;
          row.scheme = std::string(scheme_name(scheme));
          row.block_size = block_label(shape);
          row.mse = a.mse == "saturated" ? saturated_mse(reference, recon)
                                          : color_mse(reference, recon);
          row.ssim = ssim(reference, recon, ssim_mode);
          row.encode_seconds = best;
          row.threads = threads;
          write_csv_row(out, row);
          if (sweep.is_open()) sweep << threads << " " << best << "\n";
          scheme_mse[static_cast<int>(scheme)] = saturated_mse(image, recon);
        }
      }
      if (auto ref = find_reference(name, shape.rows, shape.cols)) {
        char note[256];
        for (Scheme s : {Scheme::WPlane, Scheme::Proposed}) {
          const auto& got = scheme_mse[static_cast<int>(s)];
          if (!got) continue;
          const double want = s == Scheme::WPlane ? ref->wplane : ref->proposed;
          std::snprintf(note, sizeof note,
                        "bench: %s %s %s: saturated mse %.4f vs reference %.4f (%+.1f%%)\n",
                        name.c_str(), block_label(shape).c_str(),
                        std::string(scheme_name(s)).c_str(), *got, want,
                        100.0 * (*got - want) / want);
          err << note;
        }
      }
    }
  }
  return failures == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-bitmap block truncation coding for color images", "sbtc"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Encode a PPM/PNG image to .sbtc");
  encode->add_option("input", enc.input, "Input image (PPM P6, PGM P5 or PNG)")->required();
  encode->add_option("output", enc.output, "Output .sbtc file")->required();
  encode->add_option("--block", enc.block, "Block size MxN")->capture_default_str();
  encode->add_option("--scheme", enc.scheme, "btc-gray | wplane | proposed")
      ->capture_default_str();
  encode->add_option("--threads", enc.threads, "Worker threads (0 = all cores)");
  encode->add_flag("--iterate", enc.iterate,
                   "Repeat re-quantization and refinement until no bit changes");

  std::string dec_in, dec_out;
  auto* decode = app.add_subcommand("decode", "Decode .sbtc to PPM/PGM or PNG");
  decode->add_option("input", dec_in, "Input .sbtc file")->required();
  decode->add_option("output", dec_out, "Output image (.png for PNG, else PPM/PGM)")
      ->required();

  std::string m_orig, m_recon;
  bool m_global = false;
  auto* metrics = app.add_subcommand("metrics", "Compare two images (MSE, SSIM)");
  metrics->add_option("original", m_orig)->required();
  metrics->add_option("reconstructed", m_recon)->required();
  metrics->add_flag("--ssim-global", m_global, "Single whole-image SSIM window");

  BenchArgs b;
  auto* bench = app.add_subcommand("bench", "Encode every image in a directory, emit CSV");
  bench->add_option("corpus", b.corpus, "Directory of PPM/PGM/PNG images")->required();
  bench->add_option("--blocks", b.blocks, "Comma-separated block sizes")->capture_default_str();
  bench->add_option("--schemes", b.schemes, "Comma-separated schemes")->capture_default_str();
  bench->add_option("--threads", b.threads, "Worker threads (0 = all cores)");
  bench->add_option("--threads-sweep", b.threads_sweep, "Comma-separated thread counts");
  bench->add_option("--sweep-data", b.sweep_data, "Write gnuplot timing data to this file");
  bench->add_option("--mse", b.mse, "exact | saturated")->capture_default_str();
  bench->add_flag("--ssim-global", b.ssim_global, "Single whole-image SSIM window");
  bench->add_option("--repeat", b.repeat, "Timing repetitions (minimum is reported)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*encode) return cmd_encode(enc, out);
    if (*decode) return cmd_decode(dec_in, dec_out, out);
    if (*metrics) return cmd_metrics(m_orig, m_recon, m_global, out);
    if (*bench) return cmd_bench(b, out, err);
  } catch (const UsageError& e) {
    err << "sbtc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "sbtc: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace sbtc::cli
