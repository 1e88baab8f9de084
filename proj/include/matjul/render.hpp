#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "matjul/classification.hpp"
#include "matjul/green_boettcher.hpp"
#include "matjul/slice.hpp"

namespace matjul {

struct RenderJob {
  enum class Quantity { Classification, Green, EscapeTime };
  enum class Format { PGM, CSV };
  Polynomial poly;
  SliceSpec slice;
  Quantity quantity = Quantity::Classification;
  ClassifyParams params{};
  Format format = Format::PGM;
  int jobs = 1;
};

/// Fixed palette so goldens stay stable.
inline std::uint8_t classification_pixel(MatrixClass::Tag tag) {
  switch (tag) {
    case MatrixClass::Tag::FatouEscaping: return 255;
    case MatrixClass::Tag::FatouBounded: return 0;
    case MatrixClass::Tag::Julia1: return 128;
    case MatrixClass::Tag::Julia2: return 64;
    case MatrixClass::Tag::Unresolved:
    default: return 192;
  }
}

struct RenderResult {
  int nx = 0;
  int ny = 0;
  std::vector<double> raw;        // row-major quantity values
  std::vector<std::uint8_t> pixels;
};

inline int default_worker_count() {
  if (const char* env = std::getenv("MATJUL_JOBS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Renders the job's quantity per pixel.  Rows are partitioned over the
/// workers and written into a preallocated buffer keyed by pixel index, so
/// the output is identical for any worker count.
inline RenderResult render(const RenderJob& job) {
  job.slice.validate();
  const int nx = job.slice.nx, ny = job.slice.ny;
  RenderResult out;
  out.nx = nx;
  out.ny = ny;
  out.raw.assign(static_cast<std::size_t>(nx) * ny, 0.0);
  out.pixels.assign(out.raw.size(), 0);

  auto value_at = [&job](int i, int j) -> double {
    const Mat2 m = pixel_to_matrix(job.slice, i, j);
    switch (job.quantity) {
      case RenderJob::Quantity::Classification:
        return static_cast<double>(classification_pixel(classify_matrix(job.poly, m, job.params).tag));
      case RenderJob::Quantity::Green:
        return green_matrix(job.poly, m, job.params.budget, job.params.tol).value;
      case RenderJob::Quantity::EscapeTime:
      default: {
        const MatrixOrbit orbit = iterate_P(job.poly, m, job.params.budget);
        for (std::size_t k = 0; k < orbit.points.size(); ++k)
          if (frobenius_norm(orbit.points[k]) > 1e8) return static_cast<double>(k);
        if (orbit.overflowed_at) return static_cast<double>(*orbit.overflowed_at);
        return static_cast<double>(job.params.budget);
      }
    }
  };

  const int workers = std::max(1, job.jobs);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int j = w; j < ny; j += workers)
        for (int i = 0; i < nx; ++i)
          out.raw[static_cast<std::size_t>(j) * nx + i] = value_at(i, j);
    });
  }
  for (auto& t : pool) t.join();

  switch (job.quantity) {
    case RenderJob::Quantity::Classification:
      for (std::size_t k = 0; k < out.raw.size(); ++k)
        out.pixels[k] = static_cast<std::uint8_t>(out.raw[k]);
      break;
    case RenderJob::Quantity::Green: {
      double vmax = 0.0;
      for (double v : out.raw) vmax = std::max(vmax, v);
      for (std::size_t k = 0; k < out.raw.size(); ++k)
        out.pixels[k] = vmax > 0.0
                            ? static_cast<std::uint8_t>(std::lround(255.0 * out.raw[k] / vmax))
                            : 0;
      break;
    }
    case RenderJob::Quantity::EscapeTime: {
      const double budget = std::max(1, job.params.budget);
      for (std::size_t k = 0; k < out.raw.size(); ++k)
        out.pixels[k] = static_cast<std::uint8_t>(std::lround(255.0 * out.raw[k] / budget));
      break;
    }
  }
  return out;
}

/// Binary PGM, P5 maxval 255: "P5\n<w> <h>\n255\n" then row-major bytes.
inline std::string encode_pgm(const RenderResult& r) {
  std::string out = "P5\n" + std::to_string(r.nx) + " " + std::to_string(r.ny) + "\n255\n";
  out.append(reinterpret_cast<const char*>(r.pixels.data()), r.pixels.size());
  return out;
}

inline std::string encode_csv(const RenderResult& r) {
  std::string out;
  char buf[64];
  for (int j = 0; j < r.ny; ++j) {
    for (int i = 0; i < r.nx; ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", r.raw[static_cast<std::size_t>(j) * r.nx + i]);
      out += buf;
      out += (i + 1 == r.nx) ? '\n' : ',';
    }
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace matjul
