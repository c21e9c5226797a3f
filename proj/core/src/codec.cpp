// Copyright 2026 The LaSSIM Toolkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lassim/codec.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "lassim/error.hpp"

namespace lassim {
namespace {

constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

std::uint8_t to_byte(double v) {
  // nearbyint honors the default round-to-nearest-even mode.
  return static_cast<std::uint8_t>(std::nearbyint(std::clamp(v, 0.0, 255.0)));
}

// ---------------------------------------------------------------------------
// PNG via libpng. Errors longjmp back into the frame that owns the png
// structs; everything that must survive the jump lives in PngReadState.

struct PngReadState {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;
  std::string error;
  bool unsupported = false;
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
};

void png_read_from_state(png_structp png, png_bytep out, png_size_t length) {
  auto* st = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (st->bytes.size() - st->pos < length) {
    png_error(png, "unexpected end of stream");
  }
  std::memcpy(out, st->bytes.data() + st->pos, length);
  st->pos += length;
}

void png_error_to_state(png_structp png, png_const_charp msg) {
  auto* st = static_cast<PngReadState*>(png_get_error_ptr(png));
  if (st->error.empty()) st->error = msg;
  png_longjmp(png, 1);
}

void png_warning_ignore(png_structp, png_const_charp) {}

// Returns false (with st->error set) on failure.
bool png_decode_into(PngReadState* st) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, st,
                                           png_error_to_state, png_warning_ignore);
  if (png == nullptr) {
    st->error = "cannot allocate libpng read struct";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    st->error = "cannot allocate libpng info struct";
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_set_read_fn(png, st, png_read_from_state);
  png_read_info(png, info);

  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  if (bit_depth > 8) {
    st->unsupported = true;
    st->error = "16-bit PNG samples are not supported";
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) {
    st->unsupported = true;
    st->error = "PNG alpha channels are not supported";
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  st->width = static_cast<int>(png_get_image_width(png, info));
  st->height = static_cast<int>(png_get_image_height(png, info));
  st->channels = png_get_channels(png, info);
  const std::size_t rowbytes = png_get_rowbytes(png, info);
  st->pixels.resize(rowbytes * st->height);
  st->rows.resize(st->height);
  for (int y = 0; y < st->height; ++y) st->rows[y] = st->pixels.data() + rowbytes * y;
  png_read_image(png, st->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

Image decode_png(std::span<const std::uint8_t> bytes) {
  auto st = std::make_unique<PngReadState>();
  st->bytes = bytes;
  if (!png_decode_into(st.get())) {
    if (st->unsupported) throw UnsupportedFormatError(st->error);
    throw DecodeError("PNG: " + st->error, st->pos);
  }
  if (st->channels != 1 && st->channels != 3) {
    throw UnsupportedFormatError("PNG with " + std::to_string(st->channels) +
                                 " channels is not supported");
  }
  std::vector<double> data(st->pixels.size());
  std::transform(st->pixels.begin(), st->pixels.end(), data.begin(),
                 [](std::uint8_t v) { return static_cast<double>(v); });
  return Image(st->width, st->height, st->channels, std::move(data));
}

struct PngWriteState {
  std::vector<std::uint8_t> out;
  std::string error;
};

void png_write_to_state(png_structp png, png_bytep data, png_size_t length) {
  auto* st = static_cast<PngWriteState*>(png_get_io_ptr(png));
  st->out.insert(st->out.end(), data, data + length);
}

void png_flush_noop(png_structp) {}

void png_write_error(png_structp png, png_const_charp msg) {
  auto* st = static_cast<PngWriteState*>(png_get_error_ptr(png));
  if (st->error.empty()) st->error = msg;
  png_longjmp(png, 1);
}

bool png_encode_into(PngWriteState* st, int width, int height, int channels,
                     std::vector<png_bytep>* rows) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, st,
                                            png_write_error, png_warning_ignore);
  if (png == nullptr) {
    st->error = "cannot allocate libpng write struct";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    st->error = "cannot allocate libpng info struct";
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, st, png_write_to_state, png_flush_noop);
  png_set_IHDR(png, info, width, height, 8,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows->data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

std::vector<std::uint8_t> encode_png(const Image& img) {
  std::vector<std::uint8_t> pixels(img.data().size());
  std::transform(img.data().begin(), img.data().end(), pixels.begin(), to_byte);
  const std::size_t stride = static_cast<std::size_t>(img.width()) * img.channels();
  std::vector<png_bytep> rows(img.height());
  for (int y = 0; y < img.height(); ++y) rows[y] = pixels.data() + stride * y;
  PngWriteState st;
  if (!png_encode_into(&st, img.width(), img.height(), img.channels(), &rows)) {
    throw IoError("PNG encode failed: " + st.error);
  }
  return std::move(st.out);
}

// ---------------------------------------------------------------------------
// Binary PGM (P5) / PPM (P6).

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads one decimal field.
  int read_int(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > 1'000'000'000) throw DecodeError(std::string("PNM ") + what + " is too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= bytes_.size()) {
        throw DecodeError(std::string("PNM header truncated before ") + what, pos_);
      }
      throw DecodeError(std::string("PNM header: expected ") + what, pos_);
    }
    return static_cast<int>(v);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw DecodeError("PNM header: expected whitespace before raster", pos_);
    }
    ++pos_;
  }

  std::size_t pos() const noexcept { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;  // past the magic
};

Image decode_pnm(std::span<const std::uint8_t> bytes) {
  const int channels = bytes[1] == '5' ? 1 : 3;
  PnmHeaderReader reader(bytes);
  const int width = reader.read_int("width");
  const int height = reader.read_int("height");
  const std::size_t maxval_pos = reader.pos();
  const int maxval = reader.read_int("maxval");
  if (width < 1 || height < 1) {
    throw DecodeError("PNM dimensions must be positive", maxval_pos);
  }
  if (maxval < 1) throw DecodeError("PNM maxval must be positive", maxval_pos);
  if (maxval > 255) {
    throw UnsupportedFormatError("PNM maxval " + std::to_string(maxval) +
                                 " (16-bit samples) is not supported");
  }
  reader.expect_single_space();
  const std::size_t start = reader.pos();
  const std::size_t needed = static_cast<std::size_t>(width) * height * channels;
  if (bytes.size() - start < needed) {
    throw DecodeError("PNM raster truncated: need " + std::to_string(needed) +
                          " bytes, have " + std::to_string(bytes.size() - start),
                      bytes.size());
  }
  const double scale = maxval == 255 ? 1.0 : 255.0 / maxval;
  std::vector<double> data(needed);
  for (std::size_t i = 0; i < needed; ++i) {
    const int v = bytes[start + i];
    if (v > maxval) {
      throw DecodeError("PNM sample exceeds maxval", start + i);
    }
    data[i] = v * scale;
  }
  return Image(width, height, channels, std::move(data));
}

std::vector<std::uint8_t> encode_pnm(const Image& img) {
  const std::string header = std::string(img.channels() == 1 ? "P5" : "P6") + "\n" +
                             std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + img.data().size());
  for (double v : img.data()) out.push_back(to_byte(v));
  return out;
}

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

Image decode_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 8 && std::equal(bytes.begin(), bytes.begin() + 8, kPngSignature)) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '5' || bytes[1] == '6') return decode_pnm(bytes);
    if (bytes[1] >= '1' && bytes[1] <= '7') {
      throw UnsupportedFormatError(std::string("PNM variant P") +
                                   static_cast<char>(bytes[1]) +
                                   " is not supported (binary P5/P6 only)");
    }
  }
  if (bytes.size() < 8 && bytes.size() > 0 && bytes[0] == kPngSignature[0]) {
    throw DecodeError("PNG signature truncated", bytes.size());
  }
  throw DecodeError("unrecognized image signature", 0);
}

std::vector<std::uint8_t> encode_image(const Image& img, ImageFormat format) {
  if (img.empty()) throw InvalidArgumentError("cannot encode an empty image");
  return format == ImageFormat::kPng ? encode_png(img) : encode_pnm(img);
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

Image read_image_file(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  return decode_image(bytes);
}

void write_image_file(const std::filesystem::path& path, const Image& img) {
  const std::string ext = lower_extension(path);
  ImageFormat format;
  if (ext == ".png") {
    format = ImageFormat::kPng;
  } else if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") {
    format = ImageFormat::kPpm;
  } else {
    throw UnsupportedFormatError("cannot infer image format from '" +
                                 path.filename().string() + "'");
  }
  write_file_bytes(path, encode_image(img, format));
}

std::vector<std::filesystem::path> list_image_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = lower_extension(entry.path());
    if (ext == ".png" || ext == ".ppm" || ext == ".pgm" || ext == ".pnm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

}  // namespace lassim
