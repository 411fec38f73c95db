#pragma once

#include <tubal/tensor.hpp>

#include <filesystem>
#include <iosfwd>

namespace tubal {

// Binary tensor file: "T3F1", three little-endian uint64 extents, then
// n1*n2*n3 little-endian float64 values in storage order.
void write_tensor(const Tensor3& x, std::ostream& out);
void write_tensor(const Tensor3& x, const std::filesystem::path& path);
Tensor3 read_tensor(std::istream& in);
Tensor3 read_tensor(const std::filesystem::path& path);

// 8-bit Netpbm images (P2, P3, P5, P6 with maxval <= 255). Grayscale files
// are promoted to three equal channels. Result is height x width x 3 with
// values in [0, 255].
Tensor3 load_image(const std::filesystem::path& path);

// Clamps to [0, 255] and rounds to the nearest integer: the values an image
// file can hold.
Tensor3 quantize_pixels(const Tensor3& x);

// Writes P6 for three channels and P5 for one, after quantize_pixels.
void save_image(const Tensor3& x, const std::filesystem::path& path);

}  // namespace tubal
