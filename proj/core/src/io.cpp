#include <tubal/io.hpp>

#include <tubal/errors.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cctype>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace tubal {

namespace {

constexpr std::array<char, 4> kMagic{'T', '3', 'F', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffU);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw FormatError("tensor file truncated in header");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

// Netpbm header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      if (!token.empty()) break;
    } else {
      token.push_back(static_cast<char>(c));
    }
    c = in.get();
  }
  if (token.empty()) throw FormatError("unexpected end of image header");
  return token;
}

long parse_positive(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(token, &used);
    if (used != token.size() || v < 1) throw FormatError("");
    return v;
  } catch (const std::exception&) {
    throw FormatError(std::string("invalid image ") + what + " '" + token + "'");
  }
}

}  // namespace

void write_tensor(const Tensor3& x, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, static_cast<std::uint64_t>(x.n1()));
  put_u64(out, static_cast<std::uint64_t>(x.n2()));
  put_u64(out, static_cast<std::uint64_t>(x.n3()));
  for (double v : x.data()) put_u64(out, std::bit_cast<std::uint64_t>(v));
  if (!out) throw IoError("failed writing tensor data");
}

void write_tensor(const Tensor3& x, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_tensor(x, out);
}

Tensor3 read_tensor(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw FormatError("not a T3F1 tensor file");
  }
  const std::uint64_t n1 = get_u64(in);
  const std::uint64_t n2 = get_u64(in);
  const std::uint64_t n3 = get_u64(in);
  constexpr std::uint64_t limit = std::uint64_t{1} << 40;
  if (n1 == 0 || n2 == 0 || n3 == 0 || n1 > limit || n2 > limit || n3 > limit ||
      n1 * n2 > limit || n1 * n2 * n3 > limit) {
    throw FormatError("tensor extents out of range");
  }
  std::vector<double> data(n1 * n2 * n3);
  for (auto& v : data) {
    std::array<unsigned char, 8> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
      throw FormatError("tensor file truncated in payload");
    }
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    v = std::bit_cast<double>(bits);
  }
  try {
    return Tensor3::from_data(static_cast<Index>(n1), static_cast<Index>(n2),
                              static_cast<Index>(n3), std::move(data));
  } catch (const ValueError& e) {
    throw FormatError(e.what());
  }
}

Tensor3 read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_tensor(in);
}

Tensor3 load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string magic = next_token(in);
  if (magic != "P2" && magic != "P3" && magic != "P5" && magic != "P6") {
    throw FormatError(path.string() + " is not an 8-bit Netpbm image");
  }
  const bool color = magic == "P3" || magic == "P6";
  const bool ascii = magic == "P2" || magic == "P3";
  const long width = parse_positive(next_token(in), "width");
  const long height = parse_positive(next_token(in), "height");
  const long maxval = parse_positive(next_token(in), "maxval");
  if (maxval > 255) throw FormatError("only 8-bit images are supported");
  const Index channels = color ? 3 : 1;
  const std::size_t count = static_cast<std::size_t>(width * height * channels);

  std::vector<int> samples(count);
  if (ascii) {
    for (auto& s : samples) {
      std::string token;
      if (!(in >> token)) throw FormatError("image data truncated");
      try {
        s = std::stoi(token);
      } catch (const std::exception&) {
        throw FormatError("invalid sample '" + token + "'");
      }
      if (s < 0 || s > maxval) throw FormatError("sample exceeds maxval");
    }
  } else {
    std::vector<unsigned char> bytes(count);
    if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(count))) {
      throw FormatError("image data truncated");
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (bytes[i] > maxval) throw FormatError("sample exceeds maxval");
      samples[i] = bytes[i];
    }
  }

  Tensor3 out(height, width, 3);
  const double scale = 255.0 / static_cast<double>(maxval);
  for (Index i = 0; i < height; ++i) {
    for (Index j = 0; j < width; ++j) {
      for (Index c = 0; c < 3; ++c) {
        const std::size_t src = static_cast<std::size_t>((i * width + j) * channels +
                                                         (channels == 3 ? c : 0));
        const double v = samples[src];
        out(i, j, c) = maxval == 255 ? v : std::round(v * scale);
      }
    }
  }
  return out;
}

Tensor3 quantize_pixels(const Tensor3& x) {
  Tensor3 out = x;
  for (double& v : out.data()) v = std::round(std::clamp(v, 0.0, 255.0));
  return out;
}

void save_image(const Tensor3& x, const std::filesystem::path& path) {
  if (x.n3() != 1 && x.n3() != 3) {
    throw DimensionError("images need 1 or 3 channels, got " + std::to_string(x.n3()));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << (x.n3() == 3 ? "P6" : "P5") << '\n' << x.n2() << ' ' << x.n1() << "\n255\n";
  std::vector<unsigned char> bytes;
  bytes.reserve(static_cast<std::size_t>(x.size()));
  for (Index i = 0; i < x.n1(); ++i) {
    for (Index j = 0; j < x.n2(); ++j) {
      for (Index c = 0; c < x.n3(); ++c) {
        bytes.push_back(static_cast<unsigned char>(std::lround(std::clamp(x(i, j, c), 0.0, 255.0))));
      }
    }
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace tubal
