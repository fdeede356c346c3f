#include "sabm/frame.hpp"

#include <fstream>

namespace sabm {

Frame::Frame(int w, int h) : width(w), height(h) {
  if (w <= 0 || h <= 0 || w % 64 != 0 || h % 64 != 0) {
    throw InvalidDimensions("frame dimensions must be positive multiples of 64, got " +
                            std::to_string(w) + "x" + std::to_string(h));
  }
  luma.assign(static_cast<std::size_t>(w) * h, 0);
}

void write_pgm_raw(int width, int height, const std::vector<std::uint8_t>& pixels,
                   const std::string& path) {
  if (pixels.size() != static_cast<std::size_t>(width) * height) {
    throw ShapeMismatch("pixel buffer does not match dimensions");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
  if (!out) throw IoError("write failed: " + path);
}

void write_pgm(const Frame& frame, const std::string& path) {
  write_pgm_raw(frame.width, frame.height, frame.luma, path);
}

namespace {

// Reads the next whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

}  // namespace

Frame read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  if (next_token(in) != "P5") throw ParseError(path + ": not a binary PGM (P5)");
  int w = 0, h = 0, maxval = 0;
  try {
    w = std::stoi(next_token(in));
    h = std::stoi(next_token(in));
    maxval = std::stoi(next_token(in));
  } catch (const std::exception&) {
    throw ParseError(path + ": malformed PGM header");
  }
  if (maxval != 255) throw ParseError(path + ": only 8-bit PGM supported");
  Frame frame(w, h);
  in.read(reinterpret_cast<char*>(frame.luma.data()),
          static_cast<std::streamsize>(frame.luma.size()));
  if (in.gcount() != static_cast<std::streamsize>(frame.luma.size())) {
    throw ParseError(path + ": truncated pixel data");
  }
  return frame;
}

}  // namespace sabm
