#include "oddfactor/graph6.hpp"

#include <stdexcept>

namespace oddfactor {

namespace {

constexpr int kMaxOrder = 258;  // long-form header accepted up to here

int printable(unsigned char c) {
  if (c < 63 || c > 126)
    throw std::invalid_argument("graph6: byte out of printable range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  // tolerate one trailing newline
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty line");

  size_t pos = 0;
  long long n = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw std::invalid_argument("graph6: order exceeds supported range");
    if (line.size() < 4) throw std::invalid_argument("graph6: malformed length");
    n = 0;
    for (int i = 1; i <= 3; ++i)
      n = (n << 6) | printable(static_cast<unsigned char>(line[i]));
    if (n < 63) throw std::invalid_argument("graph6: non-canonical long header");
    if (n > kMaxOrder)
      throw std::invalid_argument("graph6: order exceeds supported range");
    pos = 4;
  } else {
    n = printable(static_cast<unsigned char>(line[0]));
    if (n > 62) throw std::invalid_argument("graph6: malformed order byte");
    pos = 1;
  }

  const long long nbits = n * (n - 1) / 2;
  const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (line.size() - pos < nbytes)
    throw std::invalid_argument("graph6: malformed length");
  if (line.size() - pos > nbytes)
    throw std::invalid_argument("graph6: trailing garbage");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (size_t i = 0; i < nbytes; ++i) {
    int group = printable(static_cast<unsigned char>(line[pos + i]));
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (group >> shift) & 1;
      if (bit >= nbits) {
        if (set) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (set) {
        // bit index -> column-wise upper triangle position
        long long b = bit;
        int col = 1;
        while (b >= col) {
          b -= col;
          ++col;
        }
        g.add_edge(static_cast<int>(b), col);
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder)
    throw std::invalid_argument("graph6: order exceeds supported range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);  // canonical zero padding
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

}  // namespace oddfactor
