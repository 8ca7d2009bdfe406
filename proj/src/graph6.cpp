#include "rdom/graph6.hpp"

#include <cstdint>
#include <vector>

#include "rdom/errors.hpp"

namespace rdom {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63) throw Graph6Error("character outside 63..126 in graph6 data");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(decode_char(text[0]));
    pos = 1;
  } else {
    const std::size_t width = text.size() > 1 && text[1] == '~' ? 6 : 3;
    pos = width == 6 ? 2 : 1;
    if (text.size() < pos + width) throw Graph6Error("malformed graph6 length field");
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | static_cast<std::uint64_t>(decode_char(text[pos + i]));
    pos += width;
    if ((width == 3 && n < 63) || (width == 6 && n < 258048)) {
      throw Graph6Error("malformed graph6 length field");
    }
  }
  if (n > static_cast<std::uint64_t>(Graph::kMaxOrder)) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " above supported maximum " +
                      std::to_string(Graph::kMaxOrder));
  }

  const int order = static_cast<int>(n);
  const std::size_t bit_count = static_cast<std::size_t>(order) * (order - (order > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) throw Graph6Error("graph6 data has wrong length for order " + std::to_string(order));

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  std::size_t bit = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int chunk = decode_char(text[pos + bit / 6]);
      if ((chunk >> (5 - bit % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  for (; bit < byte_count * 6; ++bit) {
    if ((decode_char(text[pos + bit / 6]) >> (5 - bit % 6)) & 1) throw Graph6Error("nonzero padding bits in graph6 data");
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 writer supports orders up to 62");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + chunk);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (chunk << (6 - filled)));
  return out;
}

}  // namespace rdom
