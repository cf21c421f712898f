#include "gqt/graph6.hpp"

#include <istream>
#include <ostream>

namespace gqt {
namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void encode_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
}

int sextet(char c) {
  if (c < kOffset || c > 126) throw GraphError("graph6: byte out of range");
  return c - kOffset;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  encode_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw GraphError("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(sextet(line[0]));
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw GraphError("graph6: truncated size field");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(line[k]));
    pos = 4;
  } else {
    if (line.size() < 8) throw GraphError("graph6: truncated size field");
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(line[k]));
    pos = 8;
  }

  const std::size_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos != nbytes)
    throw GraphError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                     std::to_string(line.size() - pos));

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(line[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  // Padding bits must be zero for a bit-exact round trip.
  if (nbits % 6 != 0) {
    const int last = sextet(line.back());
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw GraphError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kHeader) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

void write_graph6(std::ostream& out, const Graph& g) { out << to_graph6(g) << '\n'; }

}  // namespace gqt
