#include "gallai/graph6.hpp"

#include "gallai/errors.hpp"

namespace gallai {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  if (pos >= s.size()) throw Graph6Error(base + pos, "record truncated");
  auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw Graph6Error(base + pos, "byte outside graph6 range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (text.starts_with(":") || text.starts_with(">>sparse6<<"))
    throw UnsupportedFormatError(base, "sparse6 records are not supported");
  if (text.starts_with("&") || text.starts_with(">>digraph6<<"))
    throw UnsupportedFormatError(base, "digraph6 records are not supported");
  if (text.empty()) throw Graph6Error(base, "record truncated");

  std::size_t pos = 0;
  long long n = 0;
  int first = sextet(text, 0, base);
  if (first < 63) {
    n = first;
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 8;
    if (n <= 258047) throw Graph6Error(base, "malformed length byte: non-canonical 8-byte order");
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 4;
    if (n <= 62) throw Graph6Error(base, "malformed length byte: non-canonical 4-byte order");
  }
  if (n > kMaxVertices)
    throw Graph6Error(base, "graph order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxVertices));

  const auto order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw Graph6Error(base + text.size(), "record truncated");
  if (text.size() > pos + body) throw Graph6Error(base + pos + body, "trailing bytes after record");

  Graph g(order);
  std::size_t k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int group = sextet(text, pos + k / 6, base);
      if ((group >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    int group = sextet(text, pos + body - 1, base);
    int pad = static_cast<int>(6 - bits % 6);
    if (group & ((1 << pad) - 1)) throw Graph6Error(base + pos + body - 1, "trailing bits nonzero");
  }
  // Catch stray bytes inside the body that the loop above never touched (n < 2).
  for (std::size_t i = pos; i < pos + body; ++i) sextet(text, i, base);
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace gallai
