#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mmd/error.hpp"
#include "mmd/graph.hpp"

// graph6 / sparse6 follow the nauty formats.txt description: bytes 63..126
// carry six bits each (big-endian), N(n) is one byte for n <= 62 and '~'
// plus three bytes for n <= 258047, the last byte is padded.

namespace mmd {

enum class IoErrc { BadChar, TruncatedBits, OversizeN, Malformed, NTooLarge };
using IoError = CodedError<IoErrc>;

enum class GraphFormat { Graph6, Sparse6, EdgeList };

inline std::string to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::Sparse6: return "sparse6";
    case GraphFormat::EdgeList: return "edge-list";
  }
  return "?";
}

namespace detail {

inline constexpr char kBias = 63;
inline constexpr std::size_t kMaxHeaderN = 258047;

inline void check_chars(std::string_view body) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126)
      throw IoError(IoErrc::BadChar, "byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                                         " is outside 63..126");
  }
}

/// Decodes N(n); returns n and the number of bytes consumed.
inline std::pair<std::size_t, std::size_t> decode_size(std::string_view s) {
  if (s.empty()) throw IoError(IoErrc::TruncatedBits, "missing size header");
  if (s[0] != '~') return {static_cast<std::size_t>(s[0] - kBias), 1};
  if (s.size() >= 2 && s[1] == '~') throw IoError(IoErrc::OversizeN, "8-byte size header is not supported");
  if (s.size() < 4) throw IoError(IoErrc::TruncatedBits, "truncated 4-byte size header");
  std::size_t n = 0;
  for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(s[i] - kBias);
  if (n > kMaxVertices)
    throw IoError(IoErrc::OversizeN, "n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  return {n, 4};
}

inline std::string encode_size(std::size_t n) {
  if (n <= 62) return std::string(1, static_cast<char>(n + kBias));
  if (n > kMaxHeaderN) throw IoError(IoErrc::OversizeN, "n=" + std::to_string(n) + " needs an 8-byte header");
  std::string out = "~";
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  return out;
}

class BitReader {
 public:
  explicit BitReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() * 6 - pos_; }

  unsigned bit() {
    unsigned byte = static_cast<unsigned>(bytes_[pos_ / 6] - kBias);
    unsigned b = (byte >> (5 - pos_ % 6)) & 1U;
    ++pos_;
    return b;
  }

  std::size_t bits(unsigned count) {
    std::size_t x = 0;
    for (unsigned i = 0; i < count; ++i) x = (x << 1) | bit();
    return x;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

class BitWriter {
 public:
  void bit(unsigned b) { bits_.push_back(static_cast<std::uint8_t>(b & 1U)); }
  void bits(std::size_t x, unsigned count) {
    for (unsigned i = count; i > 0; --i) bit(static_cast<unsigned>((x >> (i - 1)) & 1U));
  }
  std::size_t size() const { return bits_.size(); }

  /// Packs into bytes; the caller has padded to a multiple of six.
  std::string bytes() const {
    std::string out;
    for (std::size_t i = 0; i < bits_.size(); i += 6) {
      unsigned v = 0;
      for (std::size_t j = 0; j < 6; ++j) v = (v << 1) | bits_[i + j];
      out.push_back(static_cast<char>(v + kBias));
    }
    return out;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

inline std::string_view strip_header(std::string_view s) {
  for (std::string_view h : {std::string_view(">>graph6<<"), std::string_view(">>sparse6<<")})
    if (s.substr(0, h.size()) == h) return s.substr(h.size());
  return s;
}

inline unsigned sparse6_width(std::size_t n) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace detail

/// Parses one graph6 line (optional ">>graph6<<" header, trailing newline
/// allowed). Pair bits run over columns j = 1..n-1, rows i = 0..j-1.
inline Graph parse_graph6(std::string_view line) {
  std::string_view s = detail::strip_header(detail::trim(line));
  detail::check_chars(s);
  auto [n, used] = detail::decode_size(s);
  std::string_view body = s.substr(used);
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (body.size() < nbytes)
    throw IoError(IoErrc::TruncatedBits, "expected " + std::to_string(nbytes) + " data bytes, found " +
                                             std::to_string(body.size()));
  if (body.size() > nbytes) throw IoError(IoErrc::Malformed, "trailing bytes after graph6 data");
  detail::BitReader in(body);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (in.bit()) pairs.emplace_back(i, j);
  return Graph::from_edges(n, pairs);
}

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out = detail::encode_size(n);
  detail::BitWriter w;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) w.bit(g.adjacent(i, j) ? 1 : 0);
  while (w.size() % 6 != 0) w.bit(0);
  return out + w.bytes();
}

/// Parses one sparse6 line (leading ':'; optional ">>sparse6<<" header).
inline Graph parse_sparse6(std::string_view line) {
  std::string_view s = detail::strip_header(detail::trim(line));
  if (s.empty() || s[0] != ':') throw IoError(IoErrc::Malformed, "sparse6 line must start with ':'");
  s.remove_prefix(1);
  detail::check_chars(s);
  auto [n, used] = detail::decode_size(s);
  const unsigned width = detail::sparse6_width(n);
  detail::BitReader in(s.substr(used));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t v = 0;
  while (in.remaining() >= 1 + width) {
    const unsigned b = in.bit();
    const std::size_t x = in.bits(width);
    if (b) ++v;
    if (x > v)
      v = x;
    else if (v < n)
      pairs.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, pairs);
}

inline std::string encode_sparse6(const Graph& g) {
  const std::size_t n = g.order();
  const unsigned width = detail::sparse6_width(n);
  std::string out = ":" + detail::encode_size(n);
  detail::BitWriter w;
  std::size_t last = 0;
  for (Vertex j = 0; j < n; ++j) {
    for (Vertex i : g.neighbors(j)) {
      if (i > j) break;
      if (j == last) {
        w.bit(0);
      } else {
        w.bit(1);
        if (j > last + 1) {
          w.bits(j, width);
          w.bit(0);
        }
        last = j;
      }
      w.bits(i, width);
    }
  }
  if (const std::size_t r = w.size() % 6; r != 0) {
    const std::size_t room = 6 - r;
    if (room >= width + 1 && n >= 2 && last == n - 2 && n == (std::size_t{1} << width)) {
      w.bit(0);
      for (std::size_t i = 1; i < room; ++i) w.bit(1);
    } else {
      for (std::size_t i = 0; i < room; ++i) w.bit(1);
    }
  }
  return out + w.bytes();
}

/// Dispatches on the leading ':' (after any header).
inline Graph parse_graph6_or_sparse6(std::string_view line) {
  std::string_view s = detail::strip_header(detail::trim(line));
  if (!s.empty() && s[0] == ':') return parse_sparse6(s);
  return parse_graph6(s);
}

/// "n m" followed by m lines "u v".
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::size_t> numbers;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || (end != text.data() + text.size() && !std::isspace(static_cast<unsigned char>(*end))))
      throw IoError(IoErrc::Malformed, "expected a non-negative integer at offset " + std::to_string(i));
    numbers.push_back(value);
    i = static_cast<std::size_t>(end - text.data());
  }
  if (numbers.size() < 2) throw IoError(IoErrc::Malformed, "missing \"n m\" header");
  const std::size_t n = numbers[0], m = numbers[1];
  if (numbers.size() != 2 + 2 * m)
    throw IoError(IoErrc::Malformed, "header promises " + std::to_string(m) + " edges, found " +
                                         std::to_string((numbers.size() - 2) / 2) + " endpoint pairs");
  if (n > kMaxVertices) throw GraphError(GraphErrc::TooLarge, "n=" + std::to_string(n) + " is too large");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t a = numbers[2 + 2 * e], b = numbers[3 + 2 * e];
    if (a >= n || b >= n)
      throw GraphError(GraphErrc::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                        ") references a vertex >= " + std::to_string(n));
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph::from_edges(n, pairs);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// One graph read from an input source.
struct GraphRecord {
  std::size_t line = 0;  // 1-based
  std::string raw;
  GraphFormat format = GraphFormat::Graph6;
  std::optional<Graph> graph;
  /// Set when the text could not be decoded.
  std::optional<IoError> parse_error;
  /// Set when the text decoded but is not a simple graph.
  std::optional<GraphError> graph_error;
};

/// Text whose first non-blank line consists of digits and whitespace only is
/// an edge list; anything else is a stream of graph6/sparse6 lines.
inline GraphFormat detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = detail::trim(text.substr(pos, end == std::string_view::npos ? text.npos : end - pos));
    if (!line.empty()) {
      bool numeric = true;
      for (char c : line)
        numeric = numeric && (std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)));
      if (numeric) return GraphFormat::EdgeList;
      line = detail::strip_header(line);
      return !line.empty() && line[0] == ':' ? GraphFormat::Sparse6 : GraphFormat::Graph6;
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return GraphFormat::Graph6;
}

/// Splits text into graph records. Blank lines and bare headers are skipped.
/// An edge-list source yields exactly one record.
inline std::vector<GraphRecord> read_graph_records(std::string_view text) {
  std::vector<GraphRecord> out;
  if (detect_format(text) == GraphFormat::EdgeList) {
    GraphRecord rec;
    rec.line = 1;
    rec.raw = std::string(text);
    rec.format = GraphFormat::EdgeList;
    try {
      rec.graph = parse_edge_list(text);
    } catch (const IoError& e) {
      rec.parse_error = e;
    } catch (const GraphError& e) {
      rec.graph_error = e;
    }
    out.push_back(std::move(rec));
    return out;
  }
  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    ++line_no;
    std::string_view body = detail::strip_header(detail::trim(line));
    if (!body.empty()) {
      GraphRecord rec;
      rec.line = line_no;
      rec.raw = std::string(body);
      rec.format = body[0] == ':' ? GraphFormat::Sparse6 : GraphFormat::Graph6;
      try {
        rec.graph = parse_graph6_or_sparse6(body);
      } catch (const IoError& e) {
        rec.parse_error = e;
      } catch (const GraphError& e) {
        rec.graph_error = e;
      }
      out.push_back(std::move(rec));
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace mmd
