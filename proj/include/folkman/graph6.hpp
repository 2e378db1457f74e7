#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "folkman/graph.hpp"

namespace folkman {

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedLength,   // missing or truncated order prefix
    kInvalidCharacter,  // byte outside the printable 63..126 range
    kBodyLength,        // body length does not match the order
    kNonzeroPadding,    // trailing pad bits are not zero
    kOrderTooLarge,     // order exceeds kMaxOrder
    kBadSparse6,        // malformed sparse6 body (self-loop etc.)
  };

  Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

inline std::string_view strip_graph6_line(std::string_view text, std::string_view header) {
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  return text;
}

inline int sixbits(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw Graph6Error(Graph6Error::Kind::kInvalidCharacter,
                      "graph6: byte " + std::to_string(u) + " outside printable range");
  return u - 63;
}

/// Parses the N(n) prefix; advances `text` past it.
inline long decode_order(std::string_view& text) {
  if (text.empty()) throw Graph6Error(Graph6Error::Kind::kMalformedLength, "graph6: empty input");
  if (static_cast<unsigned char>(text[0]) != 126) {
    int n = sixbits(text[0]);
    text.remove_prefix(1);
    return n;
  }
  if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
    if (text.size() < 8)
      throw Graph6Error(Graph6Error::Kind::kMalformedLength, "graph6: truncated 8-byte order");
    long n = 0;
    for (int i = 2; i < 8; ++i) n = (n << 6) | sixbits(text[i]);
    text.remove_prefix(8);
    return n;
  }
  if (text.size() < 4)
    throw Graph6Error(Graph6Error::Kind::kMalformedLength, "graph6: truncated 4-byte order");
  long n = 0;
  for (int i = 1; i < 4; ++i) n = (n << 6) | sixbits(text[i]);
  if (n < 63) throw Graph6Error(Graph6Error::Kind::kMalformedLength, "graph6: non-minimal order prefix");
  text.remove_prefix(4);
  return n;
}

inline void encode_order(int n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

}  // namespace detail

/// Decodes one graph6 string. A leading ">>graph6<<" header and trailing
/// newline are tolerated.
inline Graph decode_graph6(std::string_view text) {
  text = detail::strip_graph6_line(text, ">>graph6<<");
  long n = detail::decode_order(text);
  if (n > kMaxOrder)
    throw Graph6Error(Graph6Error::Kind::kOrderTooLarge,
                      "graph6: order " + std::to_string(n) + " exceeds 128");
  const long bits = n * (n - 1) / 2;
  const long groups = (bits + 5) / 6;
  if (static_cast<long>(text.size()) != groups)
    throw Graph6Error(Graph6Error::Kind::kBodyLength,
                      "graph6: expected " + std::to_string(groups) + " body bytes, got " +
                          std::to_string(text.size()));
  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = detail::sixbits(text[k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (groups > 0) {
    int last = detail::sixbits(text[groups - 1]);
    int pad = static_cast<int>(groups * 6 - bits);
    if (last & ((1 << pad) - 1))
      throw Graph6Error(Graph6Error::Kind::kNonzeroPadding, "graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

/// Encodes in graph6 (format-canonical, not isomorphism-canonical).
inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  detail::encode_order(n, out);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes a sparse6 string (leading ':' required, ">>sparse6<<" header
/// tolerated). Duplicate edges collapse; self-loops are rejected.
inline Graph decode_sparse6(std::string_view text) {
  text = detail::strip_graph6_line(text, ">>sparse6<<");
  if (text.empty() || text[0] != ':')
    throw Graph6Error(Graph6Error::Kind::kBadSparse6, "sparse6: missing ':' prefix");
  text.remove_prefix(1);
  long n = detail::decode_order(text);
  if (n > kMaxOrder)
    throw Graph6Error(Graph6Error::Kind::kOrderTooLarge,
                      "sparse6: order " + std::to_string(n) + " exceeds 128");
  int k = 0;
  for (long i = n - 1; i > 0; i >>= 1) ++k;
  GraphBuilder b(static_cast<int>(n));
  const long total_bits = static_cast<long>(text.size()) * 6;
  long pos = 0;
  auto bit = [&]() { return (detail::sixbits(text[pos / 6]) >> (5 - pos % 6)) & 1; };
  long v = 0;
  while (pos + 1 + k <= total_bits) {
    int flag = bit();
    ++pos;
    long x = 0;
    for (int i = 0; i < k; ++i, ++pos) x = (x << 1) | bit();
    if (flag) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw Graph6Error(Graph6Error::Kind::kBadSparse6, "sparse6: self-loop");
      b.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return std::move(b).build();
}

/// Dispatches on the leading ':' between sparse6 and graph6.
inline Graph decode_any(std::string_view text) {
  std::string_view t = text;
  if (t.starts_with(">>sparse6<<")) return decode_sparse6(t);
  if (!t.empty() && t[0] == ':') return decode_sparse6(t);
  return decode_graph6(t);
}

}  // namespace folkman
