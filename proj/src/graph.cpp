#include "qpe/graph.hpp"

#include <algorithm>

namespace qpe {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int g6_char(std::string_view s, size_t pos) {
  if (pos >= s.size()) throw Graph6ParseError("graph6: truncated record", pos);
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < kG6Lo || c > kG6Hi)
    throw Graph6ParseError("graph6: character out of range", pos);
  return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  // strip trailing newline/CR
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw Graph6ParseError("graph6: empty record", 0);
  if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);

  size_t pos = 0;
  long n;
  int first = g6_char(line, pos);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // '~': long form. '~~' (8-byte form) is beyond the supported range.
    if (line.size() >= 2 && line[1] == '~')
      throw Graph6ParseError("graph6: node counts above 258047 unsupported", 1);
    n = 0;
    for (size_t k = 1; k <= 3; ++k) n = (n << 6) | g6_char(line, k);
    pos = 4;
  }
  if (n < 1) throw Graph6ParseError("graph6: node count must be >= 1", 0);

  Graph g(static_cast<int>(n));
  long bits_needed = n * (n - 1) / 2;
  long bit = 0;
  int cur = 0, mask = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (mask == 0) {
        cur = g6_char(line, pos);
        ++pos;
        mask = 0x20;
      }
      if (cur & mask) g.add_edge(u, v);
      mask >>= 1;
    }
  }
  (void)bits_needed;
  if (pos != line.size())
    throw Graph6ParseError("graph6: trailing characters after payload", pos);
  return g;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Lo + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kG6Lo + ((n >> 12) & 0x3f)));
    out.push_back(static_cast<char>(kG6Lo + ((n >> 6) & 0x3f)));
    out.push_back(static_cast<char>(kG6Lo + (n & 0x3f)));
  }
  int cur = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(kG6Lo + cur));
        cur = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(kG6Lo + (cur << (6 - nbits))));
  return out;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  int n = g.n();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute: permutation length mismatch");
  std::vector<uint8_t> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("permute: not a bijection on 0..n-1");
    seen[v] = 1;
  }
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) out.add_edge(perm[u], perm[v]);
  return out;
}

int common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common_neighbors: u == v");
  int count = 0;
  for (int w = 0; w < g.n(); ++w)
    if (g.has_edge(u, w) && g.has_edge(v, w)) ++count;
  return count;
}

std::optional<SrgParams> validate_srg(const Graph& g) {
  int n = g.n();
  if (n < 2) return std::nullopt;
  int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  if (k == 0 || k == n - 1) return std::nullopt;  // edgeless / complete

  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int c = common_neighbors(g, u, v);
      int& slot = g.has_edge(u, v) ? lambda : mu;
      if (slot == -1)
        slot = c;
      else if (slot != c)
        return std::nullopt;
    }
  }
  // k regular with 0 < k < n-1 guarantees both adjacent and non-adjacent
  // witnesses exist, so lambda and mu are both set here.
  return SrgParams{n, k, lambda, mu};
}

SrgPowerCoeffs srg_power_coeffs(const SrgParams& p, int m) {
  if (m < 0) throw std::invalid_argument("srg_power_coeffs: negative exponent");
  // A^{m+1} = A^m A with A^2 = kI + lambda A + mu (J - I - A) and
  // JA = AJ = kJ. Track A^m = alpha I + beta J + gamma A.
  SrgPowerCoeffs c{1, 0, 0};
  for (int step = 0; step < m; ++step) {
    double a = c.alpha, b = c.beta, g = c.gamma;
    SrgPowerCoeffs next;
    next.alpha = g * (p.k - p.mu);
    next.beta = b * p.k + g * p.mu;
    next.gamma = a + g * (p.lambda - p.mu);
    c = next;
  }
  return c;
}

}  // namespace qpe
