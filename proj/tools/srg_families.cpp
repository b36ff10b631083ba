// One-time generator for the vendored strongly-regular-graph families
//   srg(25,12,5,6)  (15 graphs)   -> data/srg/srg-25-12-5-6.g6
//   srg(26,10,3,4)  (10 graphs)   -> data/srg/srg-26-10-3-4.g6
//
// Construction: seed graphs are the Paley graph over GF(25), the order-5
// Latin-square graphs, and the complements of the two STS(13) block
// graphs (the second Steiner system comes from a Pasch trade on the
// cyclic one). The closure walks Seidel two-graphs on 26 points: each
// 25-node member is extended by an isolated point, descendants are taken
// at every point, and the regular members of each switching class are
// found by enumerating the +-1 eigenvectors of the Seidel matrix for
// eigenvalues +-5. Exactly four regular two-graphs appear and the closure
// yields 15 + 10 isomorphism classes, matching the known classification.
// Classes are deduplicated by an isomorphism-invariant fingerprint
// (2-particle spectrum plus localized-average walk correlations).
//
// The output is deterministic: fixed seeds, ordered worklist, sorted
// graph6 lines.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qpe/graph.hpp"
#include "qpe/linalg.hpp"
#include "qpe/walks.hpp"

using qpe::Graph;

namespace {

using Fingerprint = std::vector<long long>;

Fingerprint fingerprint(const Graph& g) {
  auto basis = qpe::occupation_graph(g, 2);
  auto spec = qpe::sym_eig(basis.graph.adjacency_matrix());
  Eigen::MatrixXd corr = qpe::xy2_correlations_localized_average(g, 1.0);
  Fingerprint fp;
  for (int i = 0; i < spec.dim(); ++i)
    fp.push_back(std::llround(spec.eigenvalues(i) * 1e6));
  std::vector<long long> entries;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      entries.push_back(std::llround(corr(i, j) * 1e9));
  std::sort(entries.begin(), entries.end());
  fp.insert(fp.end(), entries.begin(), entries.end());
  return fp;
}

// Seidel matrix: -1 adjacent, +1 distinct non-adjacent, 0 diagonal.
using Seidel = std::vector<std::vector<int>>;

Seidel seidel_of(const Graph& g) {
  int n = g.n();
  Seidel s(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) {
    s[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) s[i][j] = -1;
  }
  return s;
}

Seidel extend_by_isolated_point(const Graph& g) {
  Seidel s = seidel_of(g);
  int n = g.n();
  for (auto& row : s) row.push_back(1);
  s.emplace_back(n + 1, 1);
  s.back()[n] = 0;
  return s;
}

Graph descendant(const Seidel& s, int p) {
  int n = static_cast<int>(s.size());
  std::vector<int> eps(n, 1);
  for (int v = 0; v < n; ++v)
    if (v != p && s[p][v] == -1) eps[v] = -1;
  Graph g(n - 1);
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (v != p) keep.push_back(v);
  for (int a = 0; a < n - 1; ++a)
    for (int b = a + 1; b < n - 1; ++b)
      if (s[keep[a]][keep[b]] * eps[keep[a]] * eps[keep[b]] == -1)
        g.add_edge(a, b);
  return g;
}

// All eps in {+-1}^n with S eps = rho eps, eps[0] = +1. Each one is a
// switching of the class into a regular graph.
std::vector<std::vector<int>> regular_switchings(const Seidel& s, int rho) {
  int n = static_cast<int>(s.size());
  std::vector<std::vector<int>> solutions;
  std::vector<int> eps(n, 0);
  std::vector<int> partial(n, 0);  // sum_{u assigned} S[v][u] eps[u]
  std::vector<int> remaining(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) remaining[v] += std::abs(s[v][u]);
  }

  auto feasible = [&](int assigned) {
    for (int v = 0; v < n; ++v) {
      int rem = remaining[v];
      if (v < assigned) {
        if (std::abs(rho * eps[v] - partial[v]) > rem) return false;
      } else {
        if (std::min(std::abs(rho - partial[v]), std::abs(-rho - partial[v])) > rem)
          return false;
      }
    }
    return true;
  };

  auto assign = [&](int m, int value) {
    eps[m] = value;
    for (int v = 0; v < n; ++v) {
      partial[v] += s[v][m] * value;
      remaining[v] -= std::abs(s[v][m]);
    }
  };
  auto unassign = [&](int m) {
    for (int v = 0; v < n; ++v) {
      partial[v] -= s[v][m] * eps[m];
      remaining[v] += std::abs(s[v][m]);
    }
    eps[m] = 0;
  };

  std::vector<int> stack{0};
  // iterative dfs with explicit choice points
  std::function<void(int)> dfs = [&](int m) {
    if (m == n) {
      for (int v = 0; v < n; ++v)
        if (partial[v] != rho * eps[v]) return;
      solutions.push_back(eps);
      return;
    }
    for (int value : {1, -1}) {
      if (m == 0 && value == -1) break;  // global sign is a gauge
      assign(m, value);
      if (feasible(m + 1)) dfs(m + 1);
      unassign(m);
    }
  };
  dfs(0);
  return solutions;
}

Graph switched_graph(const Seidel& s, const std::vector<int>& eps) {
  int n = static_cast<int>(s.size());
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (s[a][b] * eps[a] * eps[b] == -1) g.add_edge(a, b);
  return g;
}

// --- seed constructions -------------------------------------------------

Graph paley_25() {
  // GF(25) = GF(5)[x]/(x^2 - 3)
  auto mul = [](std::pair<int, int> p, std::pair<int, int> q) {
    return std::pair<int, int>{(p.first * q.first + 3 * p.second * q.second) % 5,
                               (p.first * q.second + p.second * q.first) % 5};
  };
  std::set<std::pair<int, int>> squares;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a || b) squares.insert(mul({a, b}, {a, b}));
  Graph g(25);
  for (int u = 0; u < 25; ++u) {
    for (int v = u + 1; v < 25; ++v) {
      std::pair<int, int> diff{((u / 5 - v / 5) % 5 + 5) % 5,
                               ((u % 5 - v % 5) % 5 + 5) % 5};
      if (squares.count(diff)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Graph> latin_square_graphs() {
  // all reduced latin squares of order 5; cells adjacent iff same row,
  // column or symbol
  std::vector<Graph> out;
  std::array<std::array<int, 5>, 5> sq{};
  for (int c = 0; c < 5; ++c) sq[0][c] = c;

  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == 5) {
      Graph g(25);
      for (int a = 0; a < 25; ++a)
        for (int b = a + 1; b < 25; ++b) {
          int ra = a / 5, ca = a % 5, rb = b / 5, cb = b % 5;
          if (ra == rb || ca == cb || sq[ra][ca] == sq[rb][cb]) g.add_edge(a, b);
        }
      out.push_back(g);
      return;
    }
    if (c == 5) {
      fill(r + 1, 0);
      return;
    }
    for (int v = 0; v < 5; ++v) {
      if (c == 0 && v != r) continue;  // reduced: first column fixed
      bool ok = true;
      for (int cc = 0; cc < c; ++cc) ok &= sq[r][cc] != v;
      for (int rr = 0; rr < r; ++rr) ok &= sq[rr][c] != v;
      if (!ok) continue;
      sq[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(1, 0);
  return out;
}

using Block = std::array<int, 3>;

std::vector<Block> cyclic_sts13() {
  std::set<Block> blocks;
  for (Block base : {Block{0, 1, 4}, Block{0, 2, 7}}) {
    for (int s = 0; s < 13; ++s) {
      Block b{(base[0] + s) % 13, (base[1] + s) % 13, (base[2] + s) % 13};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  }
  return {blocks.begin(), blocks.end()};
}

bool is_sts13(const std::vector<Block>& blocks) {
  if (blocks.size() != 26) return false;
  std::map<std::pair<int, int>, int> cover;
  for (const Block& b : blocks)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) ++cover[{b[i], b[j]}];
  if (cover.size() != 78) return false;
  for (auto& [pair, count] : cover)
    if (count != 1) return false;
  return true;
}

// Replace a Pasch configuration {a,b,c},{a,y,z},{x,b,z},{x,y,c} with
// {x,b,c},{x,y,z},{a,b,z},{a,y,c}; on the cyclic STS(13) this produces
// the second Steiner system.
std::optional<std::vector<Block>> pasch_trade(const std::vector<Block>& blocks) {
  std::set<Block> bs(blocks.begin(), blocks.end());
  auto sorted = [](int p, int q, int r) {
    Block b{p, q, r};
    std::sort(b.begin(), b.end());
    return b;
  };
  for (const Block& b1 : blocks) {
    std::array<std::array<int, 3>, 6> perms{{{b1[0], b1[1], b1[2]},
                                             {b1[0], b1[2], b1[1]},
                                             {b1[1], b1[0], b1[2]},
                                             {b1[1], b1[2], b1[0]},
                                             {b1[2], b1[0], b1[1]},
                                             {b1[2], b1[1], b1[0]}}};
    for (auto [a, b, c] : perms) {
      for (const Block& b2 : blocks) {
        if (b2 == b1) continue;
        if (std::find(b2.begin(), b2.end(), a) == b2.end()) continue;
        std::vector<int> rest;
        for (int t : b2)
          if (t != a) rest.push_back(t);
        for (auto [y, z] : {std::pair{rest[0], rest[1]}, {rest[1], rest[0]}}) {
          if (y == b || y == c || z == b || z == c) continue;
          for (int x = 0; x < 13; ++x) {
            if (x == a || x == b || x == c || x == y || x == z) continue;
            if (!bs.count(sorted(x, b, z)) || !bs.count(sorted(x, y, c))) continue;
            std::set<Block> next = bs;
            next.erase(sorted(a, b, c));
            next.erase(sorted(a, y, z));
            next.erase(sorted(x, b, z));
            next.erase(sorted(x, y, c));
            next.insert(sorted(x, b, c));
            next.insert(sorted(x, y, z));
            next.insert(sorted(a, b, z));
            next.insert(sorted(a, y, c));
            std::vector<Block> candidate(next.begin(), next.end());
            if (is_sts13(candidate)) return candidate;
          }
        }
      }
    }
  }
  return std::nullopt;
}

Graph block_graph_complement(const std::vector<Block>& blocks) {
  int m = static_cast<int>(blocks.size());
  Graph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool share = false;
      for (int a : blocks[i])
        for (int b : blocks[j]) share |= a == b;
      if (!share) g.add_edge(i, j);
    }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_dir = argc > 1 ? argv[1] : "data/srg";

  const qpe::SrgParams params25{25, 12, 5, 6};
  const qpe::SrgParams params26{26, 10, 3, 4};

  std::map<Fingerprint, Graph> found25, found26;
  std::vector<std::pair<int, Graph>> queue;  // (node count, graph)

  auto add = [&](const Graph& g) {
    auto p = qpe::validate_srg(g);
    if (!p) return;
    if (*p == params25) {
      auto fp = fingerprint(g);
      if (found25.emplace(fp, g).second) queue.emplace_back(25, g);
    } else if (*p == params26) {
      auto fp = fingerprint(g);
      if (found26.emplace(fp, g).second) queue.emplace_back(26, g);
    }
  };

  add(paley_25());
  for (const Graph& g : latin_square_graphs()) add(g);
  auto sts1 = cyclic_sts13();
  if (!is_sts13(sts1)) {
    std::cerr << "internal error: cyclic STS(13) construction failed\n";
    return 1;
  }
  add(block_graph_complement(sts1));
  if (auto sts2 = pasch_trade(sts1)) add(block_graph_complement(*sts2));

  std::set<std::vector<Fingerprint>> seen_two_graphs;
  auto process_two_graph = [&](const Seidel& s) {
    std::vector<Graph> descendants;
    std::vector<Fingerprint> key;
    for (size_t p = 0; p < s.size(); ++p) {
      Graph d = descendant(s, static_cast<int>(p));
      if (qpe::validate_srg(d) == std::optional{params25}) {
        key.push_back(fingerprint(d));
        descendants.push_back(std::move(d));
      }
    }
    std::sort(key.begin(), key.end());
    if (!seen_two_graphs.insert(key).second) return;
    for (const Graph& d : descendants) add(d);
    for (int rho : {5, -5}) {
      for (const auto& eps : regular_switchings(s, rho)) {
        Graph g = switched_graph(s, eps);
        add(rho == 5 ? g : g.complement());
      }
    }
  };

  while (!queue.empty()) {
    auto [n, g] = queue.back();
    queue.pop_back();
    if (n == 25) {
      add(g.complement());
      process_two_graph(extend_by_isolated_point(g));
    } else {
      process_two_graph(seidel_of(g));
    }
    std::cerr << "srg(25,12,5,6): " << found25.size()
              << "  srg(26,10,3,4): " << found26.size()
              << "  two-graphs: " << seen_two_graphs.size() << "\n";
  }

  if (found25.size() != 15 || found26.size() != 10) {
    std::cerr << "closure incomplete: expected 15 and 10 classes\n";
    return 1;
  }

  auto dump = [&](const std::map<Fingerprint, Graph>& graphs,
                  const std::string& name) {
    std::vector<std::string> lines;
    for (const auto& [fp, g] : graphs) lines.push_back(qpe::write_graph6(g));
    std::sort(lines.begin(), lines.end());
    std::filesystem::create_directories(out_dir);
    std::ofstream out(out_dir + "/" + name, std::ios::binary);
    for (const auto& line : lines) out << line << "\n";
    std::cout << out_dir << "/" << name << ": " << lines.size() << " graphs\n";
  };
  dump(found25, "srg-25-12-5-6.g6");
  dump(found26, "srg-26-10-3-4.g6");
  return 0;
}
