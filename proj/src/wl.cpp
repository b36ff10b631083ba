#include "qpe/wl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpe/harness.hpp"
#include "qpe/ising.hpp"
#include "qpe/ising_closed_form.hpp"
#include "qpe/walks.hpp"

namespace qpe {

namespace {

// Relabel to contiguous ids in first-occurrence order.
std::vector<int> canonicalize_first_occurrence(const std::vector<int>& colors) {
  std::map<int, int> remap;
  std::vector<int> out(colors.size());
  for (size_t i = 0; i < colors.size(); ++i) {
    auto [it, inserted] = remap.emplace(colors[i], static_cast<int>(remap.size()));
    out[i] = it->second;
  }
  return out;
}

int count_distinct(const std::vector<int>& colors) {
  return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

// One lockstep 1-WL refinement pass over a batch; returns rounds used.
// Keys are (own color, sorted neighbor colors); ids are ranks in the
// sorted key set of the round, shared across the batch.
int refine_wl1_batch(const std::vector<const Graph*>& graphs,
                     std::vector<std::vector<int>>& colors) {
  size_t total_nodes = 0;
  for (const Graph* g : graphs) total_nodes += g->n();

  int rounds = 0;
  int prev_classes = -1;
  while (true) {
    ++rounds;
    using Key = std::vector<int>;
    std::map<Key, int> dict;
    std::vector<std::vector<Key>> keys(graphs.size());
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      keys[gi].resize(g.n());
      for (int v = 0; v < g.n(); ++v) {
        Key k;
        k.push_back(colors[gi][v]);
        for (int u : g.neighbors(v)) k.push_back(colors[gi][u]);
        std::sort(k.begin() + 1, k.end());
        dict.emplace(k, 0);
        keys[gi][v] = std::move(k);
      }
    }
    int id = 0;
    for (auto& [key, value] : dict) value = id++;
    int classes = 0;
    for (size_t gi = 0; gi < graphs.size(); ++gi)
      for (int v = 0; v < graphs[gi]->n(); ++v)
        colors[gi][v] = dict.at(keys[gi][v]);
    classes = static_cast<int>(dict.size());
    if (classes == prev_classes) break;
    prev_classes = classes;
    if (rounds > static_cast<int>(total_nodes) + 1) break;  // safety net
  }
  return rounds;
}

Fingerprint fingerprint_of(const std::vector<int>& colors) {
  Fingerprint f{colors};
  std::sort(f.sorted_colors.begin(), f.sorted_colors.end());
  return f;
}

}  // namespace

int ColorPartition::num_classes() const {
  return count_distinct(colors);
}

std::vector<int> ColorPartition::class_sizes() const {
  std::map<int, int> sizes;
  for (int c : colors) ++sizes[c];
  std::vector<int> out;
  for (auto& [c, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

ColorPartition wl1(const Graph& g) {
  return wl1(g, std::vector<int>(g.n(), 0));
}

ColorPartition wl1(const Graph& g, const std::vector<int>& init) {
  if (static_cast<int>(init.size()) != g.n())
    throw std::invalid_argument("wl1: init length mismatch");
  std::vector<std::vector<int>> colors{canonicalize_first_occurrence(init)};
  std::vector<const Graph*> graphs{&g};
  int rounds = refine_wl1_batch(graphs, colors);
  return ColorPartition{canonicalize_first_occurrence(colors[0]), rounds};
}

std::vector<Fingerprint> wl1_fingerprints(const std::vector<const Graph*>& graphs) {
  std::vector<std::vector<int>> colors;
  for (const Graph* g : graphs) colors.emplace_back(g->n(), 0);
  refine_wl1_batch(graphs, colors);
  std::vector<Fingerprint> out;
  for (auto& c : colors) out.push_back(fingerprint_of(c));
  return out;
}

ColorPartition sum_refine(const Graph& g) {
  using boost::multiprecision::cpp_int;
  int n = g.n();
  std::vector<cpp_int> walk(n, 1);
  std::vector<std::vector<cpp_int>> history;
  for (int k = 1; k <= n; ++k) {
    std::vector<cpp_int> next(n, 0);
    for (int v = 0; v < n; ++v)
      for (int u : g.neighbors(v)) next[v] += walk[u];
    walk = std::move(next);
    history.push_back(walk);
  }
  // partition by the full vector of walk counts; track when it stabilized
  std::vector<int> colors(n, 0);
  int stable_at = 0;
  for (int k = 0; k < n; ++k) {
    std::map<std::pair<int, cpp_int>, int> dict;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      auto [it, ins] =
          dict.emplace(std::make_pair(colors[v], history[k][v]),
                       static_cast<int>(dict.size()));
      next[v] = it->second;
    }
    if (count_distinct(next) != count_distinct(colors)) stable_at = k + 1;
    colors = std::move(next);
  }
  return ColorPartition{canonicalize_first_occurrence(colors), stable_at};
}

Fingerprint gdwl(const Graph& g, const FeatureStack& features, int rounding) {
  return gdwl_fingerprints({&g}, {features}, rounding)[0];
}

std::vector<Fingerprint> gdwl_fingerprints(
    const std::vector<const Graph*>& graphs,
    const std::vector<FeatureStack>& features, int rounding) {
  if (graphs.size() != features.size())
    throw std::invalid_argument("gdwl: one feature stack per graph required");
  if (rounding < 1) throw std::invalid_argument("gdwl: rounding must be >= 1");
  double scale = std::pow(10.0, rounding);
  size_t total_nodes = 0;
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = *graphs[gi];
    total_nodes += g.n();
    if (features[gi].empty())
      throw std::invalid_argument("gdwl: empty feature stack");
    for (const auto& f : features[gi])
      if (f.rows() != g.n() || f.cols() != g.n())
        throw std::invalid_argument("gdwl: feature matrix dimension mismatch");
  }

  std::vector<std::vector<int>> colors;
  for (const Graph* g : graphs) colors.emplace_back(g->n(), 0);

  int prev_classes = -1;
  int rounds = 0;
  while (true) {
    ++rounds;
    // key of v: own color, then the sorted multiset of
    // (rounded feature tuple of (v,u), color of u) over all u
    using Key = std::vector<long long>;
    std::map<Key, int> dict;
    std::vector<std::vector<Key>> keys(graphs.size());
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      const FeatureStack& fs = features[gi];
      size_t K = fs.size();
      keys[gi].resize(g.n());
      for (int v = 0; v < g.n(); ++v) {
        std::vector<std::vector<long long>> entries(g.n());
        for (int u = 0; u < g.n(); ++u) {
          auto& e = entries[u];
          e.reserve(K + 1);
          for (const auto& f : fs) e.push_back(std::llround(f(v, u) * scale));
          e.push_back(colors[gi][u]);
        }
        std::sort(entries.begin(), entries.end());
        Key k;
        k.push_back(colors[gi][v]);
        for (auto& e : entries) k.insert(k.end(), e.begin(), e.end());
        dict.emplace(k, 0);
        keys[gi][v] = std::move(k);
      }
    }
    int id = 0;
    for (auto& [key, value] : dict) value = id++;
    for (size_t gi = 0; gi < graphs.size(); ++gi)
      for (int v = 0; v < graphs[gi]->n(); ++v)
        colors[gi][v] = dict.at(keys[gi][v]);
    int classes = static_cast<int>(dict.size());
    if (classes == prev_classes) break;
    prev_classes = classes;
    if (rounds > static_cast<int>(total_nodes) + 1) break;
  }

  std::vector<Fingerprint> out;
  for (auto& c : colors) out.push_back(fingerprint_of(c));
  return out;
}

ColorPartition occupation_wl(const Graph& g, int k) {
  OccupationBasis basis = occupation_graph(g, k);
  return wl1(basis.graph);
}

DistinguishMethod distinguish_method_from_name(const std::string& name) {
  if (name == "wl1") return DistinguishMethod::Wl1;
  if (name == "gdwl-rrwp") return DistinguishMethod::GdwlRrwp;
  if (name == "qw1-signature") return DistinguishMethod::Qw1Signature;
  if (name == "occupation-wl2") return DistinguishMethod::OccupationWl2;
  if (name == "occupation-wl3") return DistinguishMethod::OccupationWl3;
  if (name == "ising-p1") return DistinguishMethod::IsingP1;
  if (name == "xy2") return DistinguishMethod::Xy2;
  throw std::invalid_argument("unknown distinguish method: " + name);
}

std::string distinguish_method_name(DistinguishMethod m) {
  switch (m) {
    case DistinguishMethod::Wl1: return "wl1";
    case DistinguishMethod::GdwlRrwp: return "gdwl-rrwp";
    case DistinguishMethod::Qw1Signature: return "qw1-signature";
    case DistinguishMethod::OccupationWl2: return "occupation-wl2";
    case DistinguishMethod::OccupationWl3: return "occupation-wl3";
    case DistinguishMethod::IsingP1: return "ising-p1";
    case DistinguishMethod::Xy2: return "xy2";
  }
  throw std::logic_error("unreachable");
}

namespace {

DistinguishResult from_fingerprints(const Fingerprint& f1, const Fingerprint& f2,
                                    DistinguishMethod m) {
  DistinguishResult r;
  r.method = distinguish_method_name(m);
  r.distinguished = !(f1 == f2);
  r.witness = r.distinguished ? "fingerprints differ" : "fingerprints equal";
  return r;
}

DistinguishResult from_distance(double d, double threshold, DistinguishMethod m) {
  DistinguishResult r;
  r.method = distinguish_method_name(m);
  r.distance = d;
  r.distinguished = d > threshold;
  r.witness = (r.distinguished ? "distance above " : "distance within ") +
              std::to_string(threshold);
  return r;
}

}  // namespace

DistinguishResult distinguish(const Graph& g1, const Graph& g2,
                              DistinguishMethod method) {
  if (g1.n() != g2.n()) {
    DistinguishResult r;
    r.method = distinguish_method_name(method);
    r.distinguished = true;
    r.witness = "node counts differ";
    return r;
  }
  switch (method) {
    case DistinguishMethod::Wl1: {
      auto fps = wl1_fingerprints({&g1, &g2});
      return from_fingerprints(fps[0], fps[1], method);
    }
    case DistinguishMethod::GdwlRrwp: {
      auto t1 = rrwp(g1, 8), t2 = rrwp(g2, 8);
      auto fps = gdwl_fingerprints({&g1, &g2}, {t1.slices, t2.slices});
      return from_fingerprints(fps[0], fps[1], method);
    }
    case DistinguishMethod::Qw1Signature: {
      // round to 9 decimals before the multiset comparison so the sort
      // order cannot flip on noise-level differences
      auto quantize = [](const Graph& g) {
        std::vector<std::vector<long long>> sig;
        for (const auto& row : localized_signature(g)) {
          std::vector<long long> q(row.size());
          for (size_t i = 0; i < row.size(); ++i) q[i] = std::llround(row[i] * 1e9);
          sig.push_back(std::move(q));
        }
        std::sort(sig.begin(), sig.end());
        return sig;
      };
      auto s1 = quantize(g1), s2 = quantize(g2);
      double maxdiff = 0.0;
      for (size_t v = 0; v < s1.size(); ++v)
        for (size_t u = 0; u < s1[v].size(); ++u)
          maxdiff = std::max(maxdiff, std::abs(s1[v][u] - s2[v][u]) * 1e-9);
      auto r = from_distance(maxdiff, 0.0, method);
      r.witness = r.distinguished ? "signature multisets differ"
                                  : "signature multisets equal";
      return r;
    }
    case DistinguishMethod::OccupationWl2:
    case DistinguishMethod::OccupationWl3: {
      int k = method == DistinguishMethod::OccupationWl2 ? 2 : 3;
      auto b1 = occupation_graph(g1, k), b2 = occupation_graph(g2, k);
      auto fps = wl1_fingerprints({&b1.graph, &b2.graph});
      return from_fingerprints(fps[0], fps[1], method);
    }
    case DistinguishMethod::IsingP1: {
      auto c1 = correlation_closed_form(g1, IsingModel::uniform(g1), M_PI / 5, 1.0);
      auto c2 = correlation_closed_form(g2, IsingModel::uniform(g2), M_PI / 5, 1.0);
      return from_distance(graph_distance(c1, c2), 1e-8, method);
    }
    case DistinguishMethod::Xy2: {
      auto c1 = xy2_correlations_localized_average(g1, 1.0);
      auto c2 = xy2_correlations_localized_average(g2, 1.0);
      return from_distance(graph_distance(c1, c2), 1e-8, method);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace qpe
