#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cnspec/bitset.hpp"
#include "cnspec/error.hpp"
#include "cnspec/group.hpp"

namespace cnspec {

/// Simple undirected graph with dense bit-row adjacency.
class CommutingGraph {
 public:
  CommutingGraph() = default;
  explicit CommutingGraph(std::size_t n) : adj_(n, Bitset(n)), labels_(n) {
    for (std::size_t i = 0; i < n; ++i) labels_[i] = std::to_string(i);
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbors(std::size_t u) const { return adj_[u]; }
  std::size_t degree(std::size_t u) const { return adj_[u].count(); }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& row : adj_) e += row.count();
    return e / 2;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_label(std::size_t u, std::string l) { labels_[u] = std::move(l); }

  /// Group element index behind each vertex; empty for ingested graphs.
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  void set_elements(std::vector<std::size_t> e) { elements_ = std::move(e); }

  /// Connected components, each sorted ascending, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const {
    const std::size_t n = vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> comp{s};
      seen[s] = true;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        adj_[comp[i]].for_each([&](std::size_t v) {
          if (!seen[v]) {
            seen[v] = true;
            comp.push_back(v);
          }
        });
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  friend bool operator==(const CommutingGraph& a, const CommutingGraph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> elements_;
};

/// Vertices are the non-central elements in enumeration order.
inline CommutingGraph commuting_graph(const GroupTable& g) {
  const Subset z = center(g);
  std::vector<std::size_t> verts;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!z.test(x)) verts.push_back(x);
  if (verts.empty()) throw Error(ErrorKind::AbelianGroup, "group is abelian; commuting graph has no vertices");
  CommutingGraph graph(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    graph.set_label(i, g.label(verts[i]));
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.commute(verts[i], verts[j])) graph.add_edge(i, j);
  }
  graph.set_elements(std::move(verts));
  return graph;
}

/// l_1 K_{m_1} + ... + l_r K_{m_r}; parts hold (m_i, l_i) with m_i strictly increasing.
struct CliqueDecomposition {
  std::vector<std::pair<std::size_t, std::size_t>> parts;

  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (auto [m, l] : parts) n += m * l;
    return n;
  }

  friend bool operator==(const CliqueDecomposition&, const CliqueDecomposition&) = default;
};

/// Builds a decomposition from (size, count) pairs in any order, merging repeats.
inline CliqueDecomposition make_decomposition(const std::vector<std::pair<std::size_t, std::size_t>>& raw) {
  std::map<std::size_t, std::size_t> merged;
  for (auto [m, l] : raw) {
    if (m == 0 || l == 0) throw Error(ErrorKind::InvalidSizes, "clique sizes and counts must be >= 1");
    merged[m] += l;
  }
  CliqueDecomposition d;
  for (auto [m, l] : merged) d.parts.emplace_back(m, l);
  return d;
}

/// nullopt when some component is not complete.
inline std::optional<CliqueDecomposition> clique_decomposition(const CommutingGraph& g) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& comp : g.components()) {
    const std::size_t m = comp.size();
    std::size_t degree_sum = 0;
    for (auto v : comp) degree_sum += g.degree(v);
    if (degree_sum != m * (m - 1)) return std::nullopt;
    ++counts[m];
  }
  CliqueDecomposition d;
  for (auto [m, l] : counts) d.parts.emplace_back(m, l);
  return d;
}

inline CommutingGraph clique_union_graph(const CliqueDecomposition& d) {
  CommutingGraph g(d.vertex_count());
  std::size_t base = 0;
  for (auto [m, l] : d.parts)
    for (std::size_t c = 0; c < l; ++c) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) g.add_edge(base + i, base + j);
      base += m;
    }
  return g;
}

inline std::string describe(const CliqueDecomposition& d) {
  std::string s;
  for (auto [m, l] : d.parts) {
    if (!s.empty()) s += " + ";
    s += (l == 1 ? "" : std::to_string(l)) + "K" + std::to_string(m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Import / export

inline nlohmann::ordered_json export_edge_list(const CommutingGraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) edges.push_back({u, v});
    });
  return {{"n", g.vertex_count()}, {"edges", edges}, {"labels", g.labels()}};
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string export_dot(const CommutingGraph& g) {
  std::ostringstream os;
  os << "graph commuting {\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u) os << "  " << u << " [label=\"" << dot_escape(g.labels()[u]) << "\"];\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) os << "  " << u << " -- " << v << ";\n";
    });
  os << "}\n";
  return os.str();
}

inline CommutingGraph ingest_graph(const nlohmann::json& doc) {
  auto bad = [](const std::string& m) { return Error(ErrorKind::MalformedInput, m); };
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) throw bad("graph needs an integer \"n\"");
  const long long n = doc["n"].get<long long>();
  if (n < 0) throw bad("\"n\" must be non-negative");
  if (n > static_cast<long long>(kMaxGroupOrder)) throw Error(ErrorKind::TooLarge, "graph has more than 4096 vertices");
  CommutingGraph g(static_cast<std::size_t>(n));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw bad("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw bad("each edge must be a pair of integers");
      const long long u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw bad("edge endpoint out of range");
      g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
  }
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != static_cast<std::size_t>(n)) throw bad("\"labels\" must have n entries");
    for (std::size_t i = 0; i < labels.size(); ++i)
      g.set_label(i, labels[i].is_string() ? labels[i].get<std::string>() : labels[i].dump());
  }
  return g;
}

inline CommutingGraph ingest_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  return ingest_graph(doc);
}

}  // namespace cnspec
