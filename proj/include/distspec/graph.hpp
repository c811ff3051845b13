#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "distspec/rational.hpp"

namespace distspec {

struct Graph {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_, std::vector<bool>(n_, false)) {}

  void add_edge(int u, int v) {
    adj[u][v] = true;
    adj[v][u] = true;
  }
  bool has_edge(int u, int v) const { return adj[u][v]; }
  int degree(int v) const;
  long edge_count() const;
  std::vector<int> neighbors(int v) const;
  Graph complement() const;
  Graph with_edge(int u, int v) const;  // copy + edge
  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

struct Digraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;  // adj[u][v]: arc u->v

  Digraph() = default;
  explicit Digraph(int n_) : n(n_), adj(n_, std::vector<bool>(n_, false)) {}

  void add_arc(int u, int v) { adj[u][v] = true; }
  bool has_arc(int u, int v) const { return adj[u][v]; }
  int out_degree(int v) const;
  long arc_count() const;
  Digraph reverse() const;
  static Digraph from_graph(const Graph& g);  // each edge doubly directed
  bool operator==(const Digraph& o) const { return n == o.n && adj == o.adj; }
};

// BFS all-pairs distances; throws DisconnectedInput when not (strongly) connected.
struct DistanceData {
  int n = 0;
  std::vector<std::vector<int>> dist;
  std::vector<long long> transmissions;     // row sums of dist
  std::vector<long long> in_transmissions;  // column sums; filled for digraphs only
  Rat wiener;                               // half the sum of all entries
  int diameter = 0;
  bool transmission_regular = false;
};

DistanceData all_pairs_distances(const Graph& g);
DistanceData all_pairs_distances(const Digraph& g);
bool is_connected(const Graph& g);
bool is_strongly_connected(const Digraph& g);
int component_count(const Graph& g);

// graph6 / digraph6, bit-exact per the public format definition.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);
Digraph parse_digraph6(const std::string& line);
std::string to_digraph6(const Digraph& g);

// "u v" per line, 0-based vertex ids; blank lines and "#" comments skipped.
Graph parse_edge_list(const std::string& text);
Digraph parse_arc_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Minimum graph6 string over all vertex relabelings. Defined for n <= 10.
std::string canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of connected graphs, 3 <= n <= 9,
// sorted by canonical form. The catalog overload must produce the same multiset.
std::vector<Graph> enumerate_connected_graphs(int n);
std::vector<Graph> read_graph6_catalog(std::istream& in);

// All trees of a given order (n <= 10), one per isomorphism class.
std::vector<Graph> enumerate_trees(int n);

struct StructuralReport {
  long edges = 0;
  int diameter = 0;
  std::optional<int> girth;    // absent for forests
  std::optional<bool> planar;  // absent ("unknown") for n > 12
  std::vector<int> degree_sequence;             // ascending
  std::vector<long long> transmission_sequence; // ascending
  bool transmission_regular = false;
  int complement_component_count = 0;
};
StructuralReport structural_report(const Graph& g);

std::optional<int> girth(const Graph& g);
std::optional<int> digraph_girth(const Digraph& g);  // shortest directed cycle
std::optional<bool> planar(const Graph& g);          // exact for n <= 12

struct BlockDecomposition {
  // biconnected blocks; block_vertices[i] maps block vertex ids to ids in g
  std::vector<std::vector<int>> block_vertices;
  std::vector<Graph> blocks;
  std::vector<int> cut_vertices;
};
BlockDecomposition biconnected_blocks(const Graph& g);

bool is_tree(const Graph& g);
bool is_regular(const Graph& g);
bool is_distance_regular(const Graph& g);

// deterministic samplers used by the randomized property suites
Graph random_connected_graph(int n, std::mt19937& rng);
Digraph random_strongly_connected_digraph(int n, std::mt19937& rng);

}  // namespace distspec
