#include "distspec/graph.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace distspec {

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n; ++u) d += adj[v][u];
  return d;
}

long Graph::edge_count() const {
  long m = 0;
  for (int v = 0; v < n; ++v) m += degree(v);
  return m / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (adj[v][u]) out.push_back(u);
  return out;
}

Graph Graph::complement() const {
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) c.adj[u][v] = !adj[u][v];
  return c;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

int Digraph::out_degree(int v) const {
  int d = 0;
  for (int u = 0; u < n; ++u) d += adj[v][u];
  return d;
}

long Digraph::arc_count() const {
  long m = 0;
  for (int v = 0; v < n; ++v) m += out_degree(v);
  return m;
}

Digraph Digraph::reverse() const {
  Digraph r(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adj[u][v]) r.adj[v][u] = true;
  return r;
}

Digraph Digraph::from_graph(const Graph& g) {
  Digraph d(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.adj[u][v]) d.adj[u][v] = true;
  return d;
}

// ---------------------------------------------------------------------------
// distances

namespace {

// single-source BFS over an adjacency-matrix row accessor
template <typename AdjRow>
void bfs(int n, int src, AdjRow&& row, std::vector<int>& dist) {
  dist.assign(n, -1);
  dist[src] = 0;
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v = 0; v < n; ++v)
      if (row(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
}

template <typename AdjRow>
DistanceData distances_impl(int n, AdjRow&& row, bool directed) {
  DistanceData out;
  out.n = n;
  out.dist.assign(n, std::vector<int>(n, 0));
  std::vector<int> d;
  for (int s = 0; s < n; ++s) {
    bfs(n, s, row, d);
    for (int v = 0; v < n; ++v) {
      if (d[v] < 0)
        throw DisconnectedInput(directed ? "digraph is not strongly connected"
                                         : "graph is not connected");
      out.dist[s][v] = d[v];
    }
  }
  out.transmissions.assign(n, 0);
  if (directed) out.in_transmissions.assign(n, 0);
  long long total = 0;
  out.diameter = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      out.transmissions[u] += out.dist[u][v];
      if (directed) out.in_transmissions[v] += out.dist[u][v];
      total += out.dist[u][v];
      out.diameter = std::max(out.diameter, out.dist[u][v]);
    }
  out.wiener = Rat((long)total, 2);
  out.wiener.canonicalize();
  // for digraphs this is out-transmission regularity; in-transmission
  // regularity is not required (and is tracked separately by callers)
  out.transmission_regular =
      std::all_of(out.transmissions.begin(), out.transmissions.end(),
                  [&](long long t) { return t == out.transmissions[0]; });
  return out;
}

}  // namespace

DistanceData all_pairs_distances(const Graph& g) {
  return distances_impl(g.n, [&](int u, int v) { return g.adj[u][v]; }, false);
}

DistanceData all_pairs_distances(const Digraph& g) {
  return distances_impl(g.n, [&](int u, int v) { return g.adj[u][v]; }, true);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<int> d;
  bfs(g.n, 0, [&](int u, int v) { return g.adj[u][v]; }, d);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_strongly_connected(const Digraph& g) {
  if (g.n == 0) return false;
  std::vector<int> d;
  bfs(g.n, 0, [&](int u, int v) { return g.adj[u][v]; }, d);
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) return false;
  bfs(g.n, 0, [&](int u, int v) { return g.adj[v][u]; }, d);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

int component_count(const Graph& g) {
  std::vector<bool> seen(g.n, false);
  int comps = 0;
  std::vector<int> d;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++comps;
    bfs(g.n, s, [&](int u, int v) { return g.adj[u][v]; }, d);
    for (int v = 0; v < g.n; ++v)
      if (d[v] >= 0) seen[v] = true;
  }
  return comps;
}

// ---------------------------------------------------------------------------
// graph6 / digraph6

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";
constexpr const char* kDigraph6Header = ">>digraph6<<";

void check_data_chars(const std::string& s, size_t from) {
  for (size_t i = from; i < s.size(); ++i) {
    unsigned char c = s[i];
    if (c < 63 || c > 126)
      throw ParseError("graph6: character out of range at position " +
                       std::to_string(i));
  }
}

// reads N(n); returns bytes consumed
size_t parse_order(const std::string& s, size_t pos, long& n) {
  if (pos >= s.size()) throw ParseError("graph6: missing order");
  unsigned char c = s[pos];
  if (c != 126) {
    n = c - 63;
    return 1;
  }
  if (pos + 1 < s.size() && (unsigned char)s[pos + 1] == 126) {
    if (pos + 8 > s.size()) throw ParseError("graph6: truncated order");
    n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | ((unsigned char)s[pos + 2 + i] - 63);
    return 8;
  }
  if (pos + 4 > s.size()) throw ParseError("graph6: truncated order");
  n = 0;
  for (int i = 0; i < 3; ++i) n = (n << 6) | ((unsigned char)s[pos + 1 + i] - 63);
  return 4;
}

std::string encode_order(long n) {
  std::string out;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int i = 2; i >= 0; --i) out.push_back((char)(((n >> (6 * i)) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int i = 5; i >= 0; --i) out.push_back((char)(((n >> (6 * i)) & 63) + 63));
  }
  return out;
}

std::vector<bool> unpack_bits(const std::string& s, size_t pos, size_t nbits) {
  size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes)
    throw ParseError("graph6: body has wrong length (expected " +
                     std::to_string(nbytes) + " data characters, got " +
                     std::to_string(s.size() - pos) + ")");
  std::vector<bool> bits(nbits, false);
  for (size_t i = 0; i < nbits; ++i) {
    unsigned char c = (unsigned char)s[pos + i / 6] - 63;
    bits[i] = (c >> (5 - i % 6)) & 1;
  }
  // padding bits must be zero
  if (nbits % 6) {
    unsigned char last = (unsigned char)s.back() - 63;
    unsigned pad = 6 - nbits % 6;
    if (last & ((1u << pad) - 1))
      throw ParseError("graph6: nonzero padding bits");
  }
  return bits;
}

std::string pack_bits(const std::vector<bool>& bits) {
  std::string out((bits.size() + 5) / 6, 0);
  for (size_t i = 0; i < out.size(); ++i) {
    unsigned char c = 0;
    for (int j = 0; j < 6; ++j) {
      size_t b = 6 * i + j;
      c = (c << 1) | (b < bits.size() && bits[b] ? 1 : 0);
    }
    out[i] = (char)(c + 63);
  }
  return out;
}

}  // namespace

Graph parse_graph6(const std::string& line_in) {
  std::string s = line_in;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(kGraph6Header, 0) == 0) s = s.substr(strlen(kGraph6Header));
  if (s.empty()) throw ParseError("graph6: empty input");
  check_data_chars(s, 0);
  long n;
  size_t pos = parse_order(s, 0, n);
  if (n < 0 || n > 100000) throw ParseError("graph6: unsupported order");
  auto bits = unpack_bits(s, pos, (size_t)n * (n - 1) / 2);
  Graph g((int)n);
  size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (bits[k]) g.add_edge(u, v);
  return g;
}

std::string to_graph6(const Graph& g) {
  std::vector<bool> bits;
  bits.reserve((size_t)g.n * (g.n - 1) / 2);
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adj[u][v]);
  return encode_order(g.n) + pack_bits(bits);
}

Digraph parse_digraph6(const std::string& line_in) {
  std::string s = line_in;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(kDigraph6Header, 0) == 0) s = s.substr(strlen(kDigraph6Header));
  if (s.empty() || s[0] != '&') throw ParseError("digraph6: missing '&' prefix");
  check_data_chars(s, 1);
  long n;
  size_t pos = 1 + parse_order(s, 1, n);
  if (n < 0 || n > 10000) throw ParseError("digraph6: unsupported order");
  auto bits = unpack_bits(s, pos, (size_t)n * n);
  Digraph g((int)n);
  size_t k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v, ++k) {
      if (bits[k]) {
        if (u == v) throw ParseError("digraph6: loop bit set");
        g.add_arc(u, v);
      }
    }
  return g;
}

std::string to_digraph6(const Digraph& g) {
  std::vector<bool> bits;
  bits.reserve((size_t)g.n * g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) bits.push_back(g.adj[u][v]);
  return "&" + encode_order(g.n) + pack_bits(bits);
}

namespace {

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v)) throw ParseError("edge list: odd token count on line: " + line);
    std::string extra;
    if (ls >> extra) throw ParseError("edge list: trailing tokens on line: " + line);
    if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id");
    if (u == v) throw ParseError("edge list: loops not allowed");
    if (u > 100000 || v > 100000) throw ParseError("edge list: vertex id too large");
    pairs.emplace_back((int)u, (int)v);
  }
  if (pairs.empty()) throw ParseError("edge list: no edges");
  return pairs;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  auto pairs = parse_pairs(text);
  int n = 0;
  for (auto [u, v] : pairs) n = std::max({n, u + 1, v + 1});
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

Digraph parse_arc_list(const std::string& text) {
  auto pairs = parse_pairs(text);
  int n = 0;
  for (auto [u, v] : pairs) n = std::max({n, u + 1, v + 1});
  Digraph g(n);
  for (auto [u, v] : pairs) g.add_arc(u, v);
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adj[u][v]) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// canonical form: minimum graph6 bit string over all relabelings (n <= 10).
// Branch and bound over positions; equal-prefix branches explored, worse
// pruned. Siblings that are twins produce mirrored subtrees and are skipped.

namespace {

struct SmallGraph {
  int n = 0;
  std::array<uint16_t, 10> rows{};  // rows[v] bit u set iff v~u

  static SmallGraph from(const Graph& g) {
    SmallGraph s;
    s.n = g.n;
    for (int v = 0; v < g.n; ++v)
      for (int u = 0; u < g.n; ++u)
        if (g.adj[v][u]) s.rows[v] |= (uint16_t)(1u << u);
    return s;
  }
  Graph to_graph() const {
    Graph g(n);
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u)
        if (rows[v] >> u & 1) g.add_edge(u, v);
    return g;
  }
};

struct CanonSearch {
  int n;
  int nbits;
  const SmallGraph* g;
  std::array<int, 10> twin_id{};  // same id => transposition is an automorphism
  std::array<int, 10> perm{};     // perm[pos] = original vertex
  uint64_t best;

  void compute_twins() {
    for (int v = 0; v < n; ++v) twin_id[v] = v;
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        uint16_t mask = (uint16_t)~((1u << u) | (1u << v));
        bool open_twin = (g->rows[u] & mask) == (g->rows[v] & mask) &&
                         !((g->rows[u] >> v) & 1);
        bool closed_twin = (g->rows[u] & mask) == (g->rows[v] & mask) &&
                           ((g->rows[u] >> v) & 1);
        if (open_twin || closed_twin) {
          twin_id[v] = twin_id[u];
          break;
        }
      }
  }

  uint64_t run() {
    compute_twins();
    best = ~0ull >> (64 - (nbits ? nbits : 1));
    if (nbits == 0) return 0;
    for (int v = 0; v < n; ++v) {
      bool dup = false;
      for (int u = 0; u < v; ++u)
        if (twin_id[u] == twin_id[v]) { dup = true; break; }
      if (dup) continue;
      perm[0] = v;
      descend(1, 0, (uint16_t)(1u << v));
    }
    return best;
  }

  // place position k; cur = bits of columns 1..k-1 packed low
  void descend(int k, uint64_t cur, uint16_t used) {
    int donebits = k * (k - 1) / 2;
    if (k == n) {
      if (cur < best) best = cur;
      return;
    }
    // candidate columns, ascending
    std::array<std::pair<uint32_t, int>, 10> cand;
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      uint32_t col = 0;
      for (int i = 0; i < k; ++i)
        col = (col << 1) | ((g->rows[v] >> perm[i]) & 1);
      cand[nc++] = {col, v};
    }
    std::sort(cand.begin(), cand.begin() + nc);
    for (int ci = 0; ci < nc; ++ci) {
      auto [col, v] = cand[ci];
      bool dup = false;
      for (int cj = ci - 1; cj >= 0 && cand[cj].first == col; --cj)
        if (twin_id[cand[cj].second] == twin_id[v]) { dup = true; break; }
      if (dup) continue;
      uint64_t next = (cur << k) | col;
      int len = donebits + k;
      if (next > (best >> (nbits - len))) break;  // sorted: rest are worse too
      perm[k] = v;
      descend(k + 1, next, (uint16_t)(used | (1u << v)));
    }
  }
};

uint64_t canonical_bits(const SmallGraph& sg) {
  if (sg.n > 10) throw InvalidArgument("canonical form supported for n <= 10");
  CanonSearch cs;
  cs.n = sg.n;
  cs.nbits = sg.n * (sg.n - 1) / 2;
  cs.g = &sg;
  return cs.run();
}

std::string bits_to_graph6(int n, uint64_t bits) {
  int nbits = n * (n - 1) / 2;
  std::vector<bool> bv(nbits);
  for (int i = 0; i < nbits; ++i) bv[i] = (bits >> (nbits - 1 - i)) & 1;
  return encode_order(n) + pack_bits(bv);
}

SmallGraph bits_to_small(int n, uint64_t bits) {
  SmallGraph s;
  s.n = n;
  int nbits = n * (n - 1) / 2, k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((bits >> (nbits - 1 - k)) & 1) {
        s.rows[u] |= (uint16_t)(1u << v);
        s.rows[v] |= (uint16_t)(1u << u);
      }
  return s;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.n > 10) throw InvalidArgument("canonical form supported for n <= 10");
  return bits_to_graph6(g.n, canonical_bits(SmallGraph::from(g)));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 3 || n > 9)
    throw InvalidArgument("enumeration supported for 3 <= n <= 9");
  // connected graphs of order k+1 arise from connected graphs of order k by
  // attaching a new vertex to a nonempty neighborhood (every connected graph
  // has a non-cut vertex), deduplicated by canonical form
  std::vector<uint64_t> level{0};  // K1
  for (int k = 1; k < n; ++k) {
    std::vector<uint64_t> next;
    std::unordered_set<uint64_t> seen;
    for (uint64_t key : level) {
      SmallGraph parent = bits_to_small(k, key);
      for (uint32_t sub = 1; sub < (1u << k); ++sub) {
        SmallGraph child = parent;
        child.n = k + 1;
        child.rows[k] = (uint16_t)sub;
        for (int u = 0; u < k; ++u)
          if (sub >> u & 1) child.rows[u] |= (uint16_t)(1u << k);
        uint64_t ckey = canonical_bits(child);
        if (seen.insert(ckey).second) next.push_back(ckey);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  std::vector<Graph> out;
  out.reserve(level.size());
  for (uint64_t key : level) out.push_back(bits_to_small(n, key).to_graph());
  return out;
}

std::vector<Graph> read_graph6_catalog(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 10) throw InvalidArgument("tree enumeration supported for n <= 10");
  std::vector<uint64_t> level{0};  // K1
  for (int k = 1; k < n; ++k) {
    std::vector<uint64_t> next;
    std::unordered_set<uint64_t> seen;
    for (uint64_t key : level) {
      SmallGraph parent = bits_to_small(k, key);
      for (int u = 0; u < k; ++u) {
        SmallGraph child = parent;
        child.n = k + 1;
        child.rows[k] = (uint16_t)(1u << u);
        child.rows[u] |= (uint16_t)(1u << k);
        uint64_t ckey = canonical_bits(child);
        if (seen.insert(ckey).second) next.push_back(ckey);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  std::vector<Graph> out;
  out.reserve(level.size());
  for (uint64_t key : level) out.push_back(bits_to_small(n, key).to_graph());
  return out;
}

// ---------------------------------------------------------------------------
// structure

std::optional<int> girth(const Graph& g) {
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < g.n; ++v) {
        if (!g.adj[u][v]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u] && u < v) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<int> digraph_girth(const Digraph& g) {
  int best = -1;
  std::vector<int> d;
  // shortest cycle through any arc u->v is 1 + shortest v->u path
  for (int v = 0; v < g.n; ++v) {
    bfs(g.n, v, [&](int a, int b) { return g.adj[a][b]; }, d);
    for (int u = 0; u < g.n; ++u)
      if (u != v && g.adj[u][v] && d[u] >= 0) {
        int len = d[u] + 1;
        if (best < 0 || len < best) best = len;
      }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

// exhaustive search for a subdivision of K5 or K3,3 (Kuratowski)
struct SubdivisionSearch {
  const Graph& g;
  std::vector<bool> used;  // interior vertices taken by routed paths
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> branch;

  explicit SubdivisionSearch(const Graph& g_) : g(g_), used(g_.n, false) {}

  bool route(size_t idx) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];
    return extend(a, b, idx);
  }

  bool extend(int cur, int b, size_t idx) {
    if (g.adj[cur][b]) {
      if (route(idx + 1)) return true;
    }
    for (int w = 0; w < g.n; ++w) {
      if (!g.adj[cur][w] || used[w]) continue;
      if (std::find(branch.begin(), branch.end(), w) != branch.end()) continue;
      used[w] = true;
      if (extend(w, b, idx)) { used[w] = false; return true; }
      used[w] = false;
    }
    return false;
  }

  bool try_k5() {
    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) >= 4) cand.push_back(v);
    if ((int)cand.size() < 5) return false;
    std::vector<int> pick(5);
    std::function<bool(int, int)> choose = [&](int i, int from) {
      if (i == 5) {
        branch.assign(pick.begin(), pick.end());
        pairs.clear();
        for (int x = 0; x < 5; ++x)
          for (int y = x + 1; y < 5; ++y) pairs.emplace_back(pick[x], pick[y]);
        std::fill(used.begin(), used.end(), false);
        return route(0);
      }
      for (size_t j = from; j < cand.size(); ++j) {
        pick[i] = cand[j];
        if (choose(i + 1, (int)j + 1)) return true;
      }
      return false;
    };
    return choose(0, 0);
  }

  bool try_k33() {
    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) >= 3) cand.push_back(v);
    if ((int)cand.size() < 6) return false;
    std::vector<int> pick(6);
    std::function<bool(int, int)> choose = [&](int i, int from) {
      if (i == 6) {
        // split the six picks into two triples; fix pick[0] on side A
        for (int m = 0; m < 32; ++m) {
          int mask = (m << 1);
          if (__builtin_popcount(mask) != 3) continue;
          branch.assign(pick.begin(), pick.end());
          pairs.clear();
          for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y)
              if (!((mask >> x) & 1) && ((mask >> y) & 1))
                pairs.emplace_back(pick[x], pick[y]);
          std::fill(used.begin(), used.end(), false);
          if (route(0)) return true;
        }
        return false;
      }
      for (size_t j = from; j < cand.size(); ++j) {
        pick[i] = cand[j];
        if (choose(i + 1, (int)j + 1)) return true;
      }
      return false;
    };
    return choose(0, 0);
  }
};

}  // namespace

std::optional<bool> planar(const Graph& g) {
  if (g.n > 12) return std::nullopt;
  if (g.n <= 4) return true;
  if (g.edge_count() > 3L * g.n - 6) return false;
  SubdivisionSearch s(g);
  if (s.try_k5()) return false;
  if (g.n >= 6) {
    SubdivisionSearch t(g);
    if (t.try_k33()) return false;
  }
  return true;
}

StructuralReport structural_report(const Graph& g) {
  StructuralReport r;
  auto dd = all_pairs_distances(g);
  r.edges = g.edge_count();
  r.diameter = dd.diameter;
  r.girth = girth(g);
  r.planar = planar(g);
  for (int v = 0; v < g.n; ++v) r.degree_sequence.push_back(g.degree(v));
  std::sort(r.degree_sequence.begin(), r.degree_sequence.end());
  r.transmission_sequence = dd.transmissions;
  std::sort(r.transmission_sequence.begin(), r.transmission_sequence.end());
  r.transmission_regular = dd.transmission_regular;
  r.complement_component_count = component_count(g.complement());
  return r;
}

BlockDecomposition biconnected_blocks(const Graph& g) {
  BlockDecomposition out;
  std::vector<int> num(g.n, -1), low(g.n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<bool> is_cut(g.n, false);
  int counter = 0;

  auto emit = [&](std::pair<int, int> top_edge) {
    std::vector<std::pair<int, int>> edges;
    while (true) {
      auto e = estack.back();
      estack.pop_back();
      edges.push_back(e);
      if (e == top_edge) break;
    }
    std::vector<int> verts;
    for (auto [a, b] : edges) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    Graph blk((int)verts.size());
    auto idx = [&](int v) {
      return (int)(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (auto [a, b] : edges) blk.add_edge(idx(a), idx(b));
    out.block_vertices.push_back(verts);
    out.blocks.push_back(std::move(blk));
  };

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    num[u] = low[u] = counter++;
    int children = 0;
    for (int v = 0; v < g.n; ++v) {
      if (!g.adj[u][v]) continue;
      if (num[v] < 0) {
        ++children;
        estack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          if (parent >= 0 || children > 1) is_cut[u] = true;
          emit({u, v});
        }
      } else if (v != parent && num[v] < num[u]) {
        estack.emplace_back(u, v);
        low[u] = std::min(low[u], num[v]);
      }
    }
  };

  for (int s = 0; s < g.n; ++s)
    if (num[s] < 0) dfs(s, -1);
  for (int v = 0; v < g.n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.n - 1;
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.n; ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

bool is_distance_regular(const Graph& g) {
  if (!is_regular(g)) return false;
  auto dd = all_pairs_distances(g);
  int diam = dd.diameter;
  std::vector<int> b(diam + 1, -1), c(diam + 1, -1);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) {
      int i = dd.dist[u][v];
      int bi = 0, ci = 0;
      for (int w = 0; w < g.n; ++w)
        if (g.adj[v][w]) {
          if (dd.dist[u][w] == i + 1) ++bi;
          if (dd.dist[u][w] == i - 1) ++ci;
        }
      if (b[i] < 0) { b[i] = bi; c[i] = ci; }
      else if (b[i] != bi || c[i] != ci) return false;
    }
  return true;
}

Graph random_connected_graph(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> pd(0.2, 0.8), coin(0.0, 1.0);
  for (;;) {
    double p = pd(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

Digraph random_strongly_connected_digraph(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> pd(0.25, 0.75), coin(0.0, 1.0);
  for (;;) {
    double p = pd(rng);
    Digraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng) < p) g.add_arc(u, v);
    if (is_strongly_connected(g)) return g;
  }
}

}  // namespace distspec
