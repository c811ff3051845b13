#include "distspec/addressing.hpp"

#include <algorithm>
#include <array>

#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"
#include "distspec/rational.hpp"

namespace distspec {

int address_distance(const std::string& a, const std::string& b) {
  if (a.size() != b.size())
    throw InvalidArgument("address distance needs equal lengths");
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i)
    d += (a[i] == '0' && b[i] == '1') || (a[i] == '1' && b[i] == '0');
  return d;
}

bool verify_addressing(const Graph& g, const Addressing& addr) {
  if ((int)addr.size() != g.n)
    throw InvalidArgument("addressing needs one word per vertex");
  size_t r = addr.empty() ? 0 : addr[0].size();
  for (const std::string& w : addr) {
    if (w.size() != r) throw InvalidArgument("addressing words must align");
    for (char ch : w)
      if (ch != '0' && ch != '1' && ch != '*')
        throw InvalidArgument("addressing alphabet is {0,1,*}");
  }
  DistanceData dd = all_pairs_distances(g);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (address_distance(addr[i], addr[j]) != dd.dist[i][j]) return false;
  return true;
}

Addressing tree_addressing(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidArgument("tree addressing needs a tree");
  int n = tree.n;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (tree.has_edge(u, v)) edges.emplace_back(u, v);
  Addressing addr(n, std::string(n - 1 < 0 ? 0 : n - 1, '0'));
  // DFS from vertex 0; a child's word is its parent's with the connecting
  // edge's coordinate switched on
  std::vector<int> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!tree.has_edge(u, v) || seen[v]) continue;
      seen[v] = true;
      addr[v] = addr[u];
      auto key = std::minmax(u, v);
      size_t e = std::lower_bound(edges.begin(), edges.end(),
                                  std::make_pair(key.first, key.second)) -
                 edges.begin();
      addr[v][e] = '1';
      stack.push_back(v);
    }
  }
  return addr;
}

namespace {

// symbol order used by the column canonicalization
int sym_rank(char c) { return c == '*' ? 0 : c == '0' ? 1 : 2; }

struct AddressSearch {
  int n = 0, r = 0;
  const std::vector<std::vector<int>>* dist = nullptr;
  std::vector<std::string> words;
  std::vector<std::string> rowbuf;  // one working word per row

  bool place(int v) {
    if (v == n) return true;
    // column state over the rows placed so far: all-* columns may not open
    // with 1, and columns that are still pairwise equal must stay sorted
    std::vector<bool> all_star(r, true);
    for (int c = 0; c < r; ++c)
      for (int u = 0; u < v && all_star[c]; ++u)
        if (words[u][c] != '*') all_star[c] = false;
    std::vector<bool> eq_next(r > 0 ? r - 1 : 0, true);
    for (int c = 0; c + 1 < r; ++c)
      for (int u = 0; u < v && eq_next[c]; ++u)
        if (words[u][c] != words[u][c + 1]) eq_next[c] = false;
    return try_coord(v, 0, all_star, eq_next);
  }

  // fill rowbuf[v][c..], pruning on partial distances
  bool try_coord(int v, int c, const std::vector<bool>& all_star,
                 const std::vector<bool>& eq_next) {
    std::string& cur = rowbuf[v];
    if (c == r) {
      for (int u = 0; u < v; ++u) {
        int d = 0;
        for (int i = 0; i < r; ++i)
          d += (cur[i] == '0' && words[u][i] == '1') ||
               (cur[i] == '1' && words[u][i] == '0');
        if (d != (*dist)[v][u]) return false;
      }
      words.push_back(cur);
      if (place(v + 1)) return true;
      words.pop_back();
      return false;
    }
    static constexpr char kSyms[3] = {'*', '0', '1'};
    for (char s : kSyms) {
      if (s == '1' && all_star[c]) continue;
      if (c > 0 && eq_next[c - 1] && sym_rank(s) < sym_rank(cur[c - 1]))
        continue;
      cur[c] = s;
      // partial-distance feasibility against every placed word: the first c+1
      // coordinates contribute dp, the rest can add at most r-c-1
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        int dp = 0;
        for (int i = 0; i <= c; ++i)
          dp += (cur[i] == '0' && words[u][i] == '1') ||
                (cur[i] == '1' && words[u][i] == '0');
        int want = (*dist)[v][u];
        if (dp > want || dp + (r - c - 1) < want) ok = false;
      }
      if (!ok) continue;
      if (try_coord(v, c + 1, all_star, eq_next)) return true;
    }
    return false;
  }
};

}  // namespace

AddressingResult minimal_addressing_search(const Graph& g, int r_max) {
  if (g.n > 6)
    throw NotSupported("exact addressing search supported for n <= 6");
  DistanceData dd = all_pairs_distances(g);
  Inertia in = inertia_exact(char_poly_exact(distance_matrix(dd)));
  int lb = std::max(in.n_plus, in.n_minus);
  int ub = g.n - 1;
  if (r_max >= 0) ub = std::min(ub, r_max);
  for (int r = lb; r <= ub; ++r) {
    AddressSearch s;
    s.n = g.n;
    s.r = r;
    s.dist = &dd.dist;
    s.rowbuf.assign(g.n, std::string(r, '*'));
    if (s.place(0)) return {r, std::move(s.words)};
  }
  throw NotSupported("no addressing within the requested length cap");
}

}  // namespace distspec
