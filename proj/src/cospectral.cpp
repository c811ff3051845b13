#include "distspec/cospectral.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>
#include <utility>

#include "distspec/rational.hpp"

namespace distspec {

namespace {

// Two 31-bit primes; products of reduced residues stay inside uint64.
constexpr uint64_t kPrimes[2] = {2147483647ull, 2147483629ull};

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Gaussian elimination mod p; consumes m (row-major n x n, entries reduced).
uint64_t det_mod(std::vector<uint64_t>& m, int n, uint64_t p) {
  uint64_t det = 1;
  bool neg = false;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[(size_t)r * n + c]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = c; j < n; ++j)
        std::swap(m[(size_t)piv * n + j], m[(size_t)c * n + j]);
      neg = !neg;
    }
    uint64_t pv = m[(size_t)c * n + c];
    det = det * pv % p;
    uint64_t inv = pow_mod(pv, p - 2, p);
    for (int r = c + 1; r < n; ++r) {
      uint64_t f = m[(size_t)r * n + c] * inv % p;
      if (!f) continue;
      for (int j = c; j < n; ++j) {
        uint64_t& x = m[(size_t)r * n + j];
        x = (x + (p - f) * m[(size_t)c * n + j]) % p;
      }
    }
  }
  return neg ? (p - det) % p : det;
}

// Coefficients (constant first) of the degree <= d polynomial through
// (k, y[k]) for k = 0..d, via Newton forward differences mod p (p > d).
std::vector<uint64_t> interp_mod(std::vector<uint64_t> y, uint64_t p) {
  int d = (int)y.size() - 1;
  for (int k = 1; k <= d; ++k)
    for (int i = d; i >= k; --i) y[i] = (y[i] + p - y[i - 1]) % p;
  std::vector<uint64_t> coeff(d + 1, 0), basis{1};
  uint64_t fact_inv = 1;
  for (int k = 0; k <= d; ++k) {
    if (k) fact_inv = fact_inv * pow_mod(k, p - 2, p) % p;
    uint64_t c = y[k] * fact_inv % p;
    for (int j = 0; j < (int)basis.size(); ++j)
      coeff[j] = (coeff[j] + c * basis[j]) % p;
    basis.push_back(0);
    uint64_t kk = k % p;
    for (int j = (int)basis.size() - 1; j >= 1; --j)
      basis[j] = (basis[j - 1] + (p - kk) * basis[j]) % p;
    basis[0] = (p - kk) * basis[0] % p;
  }
  return coeff;
}

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Digest of det(x diag(t) - b) / prod(t) mod p -- the fingerprint
// coefficients reduced mod p and mixed. t is all ones for the integer
// variants, the transmission vector for DNL.
uint64_t digest_mod(const std::vector<long long>& t, const IMat& b,
                    uint64_t p) {
  int n = b.n;
  uint64_t tprod = 1;
  for (long long ti : t) tprod = tprod * (uint64_t)(ti % (long long)p) % p;
  std::vector<uint64_t> y(n + 1);
  std::vector<uint64_t> m((size_t)n * n);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long e = (i == j ? (long long)k * t[i] : 0) - b.at(i, j);
        long long r = e % (long long)p;
        m[(size_t)i * n + j] = (uint64_t)(r < 0 ? r + (long long)p : r);
      }
    y[k] = det_mod(m, n, p);
  }
  std::vector<uint64_t> coeff = interp_mod(std::move(y), p);
  uint64_t inv = pow_mod(tprod, p - 2, p);
  uint64_t h = 0x636f7370u;
  for (uint64_t c : coeff) h = mix64(h ^ (c * inv % p));
  return h;
}

using Key128 = std::pair<uint64_t, uint64_t>;

Key128 fingerprint_key(const DistanceData& dd, Variant v) {
  bool dnl = v == Variant::DNL;
  if (dnl)
    for (long long t : dd.transmissions)
      if (t == 0)
        throw InvalidArgument("normalized variant undefined: zero transmission");
  IMat b = variant_matrix_int(dd, dnl ? Variant::DL : v);
  std::vector<long long> t =
      dnl ? dd.transmissions : std::vector<long long>(dd.n, 1);
  return {digest_mod(t, b, kPrimes[0]), digest_mod(t, b, kPrimes[1])};
}

std::string poly_key_string(const QPoly& p) {
  std::string s;
  for (const std::string& c : poly_strings(p)) {
    s += c;
    s += ';';
  }
  return s;
}

}  // namespace

QPoly cospectral_fingerprint(const Graph& g, Variant v) {
  DistanceData dd = all_pairs_distances(g);
  if (v == Variant::DNL) {
    for (long long t : dd.transmissions)
      if (t == 0)
        throw InvalidArgument("normalized variant undefined: zero transmission");
    return charpoly_diag_scaled(dd.transmissions,
                                variant_matrix_int(dd, Variant::DL));
  }
  return char_poly_exact(variant_matrix_int(dd, v));
}

bool are_cospectral(const Graph& g1, const Graph& g2, Variant v) {
  if (g1.n != g2.n) return false;
  return cospectral_fingerprint(g1, v) == cospectral_fingerprint(g2, v);
}

std::string CensusResult::csv_row() const {
  std::string s = std::to_string(n) + "," + std::to_string(graph_count);
  for (int vi = 0; vi < 4; ++vi) {
    s += ',';
    s += mate_count[vi] < 0 ? std::string("-") : std::to_string(mate_count[vi]);
  }
  return s;
}

CensusResult census(const std::vector<Graph>& catalog,
                    const std::vector<Variant>& variants, int jobs) {
  CensusResult res;
  res.graph_count = (long long)catalog.size();
  res.n = catalog.empty() ? 0 : catalog[0].n;
  for (const Graph& g : catalog)
    if (g.n != res.n) {
      res.n = -1;
      break;
    }

  std::array<bool, 4> want{};
  for (Variant v : variants) want[(int)v] = true;

  // pass 1: modular digests, splittable over threads (disjoint writes)
  size_t ng = catalog.size();
  std::array<std::vector<Key128>, 4> keys;
  for (int vi = 0; vi < 4; ++vi)
    if (want[vi]) keys[vi].resize(ng);
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      DistanceData dd = all_pairs_distances(catalog[i]);
      for (int vi = 0; vi < 4; ++vi)
        if (want[vi]) keys[vi][i] = fingerprint_key(dd, (Variant)vi);
    }
  };
  if (jobs <= 1 || ng < 2) {
    work(0, ng);
  } else {
    size_t nt = std::min<size_t>(jobs, ng);
    size_t chunk = (ng + nt - 1) / nt;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nt; ++t) {
      size_t lo = t * chunk, hi = std::min(ng, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  // pass 2: exact coefficient vectors settle every candidate bucket
  for (int vi = 0; vi < 4; ++vi) {
    if (!want[vi]) continue;
    std::map<Key128, std::vector<size_t>> buckets;
    for (size_t i = 0; i < ng; ++i) buckets[keys[vi][i]].push_back(i);
    std::map<std::string, std::pair<QPoly, std::vector<size_t>>> exact;
    for (const auto& [key, members] : buckets) {
      if (members.size() < 2) continue;
      for (size_t i : members) {
        QPoly p = cospectral_fingerprint(catalog[i], (Variant)vi);
        auto& slot = exact[poly_key_string(p)];
        if (slot.second.empty()) slot.first = std::move(p);
        slot.second.push_back(i);
      }
    }
    long long count = 0;
    for (auto& [key, slot] : exact) {
      if (slot.second.size() < 2) continue;
      CospectralClass cls;
      cls.poly = std::move(slot.first);
      for (size_t i : slot.second)
        cls.members.push_back(canonical_form(catalog[i]));
      std::sort(cls.members.begin(), cls.members.end());
      count += (long long)cls.members.size();
      res.classes[vi].push_back(std::move(cls));
    }
    res.mate_count[vi] = count;
  }
  return res;
}

CensusResult census_of_order(int n, const std::vector<Variant>& variants,
                             int jobs) {
  return census(enumerate_connected_graphs(n), variants, jobs);
}

PreservationReport preservation_report(const Graph& g1, const Graph& g2,
                                       Variant v) {
  if (!are_cospectral(g1, g2, v))
    throw InvalidArgument("preservation report requires a cospectral pair");
  PreservationReport r;
  r.variant = v;
  r.first = structural_report(g1);
  r.second = structural_report(g2);
  DistanceData d1 = all_pairs_distances(g1), d2 = all_pairs_distances(g2);
  r.wiener_first = d1.wiener;
  r.wiener_second = d2.wiener;
  QMat m1 = variant_matrix(d1, v), m2 = variant_matrix(d2, v);
  for (int i = 0; i < m1.n; ++i) r.trace_first += m1.at(i, i);
  for (int i = 0; i < m2.n; ++i) r.trace_second += m2.at(i, i);

  r.edges_equal = r.first.edges == r.second.edges;
  r.diameter_equal = r.first.diameter == r.second.diameter;
  r.girth_equal = r.first.girth == r.second.girth;
  r.planarity_equal = r.first.planar == r.second.planar;
  r.wiener_equal = r.wiener_first == r.wiener_second;
  r.degree_sequence_equal = r.first.degree_sequence == r.second.degree_sequence;
  r.transmission_sequence_equal =
      r.first.transmission_sequence == r.second.transmission_sequence;
  r.transmission_regularity_equal =
      r.first.transmission_regular == r.second.transmission_regular;
  r.complement_components_equal =
      r.first.complement_component_count == r.second.complement_component_count;

  // cospectrality forces the trace; for DL/DQ the trace is twice the Wiener
  // index, so that must carry over too
  if (r.trace_first != r.trace_second)
    throw NotSupported("cospectral pair with unequal traces");
  if ((v == Variant::DL || v == Variant::DQ) && !r.wiener_equal)
    throw NotSupported("DL/DQ-cospectral pair with unequal Wiener index");
  return r;
}

std::vector<CousinSet> find_cousins(const Graph& g) {
  std::vector<CousinSet> out;
  if (g.n < 5) return out;
  DistanceData dd = all_pairs_distances(g);
  const auto& d = dd.dist;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = a; c < g.n; ++c)
        for (int e = c + 1; e < g.n; ++e) {
          if (std::make_pair(c, e) <= std::make_pair(a, b)) continue;
          if (c == a || c == b || e == a || e == b) continue;
          long long sum_ab = 0, sum_ce = 0;
          bool ok = true;
          for (int u = 0; u < g.n && ok; ++u) {
            if (u == a || u == b || u == c || u == e) continue;
            if (d[u][a] != d[u][b] || d[u][c] != d[u][e]) {
              ok = false;
              break;
            }
            sum_ab += d[u][a];
            sum_ce += d[u][c];
          }
          if (ok && sum_ab == sum_ce) out.push_back({a, b, c, e});
        }
  return out;
}

namespace {

using Adj4 = std::array<std::array<bool, 4>, 4>;

Adj4 induced4(const Graph& g, const int* vs) {
  Adj4 h{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h[i][j] = i != j && g.has_edge(vs[i], vs[j]);
  return h;
}

bool iso4_exists(const Adj4& h1, const Adj4& h2) {
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = i + 1; j < 4 && ok; ++j)
        if (h1[i][j] != h2[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_cousin_set(const Graph& g, const DistanceData& dd, const CousinSet& c) {
  int vs[4] = {c.v1, c.v2, c.v3, c.v4};
  for (int i = 0; i < 4; ++i) {
    if (vs[i] < 0 || vs[i] >= g.n) return false;
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) return false;
  }
  long long s1 = 0, s3 = 0;
  for (int u = 0; u < g.n; ++u) {
    if (u == c.v1 || u == c.v2 || u == c.v3 || u == c.v4) continue;
    if (dd.dist[u][c.v1] != dd.dist[u][c.v2]) return false;
    if (dd.dist[u][c.v3] != dd.dist[u][c.v4]) return false;
    s1 += dd.dist[u][c.v1];
    s3 += dd.dist[u][c.v3];
  }
  return s1 == s3;
}

}  // namespace

std::optional<std::pair<Graph, Graph>> cousin_construction(const Graph& g,
                                                           const CousinSet& c,
                                                           CousinForm form) {
  if (g.n < 5) throw InvalidArgument("cousin construction needs order >= 5");
  DistanceData dd = all_pairs_distances(g);
  if (!is_cousin_set(g, dd, c))
    throw InvalidArgument("cousin construction: not a cousin set");

  int e1u, e1v, e2u, e2v;
  if (form == CousinForm::WithinPair) {
    e1u = c.v1, e1v = c.v2, e2u = c.v3, e2v = c.v4;
  } else {
    e1u = c.v1, e1v = c.v3, e2u = c.v2, e2v = c.v4;
  }
  if (g.has_edge(e1u, e1v) || g.has_edge(e2u, e2v)) return std::nullopt;
  Graph g1 = g.with_edge(e1u, e1v), g2 = g.with_edge(e2u, e2v);

  int vs[4] = {c.v1, c.v2, c.v3, c.v4};
  Adj4 h1 = induced4(g1, vs), h2 = induced4(g2, vs);
  if (form == CousinForm::WithinPair) {
    if (!iso4_exists(h1, h2)) return std::nullopt;
  } else {
    static constexpr int kSwap[4] = {3, 2, 1, 0};  // v1<->v4, v2<->v3
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (h1[i][j] != h2[kSwap[i]][kSwap[j]]) return std::nullopt;
    auto common = [&](int x, int y) {
      std::vector<int> out;
      for (int u = 0; u < g.n; ++u)
        if (g.adj[x][u] && g.adj[y][u]) out.push_back(u);
      return out;
    };
    std::vector<int> cx = common(c.v1, c.v2), cy = common(c.v3, c.v4);
    for (int x : cx) {
      bool hit = false;
      for (int y : cy)
        if (g.adj[x][y]) {
          hit = true;
          break;
        }
      if (!hit) return std::nullopt;
    }
    for (int y : cy) {
      bool hit = false;
      for (int x : cx)
        if (g.adj[x][y]) {
          hit = true;
          break;
        }
      if (!hit) return std::nullopt;
    }
  }

  if (is_isomorphic(g1, g2)) return std::nullopt;
  return std::make_pair(std::move(g1), std::move(g2));
}

bool determined_within_catalog(const Graph& g,
                               const std::vector<Graph>& catalog, Variant v) {
  DistanceData dg = all_pairs_distances(g);
  Key128 key = fingerprint_key(dg, v);
  QPoly fp;
  bool have_fp = false;
  for (const Graph& h : catalog) {
    if (h.n != g.n) continue;
    DistanceData dh = all_pairs_distances(h);
    if (fingerprint_key(dh, v) != key) continue;
    if (!have_fp) {
      fp = cospectral_fingerprint(g, v);
      have_fp = true;
    }
    if (cospectral_fingerprint(h, v) == fp && !is_isomorphic(g, h))
      return false;
  }
  return true;
}

}  // namespace distspec
