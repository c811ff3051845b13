#include "distspec/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

namespace distspec {
namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  int min_params;
  int max_params;
};

const KindInfo kKinds[] = {
    {FamilyKind::CompleteK, "K", 1, 1},
    {FamilyKind::CompleteBipartite, "Kab", 2, 2},
    {FamilyKind::CompleteMultipartite, "multipartite", 2, 64},
    {FamilyKind::Path, "path", 1, 1},
    {FamilyKind::Cycle, "cycle", 1, 1},
    {FamilyKind::Star, "star", 1, 1},
    {FamilyKind::StarPlusEdge, "star+e", 1, 1},
    {FamilyKind::KnMinusE, "K-e", 1, 1},
    {FamilyKind::Hamming, "hamming", 2, 2},
    {FamilyKind::Hypercube, "hypercube", 1, 1},
    {FamilyKind::CocktailParty, "cocktail", 1, 1},
    {FamilyKind::KPK, "KPK", 3, 3},
    {FamilyKind::Petersen, "petersen", 0, 0},
    {FamilyKind::Heawood, "heawood", 0, 0},
    {FamilyKind::Paley, "paley", 1, 1},
    {FamilyKind::SRG, "srg", 4, 4},
    {FamilyKind::Dicycle, "dicycle", 1, 1},
    {FamilyKind::CompleteDigraph, "Kdigraph", 1, 1},
    {FamilyKind::DSRG, "dsrg", 5, 5},
};

const KindInfo& kind_info(FamilyKind k) {
  for (const auto& ki : kKinds)
    if (ki.kind == k) return ki;
  throw InvalidArgument("unknown family kind");
}

std::string lower(std::string s) {
  for (char& c : s) c = (char)std::tolower((unsigned char)c);
  return s;
}

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

// base prime when q = p^k, else 0
long long prime_power_base(long long q) {
  if (q < 2) return 0;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      long long m = q;
      while (m % p == 0) m /= p;
      return m == 1 ? p : 0;
    }
  }
  return q;
}

long long isqrt_ll(long long v) {
  long long r = (long long)std::llround(std::sqrt((double)v));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

long long ipow_checked(long long base, long long exp, long long cap) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > cap / base) throw InvalidArgument("family order too large");
    r *= base;
  }
  return r;
}

[[noreturn]] void bad_params(const FamilySpec& s, const std::string& msg) {
  throw InvalidArgument("family " + s.str() + ": " + msg);
}

void check_params(const FamilySpec& s) {
  const auto& p = s.params;
  const auto& ki = kind_info(s.kind);
  if ((int)p.size() < ki.min_params || (int)p.size() > ki.max_params)
    bad_params(s, "wrong parameter count");
  switch (s.kind) {
    case FamilyKind::CompleteK:
    case FamilyKind::Path:
      if (p[0] < 1) bad_params(s, "n >= 1 required");
      break;
    case FamilyKind::CompleteBipartite:
      if (p[0] < 1 || p[1] < 1) bad_params(s, "part sizes >= 1 required");
      break;
    case FamilyKind::CompleteMultipartite:
      for (long long x : p)
        if (x < 1) bad_params(s, "part sizes >= 1 required");
      break;
    case FamilyKind::Cycle:
      if (p[0] < 3) bad_params(s, "n >= 3 required");
      break;
    case FamilyKind::Star:
      if (p[0] < 2) bad_params(s, "n >= 2 required");
      break;
    case FamilyKind::StarPlusEdge:
      if (p[0] < 4) bad_params(s, "n >= 4 required");
      break;
    case FamilyKind::KnMinusE:
      if (p[0] < 3) bad_params(s, "n >= 3 required");
      break;
    case FamilyKind::Hamming:
      if (p[0] < 1 || p[1] < 2) bad_params(s, "d >= 1 and r >= 2 required");
      ipow_checked(p[1], p[0], 1000000000LL);
      break;
    case FamilyKind::Hypercube:
      if (p[0] < 1) bad_params(s, "d >= 1 required");
      ipow_checked(2, p[0], 1000000000LL);
      break;
    case FamilyKind::CocktailParty:
      if (p[0] < 2) bad_params(s, "m >= 2 required");
      break;
    case FamilyKind::KPK:
      if (p[0] < 1 || p[2] < 1 || p[1] < 2)
        bad_params(s, "n1, n3 >= 1 and n2 >= 2 required");
      break;
    case FamilyKind::Petersen:
    case FamilyKind::Heawood:
      break;
    case FamilyKind::Paley:
      if (p[0] < 5 || p[0] % 4 != 1 || prime_power_base(p[0]) == 0)
        bad_params(s, "q must be a prime power congruent to 1 mod 4, q >= 5");
      break;
    case FamilyKind::SRG: {
      long long n = p[0], k = p[1], a = p[2], c = p[3];
      if (n < 4 || k < 2 || k > n - 2 || a < 0 || a > k - 1 || c < 1 || c > k)
        bad_params(s, "parameters out of range for a connected non-complete srg");
      if (k * (k - a - 1) != (n - k - 1) * c)
        bad_params(s, "counting identity k(k-a-1) = (n-k-1)c fails");
      break;
    }
    case FamilyKind::Dicycle:
    case FamilyKind::CompleteDigraph:
      if (p[0] < 2) bad_params(s, "n >= 2 required");
      break;
    case FamilyKind::DSRG: {
      long long n = p[0], k = p[1], t = p[2], a = p[3], c = p[4];
      if (n < 3 || k < 1 || k > n - 1 || t < 0 || t > k || a < 0 || a > k || c < 1 || c > k)
        bad_params(s, "parameters out of range");
      if (k * k != t + a * k + c * (n - 1 - k))
        bad_params(s, "counting identity k^2 = t + ak + c(n-1-k) fails");
      break;
    }
  }
}

// ---- builders ------------------------------------------------------------

void check_build_order(const FamilySpec& s) {
  if (s.order() > 10000) bad_params(s, "instance too large to materialize");
}

Graph build_complete(long long n) {
  Graph g((int)n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) g.add_edge(u, v);
  return g;
}

Graph build_multipartite(const std::vector<long long>& parts) {
  long long n = std::accumulate(parts.begin(), parts.end(), 0LL);
  Graph g((int)n);
  std::vector<int> block;
  int at = 0;
  for (long long sz : parts) {
    for (long long i = 0; i < sz; ++i) block.push_back(at);
    ++at;
  }
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (block[u] != block[v]) g.add_edge(u, v);
  return g;
}

Graph build_path(long long n) {
  Graph g((int)n);
  for (int v = 0; v + 1 < g.n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph build_cycle(long long n) {
  Graph g((int)n);
  for (int v = 0; v < g.n; ++v) g.add_edge(v, (v + 1) % g.n);
  return g;
}

Graph build_star(long long n) {
  Graph g((int)n);
  for (int v = 1; v < g.n; ++v) g.add_edge(0, v);
  return g;
}

Graph build_hamming(long long d, long long r) {
  long long n = ipow_checked(r, d, 10000);
  Graph g((int)n);
  // words over an r-letter alphabet, adjacent when they differ in one place
  for (int u = 0; u < g.n; ++u) {
    long long pow = 1;
    for (long long pos = 0; pos < d; ++pos) {
      long long digit = (u / pow) % r;
      for (long long other = digit + 1; other < r; ++other)
        g.add_edge(u, (int)(u + (other - digit) * pow));
      pow *= r;
    }
  }
  return g;
}

Graph build_cocktail(long long m) {
  Graph g = build_complete(2 * m);
  for (int i = 0; i < (int)m; ++i) g.adj[2 * i][2 * i + 1] = g.adj[2 * i + 1][2 * i] = false;
  return g;
}

Graph build_kpk(long long n1, long long n2, long long n3) {
  int n = (int)(n1 + n2 + n3 - 2);
  Graph g(n);
  for (int u = 0; u < n1; ++u)
    for (int v = u + 1; v < n1; ++v) g.add_edge(u, v);
  for (int v = (int)n1 - 1; v < (int)(n1 + n2) - 2; ++v) g.add_edge(v, v + 1);
  for (int u = (int)(n1 + n2) - 2; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph build_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

Graph build_heawood() {
  // LCF notation [5, -5]^7: a 14-cycle plus a chord i -- i+5 from every even i
  Graph g(14);
  for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

Graph build_paley(long long q) {
  if (!is_prime(q))
    throw NotSupported("Paley construction shipped for prime q only (got " +
                       std::to_string(q) + ")");
  std::vector<char> is_square((size_t)q, 0);
  for (long long x = 1; x < q; ++x) is_square[(size_t)((x * x) % q)] = 1;
  Graph g((int)q);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (is_square[(size_t)(v - u)]) g.add_edge(u, v);
  return g;
}

Digraph build_dicycle(long long n) {
  Digraph g((int)n);
  for (int v = 0; v < g.n; ++v) g.add_arc(v, (v + 1) % g.n);
  return g;
}

Digraph build_dsrg_8_4_3_1_3() {
  const unsigned rows[8] = {30, 45, 225, 210, 225, 210, 45, 30};
  Digraph g(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if ((rows[i] >> j) & 1u) g.add_arc(i, j);
  // defensive check of the defining identities:
  // A^2 = tI + aA + c(J - I - A) with (k,t,a,c) = (4,3,1,3), AJ = JA = kJ
  for (int i = 0; i < 8; ++i) {
    int out = 0, in = 0;
    for (int j = 0; j < 8; ++j) {
      out += g.adj[i][j];
      in += g.adj[j][i];
    }
    if (out != 4 || in != 4) throw NotSupported("dsrg instance corrupt");
    for (int j = 0; j < 8; ++j) {
      int a2 = 0;
      for (int l = 0; l < 8; ++l) a2 += g.adj[i][l] && g.adj[l][j];
      int want = (i == j ? 3 : 0) + g.adj[i][j] + 3 * ((i != j) - g.adj[i][j]);
      if (a2 != want) throw NotSupported("dsrg instance corrupt");
    }
  }
  return g;
}

// ---- exact spectrum helpers ----------------------------------------------

using XVals = std::vector<std::pair<Surd, int>>;

void add_val(XVals& out, Surd v, long long mult) {
  if (mult <= 0) return;
  for (auto& [w, m] : out)
    if (w.p == v.p && w.q == v.q && w.s == v.s) {
      m += (int)mult;
      return;
    }
  out.push_back({std::move(v), (int)mult});
}

void add_rat(XVals& out, long long num, long long den, long long mult) {
  add_val(out, Surd(make_rat((long)num, (long)den)), mult);
}

Surd surd_of(long long p_num, long long p_den, long long q_num, long long q_den,
             long long s) {
  return Surd(make_rat((long)p_num, (long)p_den), make_rat((long)q_num, (long)q_den),
              Int((long)s));
}

// ---- per-family oracles ----------------------------------------------------

Spectrum oracle_complete(long long n, Variant v) {
  XVals vals;
  switch (v) {
    case Variant::D:
      add_rat(vals, n - 1, 1, 1);
      add_rat(vals, -1, 1, n - 1);
      break;
    case Variant::DQ:
      add_rat(vals, 2 * n - 2, 1, 1);
      add_rat(vals, n - 2, 1, n - 1);
      break;
    case Variant::DL:
      add_rat(vals, 0, 1, 1);
      add_rat(vals, n, 1, n - 1);
      break;
    case Variant::DNL:
      if (n < 2) throw InvalidArgument("DNL undefined: transmission is zero");
      add_rat(vals, 0, 1, 1);
      add_rat(vals, n, n - 1, n - 1);
      break;
  }
  return spectrum_from_exact(vals);
}

Spectrum oracle_star_dl(long long n, Variant v) {
  if (v != Variant::DL)
    throw NoClosedForm("only the DL spectrum of a star has a shipped closed form");
  XVals vals;
  add_rat(vals, 0, 1, 1);
  add_rat(vals, n, 1, 1);
  add_rat(vals, 2 * n - 1, 1, n - 2);
  return spectrum_from_exact(vals);
}

Spectrum oracle_bipartite(long long a, long long b, Variant v) {
  XVals vals;
  switch (v) {
    case Variant::D: {
      long long disc = a * a - a * b + b * b;
      add_rat(vals, -2, 1, a + b - 2);
      add_val(vals, surd_of(a + b - 2, 1, -1, 1, disc), 1);
      add_val(vals, surd_of(a + b - 2, 1, 1, 1, disc), 1);
      break;
    }
    case Variant::DQ: {
      long long disc = 9 * a * a - 14 * a * b + 9 * b * b;
      add_val(vals, surd_of(5 * a + 5 * b - 8, 2, -1, 2, disc), 1);
      add_val(vals, surd_of(5 * a + 5 * b - 8, 2, 1, 2, disc), 1);
      add_rat(vals, 2 * a + b - 4, 1, a - 1);
      add_rat(vals, 2 * b + a - 4, 1, b - 1);
      break;
    }
    case Variant::DL:
      add_rat(vals, 0, 1, 1);
      add_rat(vals, a + b, 1, 1);
      add_rat(vals, 2 * a + b, 1, a - 1);
      add_rat(vals, 2 * b + a, 1, b - 1);
      break;
    case Variant::DNL:
      add_rat(vals, 0, 1, 1);
      add_rat(vals, 2 * (a * a + a * (b - 1) + (b - 1) * b),
              (2 * a + b - 2) * (a + 2 * b - 2), 1);
      add_rat(vals, 2 * b + a, 2 * b + a - 2, b - 1);
      add_rat(vals, 2 * a + b, 2 * a + b - 2, a - 1);
      break;
  }
  return spectrum_from_exact(vals);
}

Spectrum oracle_kn_minus_e(long long n, Variant v) {
  if (n == 3) throw NoClosedForm("K3 minus an edge is a path; no closed form shipped");
  XVals vals;
  switch (v) {
    case Variant::D:
      add_rat(vals, -2, 1, 1);
      add_rat(vals, -1, 1, n - 3);
      add_val(vals, surd_of(n - 1, 2, -1, 2, n * n - 2 * n + 9), 1);
      add_val(vals, surd_of(n - 1, 2, 1, 2, n * n - 2 * n + 9), 1);
      break;
    case Variant::DQ:
      add_rat(vals, n - 2, 1, n - 2);
      add_val(vals, surd_of(3 * n - 2, 2, -1, 2, n * n - 4 * n + 20), 1);
      add_val(vals, surd_of(3 * n - 2, 2, 1, 2, n * n - 4 * n + 20), 1);
      break;
    case Variant::DL:
      add_rat(vals, 0, 1, 1);
      add_rat(vals, n, 1, n - 2);
      add_rat(vals, n + 2, 1, 1);
      break;
    case Variant::DNL:
      add_rat(vals, 0, 1, 1);
      add_rat(vals, n, n - 1, n - 3);
      add_rat(vals, n + 2, n, 1);
      add_rat(vals, n * n - n + 2, n * (n - 1), 1);
      break;
  }
  return spectrum_from_exact(vals);
}

Spectrum oracle_cycle(long long n, Variant v) {
  if (n == 3) return oracle_complete(3, v);
  const double pi = std::acos(-1.0);
  std::vector<double> vals;
  long long t;
  if (n % 2 == 0) {
    long long p = n / 2;
    t = p * p;
    vals.push_back((double)t);
    for (long long j = 0; j < p - 1; ++j) vals.push_back(0.0);
    for (long long j = 1; j <= p; ++j) {
      double s = std::sin(pi * (2 * j - 1) / (double)(2 * p));
      vals.push_back(-1.0 / (s * s));
    }
  } else {
    long long p = (n - 1) / 2;
    t = p * p + p;
    vals.push_back((double)t);
    for (long long j = 1; j <= p; ++j) {
      double c = std::cos(pi * j / (double)n);
      vals.push_back(-0.25 / (c * c));
      double s = std::sin(pi * (2 * j - 1) / (double)(2 * n));
      vals.push_back(-0.25 / (s * s));
    }
  }
  Spectrum d = spectrum_from_reals(vals, 1e-9);
  if (v == Variant::D) return d;
  return transform_tr_spectrum(d, make_rat((long)t), v);
}

Spectrum oracle_hamming(long long d, long long r, Variant v) {
  long long n = ipow_checked(r, d, 1000000000LL);
  long long rp = ipow_checked(r, d - 1, 1000000000LL);
  long long t = d * rp * (r - 1);
  long long md = d * (r - 1);  // multiplicity of the shifted eigenvalue
  XVals vals;
  switch (v) {
    case Variant::D:
      add_rat(vals, t, 1, 1);
      add_rat(vals, -rp, 1, md);
      add_rat(vals, 0, 1, n - md - 1);
      break;
    case Variant::DQ:
      add_rat(vals, 2 * t, 1, 1);
      add_rat(vals, t - rp, 1, md);
      add_rat(vals, t, 1, n - md - 1);
      break;
    case Variant::DL:
      add_rat(vals, 0, 1, 1);
      add_rat(vals, t + rp, 1, md);
      add_rat(vals, t, 1, n - md - 1);
      break;
    case Variant::DNL:
      add_rat(vals, 0, 1, 1);
      add_rat(vals, t + rp, t, md);
      add_rat(vals, 1, 1, n - md - 1);
      break;
  }
  return spectrum_from_exact(vals);
}

Spectrum oracle_star_plus_edge(long long n, Variant v) {
  if (v == Variant::DL) {
    XVals vals;
    add_rat(vals, 0, 1, 1);
    add_rat(vals, n, 1, 1);
    add_rat(vals, 2 * n - 3, 1, 1);
    add_rat(vals, 2 * n - 1, 1, n - 3);
    return spectrum_from_exact(vals);
  }
  if (v == Variant::DNL) {
    if (n < 5)
      throw NoClosedForm("DNL closed form for a star plus an edge needs n >= 5");
    XVals vals;
    add_rat(vals, 0, 1, 1);
    add_rat(vals, 2 * n - 3, 2 * n - 4, 1);
    add_rat(vals, 2 * n - 1, 2 * n - 3, n - 4);
    // the remaining pair solves x^2 + Bx + C from the 2x2 divisor quotient
    QPoly quad;
    quad.c = {make_rat((long)(2 * n * n - n)) / make_rat((long)((n - 1) * (2 * n - 3))),
              make_rat((long)(-8 * n * n + 20 * n - 7)) /
                  make_rat((long)(2 * (n - 2) * (2 * n - 3))),
              Rat(1)};
    Spectrum mu = spectrum_from_poly(quad, true);
    for (const auto& ev : mu.values) add_val(vals, *ev.exact, ev.multiplicity);
    return spectrum_from_exact(vals);
  }
  throw NoClosedForm("no closed form shipped for this variant of a star plus an edge");
}

Spectrum srg_spectrum(long long n, long long k, long long a, long long c, Variant v) {
  long long delta = (a - c) * (a - c) + 4 * (k - c);
  long long num = 2 * k + (n - 1) * (a - c);
  long long t = 2 * n - 2 - k;
  XVals vals;
  add_rat(vals, t, 1, 1);
  long long s = isqrt_ll(delta);
  if (s * s == delta) {
    if (s == 0 || num % s != 0)
      throw InvalidArgument("srg: infeasible eigenvalue multiplicities");
    long long f2 = (n - 1) - num / s;  // 2 * mult of (-4-a+c-sqrt)/2
    long long g2 = (n - 1) + num / s;
    if (f2 < 0 || g2 < 0 || f2 % 2 || g2 % 2)
      throw InvalidArgument("srg: infeasible eigenvalue multiplicities");
    add_rat(vals, -4 - a + c - s, 2, f2 / 2);
    add_rat(vals, -4 - a + c + s, 2, g2 / 2);
  } else {
    // conference case: irrational eigenvalues force equal multiplicities
    if (num != 0 || (n - 1) % 2)
      throw InvalidArgument("srg: irrational eigenvalues with unequal multiplicities");
    add_val(vals, surd_of(-4 - a + c, 2, -1, 2, delta), (n - 1) / 2);
    add_val(vals, surd_of(-4 - a + c, 2, 1, 2, delta), (n - 1) / 2);
  }
  Spectrum d = spectrum_from_exact(vals);
  if (v == Variant::D) return d;
  return transform_tr_spectrum(d, make_rat((long)t), v);
}

Spectrum oracle_dsrg(long long n, long long k, long long tt, long long a, long long c,
                     Variant v) {
  long long delta = (c - a) * (c - a) + 4 * (tt - c);
  if (delta < 0) throw InvalidArgument("dsrg: adjacency eigenvalues not real");
  long long rt = isqrt_ll(delta);
  if (rt * rt != delta)
    throw InvalidArgument("dsrg: irrational adjacency eigenvalues not supported");
  long long trans = 2 * n - 2 - k;
  XVals vals;
  add_rat(vals, trans, 1, 1);
  if (rt == 0) {
    add_rat(vals, -4 - (a - c), 2, n - 1);
  } else {
    long long num = 2 * k + (n - 1) * (a - c);
    if (num % rt != 0) throw InvalidArgument("dsrg: infeasible multiplicities");
    long long m_theta2 = (n - 1) - num / rt;  // 2 * mult of theta = (a-c+rt)/2
    long long m_tau2 = (n - 1) + num / rt;
    if (m_theta2 < 0 || m_tau2 < 0 || m_theta2 % 2 || m_tau2 % 2)
      throw InvalidArgument("dsrg: infeasible multiplicities");
    // distance eigenvalue for adjacency eigenvalue x is -2 - x (diameter 2)
    add_rat(vals, -4 - (a - c) - rt, 2, m_theta2 / 2);
    add_rat(vals, -4 - (a - c) + rt, 2, m_tau2 / 2);
  }
  Spectrum d = spectrum_from_exact(vals);
  if (v == Variant::D) return d;
  return transform_tr_spectrum(d, make_rat((long)trans), v);
}

Spectrum oracle_dicycle(long long n, Variant v) {
  long long t = n * (n - 1) / 2;
  const double pi = std::acos(-1.0);
  Spectrum d;
  EigenValue perron;
  perron.re = (double)t;
  perron.exact = Surd(make_rat((long)t));
  d.values.push_back(perron);
  for (long long j = 1; j < n; ++j) {
    EigenValue ev;
    if (2 * j == n) {
      ev.re = -(double)n / 2.0;
      ev.exact = Surd(make_rat((long)-n, 2));
    } else {
      double half = pi * (double)j / (double)n;
      ev.re = -(double)n / 2.0;
      ev.im = -(double)n / (2.0 * std::tan(half));
    }
    d.values.push_back(ev);
  }
  d.exact = true;
  for (const auto& ev : d.values) d.exact = d.exact && ev.exact.has_value();
  d.sort_values();
  if (v == Variant::D) return d;
  return transform_tr_spectrum(d, make_rat((long)t), v);
}

}  // namespace

// ---- FamilySpec -------------------------------------------------------------

const char* family_kind_name(FamilyKind k) { return kind_info(k).name; }

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = lower(text.substr(0, colon));
  FamilySpec spec;
  bool found = false;
  for (const auto& ki : kKinds)
    if (name == lower(ki.name)) {
      spec.kind = ki.kind;
      found = true;
      break;
    }
  if (!found) {
    // a few natural aliases
    if (name == "complete") spec.kind = FamilyKind::CompleteK;
    else if (name == "bipartite" || name == "completebipartite")
      spec.kind = FamilyKind::CompleteBipartite;
    else if (name == "completemultipartite") spec.kind = FamilyKind::CompleteMultipartite;
    else if (name == "cocktailparty") spec.kind = FamilyKind::CocktailParty;
    else if (name == "cube") spec.kind = FamilyKind::Hypercube;
    else if (name == "starplusedge") spec.kind = FamilyKind::StarPlusEdge;
    else if (name == "kminuse") spec.kind = FamilyKind::KnMinusE;
    else if (name == "completedigraph") spec.kind = FamilyKind::CompleteDigraph;
    else throw ParseError("unknown family '" + text + "'");
  }
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        long long val = std::stoll(item, &used);
        while (used < item.size() && std::isspace((unsigned char)item[used])) ++used;
        if (used != item.size()) throw std::invalid_argument("trailing junk");
        spec.params.push_back(val);
      } catch (const std::exception&) {
        throw ParseError("bad family parameter '" + item + "' in '" + text + "'");
      }
    }
    if (spec.params.empty()) throw ParseError("empty parameter list in '" + text + "'");
  }
  const auto& ki = kind_info(spec.kind);
  if ((int)spec.params.size() < ki.min_params || (int)spec.params.size() > ki.max_params)
    throw ParseError("family " + std::string(ki.name) + " expects " +
                     (ki.min_params == ki.max_params
                          ? std::to_string(ki.min_params)
                          : "at least " + std::to_string(ki.min_params)) +
                     " parameter(s)");
  check_params(spec);
  return spec;
}

std::string FamilySpec::str() const {
  std::string out = kind_info(kind).name;
  for (size_t i = 0; i < params.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

bool FamilySpec::is_digraph() const {
  return kind == FamilyKind::Dicycle || kind == FamilyKind::CompleteDigraph ||
         kind == FamilyKind::DSRG;
}

long long FamilySpec::order() const {
  switch (kind) {
    case FamilyKind::CompleteK:
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Star:
    case FamilyKind::StarPlusEdge:
    case FamilyKind::KnMinusE:
    case FamilyKind::Paley:
    case FamilyKind::SRG:
    case FamilyKind::Dicycle:
    case FamilyKind::CompleteDigraph:
    case FamilyKind::DSRG:
      return params[0];
    case FamilyKind::CompleteBipartite:
      return params[0] + params[1];
    case FamilyKind::CompleteMultipartite:
      return std::accumulate(params.begin(), params.end(), 0LL);
    case FamilyKind::Hamming:
      return ipow_checked(params[1], params[0], 1000000000LL);
    case FamilyKind::Hypercube:
      return ipow_checked(2, params[0], 1000000000LL);
    case FamilyKind::CocktailParty:
      return 2 * params[0];
    case FamilyKind::KPK:
      return params[0] + params[1] + params[2] - 2;
    case FamilyKind::Petersen:
      return 10;
    case FamilyKind::Heawood:
      return 14;
  }
  throw InvalidArgument("unknown family kind");
}

// ---- build -----------------------------------------------------------------

Graph build_graph(const FamilySpec& spec) {
  check_params(spec);
  if (spec.is_digraph())
    throw InvalidArgument("family " + spec.str() + " is directed; use build_digraph");
  check_build_order(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::CompleteK: return build_complete(p[0]);
    case FamilyKind::CompleteBipartite: return build_multipartite({p[0], p[1]});
    case FamilyKind::CompleteMultipartite: return build_multipartite(p);
    case FamilyKind::Path: return build_path(p[0]);
    case FamilyKind::Cycle: return build_cycle(p[0]);
    case FamilyKind::Star: return build_star(p[0]);
    case FamilyKind::StarPlusEdge: {
      Graph g = build_star(p[0]);
      g.add_edge(1, 2);
      return g;
    }
    case FamilyKind::KnMinusE: {
      Graph g = build_complete(p[0]);
      g.adj[0][1] = g.adj[1][0] = false;
      return g;
    }
    case FamilyKind::Hamming: return build_hamming(p[0], p[1]);
    case FamilyKind::Hypercube: return build_hamming(p[0], 2);
    case FamilyKind::CocktailParty: return build_cocktail(p[0]);
    case FamilyKind::KPK: return build_kpk(p[0], p[1], p[2]);
    case FamilyKind::Petersen: return build_petersen();
    case FamilyKind::Heawood: return build_heawood();
    case FamilyKind::Paley: return build_paley(p[0]);
    case FamilyKind::SRG: {
      long long n = p[0], k = p[1], a = p[2], c = p[3];
      if (n == 10 && k == 3 && a == 0 && c == 1) return build_petersen();
      if (n % 2 == 0 && k == n - 2 && a == n - 4 && c == n - 2)
        return build_cocktail(n / 2);
      if (is_prime(n) && n % 4 == 1 && 2 * k == n - 1 && 4 * a == n - 5 &&
          4 * c == n - 1)
        return build_paley(n);
      throw NotSupported("no construction shipped for " + spec.str());
    }
    default: break;
  }
  throw InvalidArgument("unreachable family kind");
}

Digraph build_digraph(const FamilySpec& spec) {
  check_params(spec);
  if (!spec.is_digraph())
    throw InvalidArgument("family " + spec.str() + " is undirected; use build_graph");
  check_build_order(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Dicycle: return build_dicycle(p[0]);
    case FamilyKind::CompleteDigraph: return Digraph::from_graph(build_complete(p[0]));
    case FamilyKind::DSRG:
      if (p == std::vector<long long>{8, 4, 3, 1, 3}) return build_dsrg_8_4_3_1_3();
      throw NotSupported("no construction shipped for " + spec.str());
    default: break;
  }
  throw InvalidArgument("unreachable family kind");
}

// ---- oracle ------------------------------------------------------------------

Spectrum oracle_spectrum(const FamilySpec& spec, Variant v) {
  check_params(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::CompleteK: return oracle_complete(p[0], v);
    case FamilyKind::CompleteBipartite:
      if (p[0] == 1 && p[1] == 1) return oracle_complete(2, v);
      if (p[0] == 1 || p[1] == 1) return oracle_star_dl(p[0] + p[1], v);
      return oracle_bipartite(p[0], p[1], v);
    case FamilyKind::CompleteMultipartite: {
      bool all_one = true, all_equal = true;
      for (long long x : p) {
        all_one = all_one && x == 1;
        all_equal = all_equal && x == p[0];
      }
      long long total = std::accumulate(p.begin(), p.end(), 0LL);
      if (all_one) return oracle_complete(total, v);
      if (p.size() == 2) return oracle_spectrum(FamilySpec::complete_bipartite(p[0], p[1]), v);
      if (all_equal) {
        long long r = p[0], m = (long long)p.size();
        return srg_spectrum(m * r, (m - 1) * r, (m - 2) * r, (m - 1) * r, v);
      }
      throw NoClosedForm("no closed form shipped for mixed-size multipartite graphs");
    }
    case FamilyKind::Path:
      throw NoClosedForm("no closed-form path spectrum shipped");
    case FamilyKind::Cycle: return oracle_cycle(p[0], v);
    case FamilyKind::Star: return oracle_star_dl(p[0], v);
    case FamilyKind::StarPlusEdge: return oracle_star_plus_edge(p[0], v);
    case FamilyKind::KnMinusE: return oracle_kn_minus_e(p[0], v);
    case FamilyKind::Hamming: return oracle_hamming(p[0], p[1], v);
    case FamilyKind::Hypercube: return oracle_hamming(p[0], 2, v);
    case FamilyKind::CocktailParty:
      return srg_spectrum(2 * p[0], 2 * p[0] - 2, 2 * p[0] - 4, 2 * p[0] - 2, v);
    case FamilyKind::KPK:
      throw NoClosedForm("no closed-form KPK spectrum shipped");
    case FamilyKind::Petersen: return srg_spectrum(10, 3, 0, 1, v);
    case FamilyKind::Heawood:
      throw NoClosedForm("no closed-form Heawood spectrum shipped");
    case FamilyKind::Paley:
      return srg_spectrum(p[0], (p[0] - 1) / 2, (p[0] - 5) / 4, (p[0] - 1) / 4, v);
    case FamilyKind::SRG: return srg_spectrum(p[0], p[1], p[2], p[3], v);
    case FamilyKind::Dicycle: return oracle_dicycle(p[0], v);
    case FamilyKind::CompleteDigraph: return oracle_complete(p[0], v);
    case FamilyKind::DSRG: return oracle_dsrg(p[0], p[1], p[2], p[3], p[4], v);
  }
  throw InvalidArgument("unreachable family kind");
}

bool has_closed_form(const FamilySpec& spec, Variant v) {
  try {
    oracle_spectrum(spec, v);
    return true;
  } catch (const NoClosedForm&) {
    return false;
  }
}

// ---- classification ----------------------------------------------------------

ClassificationReport classify(const Graph& g) {
  DistanceData dd = all_pairs_distances(g);
  ClassificationReport r;
  r.n = g.n;
  r.diameter = dd.diameter;
  r.transmission_regular = dd.transmission_regular;
  if (r.transmission_regular) r.transmission = dd.transmissions[0];
  QPoly pd = char_poly_exact(variant_matrix_int(dd, Variant::D));
  r.d_inertia = inertia_exact(pd);
  r.optimistic = r.d_inertia.n_plus > r.d_inertia.n_minus;
  r.one_positive_d_eigenvalue = r.d_inertia.n_plus == 1;
  r.distinct_d_eigenvalues = distinct_root_count(pd);
  r.distance_regular = is_distance_regular(g);
  if (r.distance_regular)
    r.eigenvalue_count_bound_ok = r.distinct_d_eigenvalues <= r.diameter + 1;
  if (r.transmission_regular && g.n >= 2 && dd.transmissions[0] > 0) {
    // the sorting points t (for DQ, DL) and 1 (for DNL) split each variant
    // spectrum exactly the way 0 splits the distance spectrum
    Rat t = make_rat((long)dd.transmissions[0]);
    auto counts = [&](const QPoly& poly, const Rat& pivot) {
      int above = count_roots_above(poly, pivot);
      int at = count_roots_equal(poly, pivot);
      return std::tuple<int, int, int>{above, at, g.n - above - at};
    };
    auto [qa, qe, qb] = counts(char_poly_exact(variant_matrix_int(dd, Variant::DQ)), t);
    auto [la, le, lb] = counts(char_poly_exact(variant_matrix_int(dd, Variant::DL)), t);
    auto [na, ne, nb] = counts(
        charpoly_diag_scaled(dd.transmissions, variant_matrix_int(dd, Variant::DL)),
        Rat(1));
    const Inertia& in = r.d_inertia;
    bool ok = true;
    ok = ok && qa == in.n_plus && qe == in.n_zero && qb == in.n_minus;
    ok = ok && lb == in.n_plus && le == in.n_zero && la == in.n_minus;
    ok = ok && nb == in.n_plus && ne == in.n_zero && na == in.n_minus;
    ok = ok && ((qa > qb) == r.optimistic) && ((lb > la) == r.optimistic) &&
         ((nb > na) == r.optimistic);
    ok = ok && ((qa == 1) == r.one_positive_d_eigenvalue) &&
         ((lb == 1) == r.one_positive_d_eigenvalue) &&
         ((nb == 1) == r.one_positive_d_eigenvalue);
    r.tr_equivalences_checked = true;
    r.tr_equivalences_hold = ok;
  }
  return r;
}

}  // namespace distspec
