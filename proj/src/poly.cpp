#include "distspec/poly.hpp"

#include <algorithm>
#include <cmath>

namespace distspec {

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

double QPoly::eval(double x) const {
  double acc = 0;
  for (size_t k = c.size(); k-- > 0;) acc = acc * x + rat_to_double(c[k]);
  return acc;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly{};
  std::vector<Rat> out(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
  return QPoly(std::move(out));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> out(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) out[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) out[i] += o.c[i];
  return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> out(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) out[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) out[i] -= o.c[i];
  return QPoly(std::move(out));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& v = c[k];
    if (v == 0) continue;
    Rat av = v < 0 ? Rat(-v) : v;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    bool unit = (av == 1);
    if (k == 0 || !unit) out += rat_to_string(av);
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::vector<std::string> poly_strings(const QPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.c.size());
  for (const Rat& v : p.c) out.push_back(rat_to_string(v));
  return out;
}

QPoly poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(rat_from_string(s));
  return QPoly(std::move(c));
}

QPoly poly_from_roots(const std::vector<std::pair<Rat, int>>& roots) {
  QPoly p({Rat(1)});
  for (const auto& [r, m] : roots) {
    QPoly lin({Rat(-r), Rat(1)});
    for (int i = 0; i < m; ++i) p = p * lin;
  }
  return p;
}

QPoly derivative(const QPoly& p) {
  if (p.c.size() <= 1) return QPoly{};
  std::vector<Rat> out(p.c.size() - 1);
  for (size_t k = 1; k < p.c.size(); ++k) out[k - 1] = p.c[k] * make_rat((long)k);
  return QPoly(std::move(out));
}

namespace {

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  Rat lead = p.c.back();
  if (lead == 1) return p;
  std::vector<Rat> out(p.c);
  for (auto& v : out) v /= lead;
  return QPoly(std::move(out));
}

// remainder of num by den (den non-zero)
QPoly poly_mod(QPoly num, const QPoly& den) {
  int dd = den.degree();
  Rat lead = den.c.back();
  while (num.degree() >= dd) {
    Rat f = num.c.back() / lead;
    int shift = num.degree() - dd;
    for (int k = 0; k <= dd; ++k) num.c[k + shift] -= f * den.c[k];
    num.trim();
  }
  return num;
}

}  // namespace

QPoly poly_divide_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (num.is_zero()) return QPoly{};
  int dd = den.degree();
  if (num.degree() < dd) throw InvalidArgument("inexact polynomial division");
  std::vector<Rat> q((size_t)(num.degree() - dd) + 1, Rat(0));
  QPoly rem = num;
  Rat lead = den.c.back();
  while (!rem.is_zero() && rem.degree() >= dd) {
    Rat f = rem.c.back() / lead;
    int shift = rem.degree() - dd;
    q[shift] = f;
    for (int k = 0; k <= dd; ++k) rem.c[k + shift] -= f * den.c[k];
    rem.trim();
  }
  if (!rem.is_zero()) throw InvalidArgument("inexact polynomial division");
  return QPoly(std::move(q));
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  QPoly x = monic(a), y = monic(b);
  while (!y.is_zero()) {
    QPoly r = monic(poly_mod(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return monic(p);
  QPoly g = poly_gcd(p, derivative(p));
  if (g.degree() <= 0) return monic(p);
  return monic(poly_divide_exact(p, g));
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial");
  std::vector<std::pair<QPoly, int>> out;
  Rat lead = p.c.back();
  QPoly f = monic(p);
  if (f.degree() == 0) {
    if (lead != 1) out.push_back({QPoly::constant(lead), 1});
    return out;
  }
  // Yun's algorithm
  QPoly df = derivative(f);
  QPoly g = poly_gcd(f, df);
  QPoly b = poly_divide_exact(f, g);
  QPoly d = poly_divide_exact(df, g) - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    QPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = poly_divide_exact(b, a);
    d = poly_divide_exact(d, a) - derivative(b);
    ++i;
  }
  if (lead != 1) out.push_back({QPoly::constant(lead), 1});
  return out;
}

// ---------------------------------------------------------------------------
// fraction-free determinant evaluation + exact interpolation

namespace {

Int det_bareiss_mpz_p(std::vector<Int> m, int n) {
  if (n == 0) return 1;
  Int prev = 1, t1, t2;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[(size_t)k * n + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[(size_t)i * n + k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j)
        std::swap(m[(size_t)k * n + j], m[(size_t)piv * n + j]);
      sign = -sign;
    }
    Int& piv = m[(size_t)k * n + k];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int& x = m[(size_t)i * n + j];
        mpz_mul(t1.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        mpz_mul(t2.get_mpz_t(), m[(size_t)i * n + k].get_mpz_t(),
                m[(size_t)k * n + j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(x.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m[(size_t)i * n + k] = 0;
    }
    prev = piv;
  }
  Int d = m[(size_t)(n - 1) * n + (n - 1)];
  return sign > 0 ? d : Int(-d);
}

// fast path; caller guarantees all intermediates fit (see hadamard_safe)
__int128 det_bareiss_i128(std::vector<__int128> m, int n) {
  if (n == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[(size_t)k * n + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[(size_t)i * n + k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j)
        std::swap(m[(size_t)k * n + j], m[(size_t)piv * n + j]);
      sign = -sign;
    }
    __int128 pv = m[(size_t)k * n + k];
    for (int i = k + 1; i < n; ++i) {
      __int128 mik = m[(size_t)i * n + k];
      for (int j = k + 1; j < n; ++j) {
        m[(size_t)i * n + j] =
            (m[(size_t)i * n + j] * pv - mik * m[(size_t)k * n + j]) / prev;
      }
      m[(size_t)i * n + k] = 0;
    }
    prev = pv;
  }
  return sign * m[(size_t)(n - 1) * n + (n - 1)];
}

// Every Bareiss intermediate is (a product of two) minors of the input, and a
// k x k minor is Hadamard-bounded by the product of the k largest row norms,
// which for integer matrices without zero rows is at most the full-matrix
// bound. Safe for int128 when bound^2 stays below 2^126.
bool hadamard_safe(const std::vector<long long>& entries, int n) {
  long double prod = 1.0L;
  for (int i = 0; i < n; ++i) {
    long double s = 0.0L;
    for (int j = 0; j < n; ++j) {
      long double e = (long double)entries[(size_t)i * n + j];
      s += e * e;
    }
    prod *= sqrtl(s < 1.0L ? 1.0L : s);
    if (prod > 2e18L) return false;  // bound^2 would pass 4e36 < 2^126 margin
  }
  return true;
}

Int det_exact_ll(const std::vector<long long>& entries, int n) {
  if (hadamard_safe(entries, n)) {
    std::vector<__int128> w(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) w[i] = entries[i];
    __int128 d = det_bareiss_i128(std::move(w), n);
    bool neg = d < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-d) : (unsigned __int128)d;
    Int hi((unsigned long)(u >> 64)), lo((unsigned long)(u & ~0ULL));
    Int v = (hi << 64) + lo;
    return neg ? Int(-v) : v;
  }
  std::vector<Int> w(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) w[i] = (long)entries[i];
  return det_bareiss_mpz_p(std::move(w), n);
}

// exact Newton interpolation through (xs[i], vals[i])
QPoly newton_interpolate(const std::vector<Rat>& xs, std::vector<Rat> dd) {
  size_t n = xs.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  QPoly p = QPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    p = p * QPoly({Rat(-xs[i]), Rat(1)}) + QPoly::constant(dd[i]);
  }
  return p;
}

}  // namespace

QPoly char_poly_exact(const IMat& m) {
  int n = m.n;
  if (n == 0) return QPoly({Rat(1)});
  std::vector<Rat> xs, vals;
  std::vector<long long> w(m.a.size());
  for (int j = 0; j <= n; ++j) {
    long long x = j - n / 2;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        w[(size_t)i * n + k] = (i == k ? x : 0) - m.at(i, k);
    xs.push_back(make_rat((long)x));
    vals.push_back(Rat(det_exact_ll(w, n)));
  }
  QPoly p = newton_interpolate(xs, vals);
  if (p.degree() != n || p.c.back() != 1)
    throw InvalidArgument("characteristic polynomial interpolation failed");
  return p;
}

QPoly charpoly_berkowitz(const QMat& m) {
  int n = m.n;
  if (n == 0) return QPoly({Rat(1)});
  // c holds the char poly of the leading k x k block, highest degree first
  std::vector<Rat> c{Rat(1)};
  std::vector<Rat> v, nv, t;
  for (int k = 1; k <= n; ++k) {
    t.assign((size_t)k + 1, Rat(0));
    t[0] = 1;
    t[1] = -m.at(k - 1, k - 1);
    if (k >= 2) {
      v.assign((size_t)k - 1, Rat(0));
      for (int i = 0; i < k - 1; ++i) v[i] = m.at(i, k - 1);
      for (int j = 2; j <= k; ++j) {
        Rat dot(0);
        for (int i = 0; i < k - 1; ++i) dot += m.at(k - 1, i) * v[i];
        t[j] = -dot;
        if (j < k) {
          nv.assign((size_t)k - 1, Rat(0));
          for (int i = 0; i < k - 1; ++i) {
            Rat s(0);
            for (int l = 0; l < k - 1; ++l) s += m.at(i, l) * v[l];
            nv[i] = s;
          }
          v.swap(nv);
        }
      }
    }
    std::vector<Rat> next((size_t)k + 1, Rat(0));
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < c.size() && j <= i; ++j) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return QPoly(std::move(c));
}

QPoly char_poly_exact(const QMat& m) {
  bool integral = true;
  for (const Rat& v : m.a)
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
      integral = false;
      break;
    }
  if (integral) {
    IMat w(m.n);
    for (size_t i = 0; i < m.a.size(); ++i) w.a[i] = m.a[i].get_num().get_si();
    return char_poly_exact(w);
  }
  return charpoly_berkowitz(m);
}

QPoly charpoly_diag_scaled(const std::vector<long long>& t, const IMat& b) {
  int n = b.n;
  if ((int)t.size() != n) throw InvalidArgument("scale vector size mismatch");
  Int tprod = 1;
  for (long long ti : t) {
    if (ti <= 0) throw InvalidArgument("diagonal scale must be positive");
    tprod *= (long)ti;
  }
  if (n == 0) return QPoly({Rat(1)});
  std::vector<Rat> xs, vals;
  std::vector<long long> w(b.a.size());
  for (int j = 0; j <= n; ++j) {
    long long x = j - n / 2;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        w[(size_t)i * n + k] = (i == k ? x * t[i] : 0) - b.at(i, k);
    xs.push_back(make_rat((long)x));
    Rat val(det_exact_ll(w, n), tprod);
    val.canonicalize();
    vals.push_back(val);
  }
  QPoly p = newton_interpolate(xs, vals);
  if (p.degree() != n || p.c.back() != 1)
    throw InvalidArgument("scaled characteristic polynomial failed");
  return p;
}

QPoly generalized_char_poly(const DistanceData& dd, const Rat& r) {
  QMat m(dd.n);
  for (int i = 0; i < dd.n; ++i) {
    for (int j = 0; j < dd.n; ++j) m.at(i, j) = make_rat(dd.dist[i][j]);
    m.at(i, i) -= r * make_rat((long)dd.transmissions[i]);
  }
  return char_poly_exact(m);
}

// ---------------------------------------------------------------------------
// root counting for real-rooted polynomials

namespace {

int sign_changes(const std::vector<Rat>& c) {
  int changes = 0, last = 0;
  for (const Rat& v : c) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia inertia_exact(const QPoly& p, bool real_rooted) {
  if (!real_rooted)
    throw NotSupported("exact inertia requires a real-rooted polynomial");
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no inertia");
  Inertia in;
  size_t f = 0;
  while (f < p.c.size() && p.c[f] == 0) ++f;
  in.n_zero = (int)f;
  std::vector<Rat> rest(p.c.begin() + f, p.c.end());
  in.n_plus = sign_changes(rest);
  for (size_t k = 1; k < rest.size(); k += 2) rest[k] = -rest[k];
  in.n_minus = sign_changes(rest);
  if (in.n_plus + in.n_minus + in.n_zero != p.degree())
    throw NotSupported("polynomial is not real-rooted");
  return in;
}

int distinct_root_count(const QPoly& p) {
  if (p.degree() <= 0) return 0;
  return p.degree() - poly_gcd(p, derivative(p)).degree();
}

int count_roots_above(const QPoly& p, const Rat& threshold) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial");
  // Taylor shift: q(y) = p(y + threshold); positive roots of q are wanted
  std::vector<Rat> b(p.c);
  int n = (int)b.size() - 1;
  for (int k = 0; k < n; ++k)
    for (int j = n - 1; j >= k; --j) b[j] += threshold * b[j + 1];
  return sign_changes(b);
}

int count_roots_equal(const QPoly& p, const Rat& value) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial");
  QPoly cur = p;
  int mult = 0;
  while (cur.degree() >= 1 && cur.eval(value) == 0) {
    // synthetic division by (x - value)
    std::vector<Rat> q((size_t)cur.degree(), Rat(0));
    Rat carry(0);
    for (int k = cur.degree(); k >= 1; --k) {
      carry = cur.c[k] + value * carry;
      q[k - 1] = carry;
    }
    cur = QPoly(std::move(q));
    ++mult;
  }
  return mult;
}

// ---------------------------------------------------------------------------
// coefficient analytics

CoeffMode coeff_mode_from_name(const std::string& s) {
  if (s == "raw") return CoeffMode::Raw;
  if (s == "absolute") return CoeffMode::Absolute;
  if (s == "tree-normalized") return CoeffMode::TreeNormalized;
  throw InvalidArgument("unknown coefficient mode: " + s);
}

CoefficientReport coefficient_analytics(const QPoly& p, CoeffMode mode) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial");
  int n = p.degree();
  CoefficientReport rep;
  rep.mode = mode;
  switch (mode) {
    case CoeffMode::Raw:
      rep.values.assign(p.c.begin(), p.c.end());
      break;
    case CoeffMode::Absolute: {
      if (n < 2) throw InvalidArgument("need degree >= 2 for this window");
      for (int k = 0; k <= n - 2; ++k) rep.values.push_back(abs(p.coeff(k)));
      break;
    }
    case CoeffMode::TreeNormalized: {
      if (n < 2) throw InvalidArgument("need degree >= 2 for this window");
      for (int k = 0; k <= n - 2; ++k) {
        Int num = abs(p.coeff(k).get_num());
        Int den = p.coeff(k).get_den() << (unsigned)(n - k - 2);
        Rat v(num, den);
        v.canonicalize();
        rep.values.push_back(v);
      }
      break;
    }
  }
  rep.log_concave = true;
  for (size_t j = 1; j + 1 < rep.values.size(); ++j)
    if (rep.values[j] * rep.values[j] < rep.values[j - 1] * rep.values[j + 1]) {
      rep.log_concave = false;
      break;
    }
  std::vector<Rat> av;
  av.reserve(rep.values.size());
  for (const Rat& v : rep.values) av.push_back(abs(v));
  rep.unimodal = true;
  bool fell = false;
  for (size_t j = 1; j < av.size(); ++j) {
    if (av[j] < av[j - 1]) fell = true;
    else if (av[j] > av[j - 1] && fell) {
      rep.unimodal = false;
      break;
    }
  }
  rep.peak_index = 0;
  for (size_t j = 1; j < av.size(); ++j)
    if (av[j] > av[(size_t)rep.peak_index]) rep.peak_index = (int)j;
  for (const Rat& v : rep.values)
    rep.sign_pattern += (v > 0 ? '+' : v < 0 ? '-' : '0');
  size_t f = 0;
  while (f < p.c.size() && p.c[f] == 0) ++f;
  rep.abs_nonincreasing = true;
  for (size_t j = f + 1; j < p.c.size(); ++j)
    if (abs(p.c[j]) > abs(p.c[j - 1])) {
      rep.abs_nonincreasing = false;
      break;
    }
  return rep;
}

}  // namespace distspec
