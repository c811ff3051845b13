#include "distspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace distspec {

int Spectrum::order() const {
  int s = 0;
  for (const auto& v : values) s += v.multiplicity;
  return s;
}

double Spectrum::spectral_radius() const {
  double r = 0;
  for (const auto& v : values) r = std::max(r, std::hypot(v.re, v.im));
  return r;
}

double Spectrum::max_re() const {
  double r = -1e300;
  for (const auto& v : values) r = std::max(r, v.re);
  return r;
}

double Spectrum::min_re() const {
  double r = 1e300;
  for (const auto& v : values) r = std::min(r, v.re);
  return r;
}

bool Spectrum::all_real(double tol) const {
  for (const auto& v : values)
    if (std::abs(v.im) > tol) return false;
  return true;
}

std::vector<double> Spectrum::reals() const {
  if (!all_real()) throw InvalidArgument("spectrum has non-real values");
  std::vector<double> out;
  for (const auto& v : values)
    for (int k = 0; k < v.multiplicity; ++k) out.push_back(v.re);
  std::sort(out.begin(), out.end());
  return out;
}

void Spectrum::sort_values() {
  std::sort(values.begin(), values.end(), [](const EigenValue& a, const EigenValue& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
}

namespace {

std::string fmt_double(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace

std::string Spectrum::str() const {
  std::string out = "{";
  for (size_t i = values.size(); i-- > 0;) {
    const auto& v = values[i];
    std::string s;
    if (v.exact) {
      s = v.exact->str();
    } else if (std::abs(v.im) > 1e-10) {
      s = "(" + fmt_double(v.re) + (v.im >= 0 ? "+" : "-") +
          fmt_double(std::abs(v.im)) + "i)";
    } else {
      s = fmt_double(v.re);
    }
    if (v.multiplicity > 1) s += "^(" + std::to_string(v.multiplicity) + ")";
    out += s;
    if (i > 0) out += ", ";
  }
  return out + "}";
}

Spectrum spectrum_from_reals(const std::vector<double>& vals, double cluster_radius) {
  Spectrum sp;
  if (vals.empty()) return sp;
  std::vector<double> v(vals);
  std::sort(v.begin(), v.end());
  size_t start = 0;
  for (size_t i = 1; i <= v.size(); ++i) {
    if (i == v.size() || v[i] - v[i - 1] > cluster_radius) {
      double sum = 0;
      for (size_t k = start; k < i; ++k) sum += v[k];
      EigenValue ev;
      ev.re = sum / (double)(i - start);
      ev.multiplicity = (int)(i - start);
      sp.values.push_back(ev);
      start = i;
    }
  }
  return sp;
}

Spectrum spectrum_from_exact(const std::vector<std::pair<Surd, int>>& vals) {
  Spectrum sp;
  sp.exact = true;
  for (const auto& [s, m] : vals) {
    EigenValue ev;
    ev.re = s.value();
    ev.im = 0;
    ev.multiplicity = m;
    ev.exact = s;
    sp.values.push_back(ev);
  }
  sp.sort_values();
  return sp;
}

bool spectra_close(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.order() != b.order()) return false;
  auto expand = [](const Spectrum& s) {
    std::vector<std::pair<double, double>> out;
    for (const auto& v : s.values)
      for (int k = 0; k < v.multiplicity; ++k) out.push_back({v.re, v.im});
    std::sort(out.begin(), out.end());
    return out;
  };
  auto ea = expand(a), eb = expand(b);
  for (size_t i = 0; i < ea.size(); ++i)
    if (std::abs(ea[i].first - eb[i].first) > tol ||
        std::abs(ea[i].second - eb[i].second) > tol)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// cyclic Jacobi

std::vector<double> jacobi_symmetric(std::vector<double> a, int n,
                                     std::vector<double>* vectors) {
  std::vector<double> v;
  if (vectors) {
    v.assign((size_t)n * n, 0.0);
    for (int i = 0; i < n; ++i) v[(size_t)i * n + i] = 1.0;
  }
  double norm = 0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);
  bool done = false;
  for (int sweep = 0; sweep < 100 && !done; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2 * a[(size_t)i * n + j] * a[(size_t)i * n + j];
    if (std::sqrt(off) <= 1e-14 * (1 + norm)) {
      done = true;
      break;
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a[(size_t)p * n + q];
        if (std::abs(apq) <= 1e-18 * (1 + norm)) continue;
        double app = a[(size_t)p * n + p], aqq = a[(size_t)q * n + q];
        double tau = (aqq - app) / (2 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        double c = 1 / std::sqrt(1 + t * t), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[(size_t)k * n + p], akq = a[(size_t)k * n + q];
          a[(size_t)k * n + p] = c * akp - s * akq;
          a[(size_t)k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[(size_t)p * n + k], aqk = a[(size_t)q * n + k];
          a[(size_t)p * n + k] = c * apk - s * aqk;
          a[(size_t)q * n + k] = s * apk + c * aqk;
        }
        if (vectors)
          for (int k = 0; k < n; ++k) {
            double vkp = v[(size_t)k * n + p], vkq = v[(size_t)k * n + q];
            v[(size_t)k * n + p] = c * vkp - s * vkq;
            v[(size_t)k * n + q] = s * vkp + c * vkq;
          }
      }
  }
  {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2 * a[(size_t)i * n + j] * a[(size_t)i * n + j];
    if (std::sqrt(off) > 1e-9 * (1 + norm))
      throw NotSupported("symmetric eigensolver failed to converge");
  }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    return a[(size_t)x * n + x] < a[(size_t)y * n + y];
  });
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[(size_t)idx[i] * n + idx[i]];
  if (vectors) {
    vectors->assign((size_t)n * n, 0.0);
    for (int col = 0; col < n; ++col)
      for (int k = 0; k < n; ++k)
        (*vectors)[(size_t)k * n + col] = v[(size_t)k * n + idx[col]];
  }
  return eig;
}

// ---------------------------------------------------------------------------
// Aberth simultaneous root refinement

std::vector<std::complex<double>> aberth_roots(const QPoly& squarefree) {
  int d = squarefree.degree();
  if (d <= 0) return {};
  using C = std::complex<long double>;
  Rat lead = squarefree.c.back();
  std::vector<long double> a((size_t)d + 1);
  for (int k = 0; k <= d; ++k) {
    Rat ck = squarefree.c[k] / lead;
    // double-plus-residual conversion: keeps ~2x53 bits of the coefficient,
    // which lowers the noise floor enough for the stopping test below
    double hi = rat_to_double(ck);
    Rat res = ck - Rat(hi);
    a[k] = (long double)hi + (long double)rat_to_double(res);
  }
  if (d == 1) return {std::complex<double>((double)-a[0], 0.0)};
  long double r = 0;
  for (int k = 0; k < d; ++k) r = std::max(r, std::abs(a[k]));
  long double R = 1.0L + r;
  const long double pi = 3.141592653589793238462643383279503L;
  std::vector<C> z((size_t)d);
  for (int j = 0; j < d; ++j) {
    long double th = 2 * pi * (long double)j / d + 0.7L;
    z[j] = C(0.85L * R * std::cos(th), 0.85L * R * std::sin(th));
  }
  bool converged = false;
  long double best = 1e30L;
  int best_iter = 0;
  for (int iter = 0; iter < 500 && !converged; ++iter) {
    long double worst = 0;
    for (int j = 0; j < d; ++j) {
      C p(a[d], 0), dp(0, 0);
      for (int k = d - 1; k >= 0; --k) {
        dp = dp * z[j] + p;
        p = p * z[j] + C(a[k], 0);
      }
      if (p == C(0, 0)) continue;
      if (dp == C(0, 0)) {
        z[j] += C(1e-8L, 1e-8L);
        worst = 1;
        continue;
      }
      C newton = p / dp;
      C sum(0, 0);
      for (int k = 0; k < d; ++k)
        if (k != j) sum += C(1, 0) / (z[j] - z[k]);
      C denom = C(1, 0) - newton * sum;
      C delta = (denom == C(0, 0)) ? newton : newton / denom;
      z[j] -= delta;
      worst = std::max(worst, std::abs(delta) / std::max(1.0L, std::abs(z[j])));
    }
    if (worst < best) {
      best = worst;
      best_iter = iter;
    }
    if (worst < 1e-13L) converged = true;
    // ill-conditioned clusters stall at the rounding floor of the
    // coefficients; accept once the corrections stop improving there
    if (!converged && worst < 1e-10L && iter - best_iter > 25) converged = true;
  }
  if (!converged && best > 1e-9L)
    throw NotSupported("root finder failed to converge");
  // final Newton polish in 113-bit arithmetic: on clustered factors the
  // corrections stall while the iterate still sits ~1e-7 from the true root
  // (monomial-basis evaluation error), and quad precision removes that floor
  {
    std::vector<__float128> qa((size_t)d + 1);
    for (int k = 0; k <= d; ++k) {
      Rat ck = squarefree.c[k] / lead;
      double hi = rat_to_double(ck);
      Rat r1 = ck - Rat(hi);
      double mid = rat_to_double(r1);
      double lo = rat_to_double(r1 - Rat(mid));
      qa[k] = (__float128)hi + (__float128)mid + (__float128)lo;
    }
    for (int j = 0; j < d; ++j) {
      __float128 zr = (__float128)z[j].real(), zi = (__float128)z[j].imag();
      for (int step = 0; step < 3; ++step) {
        __float128 pr = qa[d], pi2 = 0, dr = 0, di = 0;
        for (int k = d - 1; k >= 0; --k) {
          __float128 ndr = dr * zr - di * zi + pr;
          __float128 ndi = dr * zi + di * zr + pi2;
          dr = ndr;
          di = ndi;
          __float128 npr = pr * zr - pi2 * zi + qa[k];
          __float128 npi = pr * zi + pi2 * zr;
          pr = npr;
          pi2 = npi;
        }
        __float128 dd2 = dr * dr + di * di;
        if (dd2 == 0) break;
        zr -= (pr * dr + pi2 * di) / dd2;
        zi -= (pi2 * dr - pr * di) / dd2;
      }
      z[j] = C((long double)zr, (long double)zi);
    }
  }
  std::vector<std::complex<double>> out;
  out.reserve((size_t)d);
  for (const C& w : z) {
    double re = (double)w.real(), im = (double)w.imag();
    out.push_back({re, im});
  }
  return out;
}

// ---------------------------------------------------------------------------
// spectra from exact polynomials

namespace {

// positive divisors found by trial division (complete when v <= 10^12)
std::vector<Int> small_divisors(Int v) {
  std::vector<Int> out;
  v = abs(v);
  if (v == 0) return out;
  for (unsigned long d = 1; d <= 1000000; ++d) {
    Int dd((unsigned long)d);
    if (dd * dd > v) break;
    if (mpz_divisible_ui_p(v.get_mpz_t(), d)) {
      out.push_back(dd);
      Int q = v / dd;
      if (q != dd) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// divide out every rational root of f (exactly), returning the roots
std::vector<Rat> peel_rational_roots(QPoly& f) {
  std::vector<Rat> roots;
  while (f.degree() >= 1 && f.c[0] == 0) {
    roots.push_back(Rat(0));
    f.c.erase(f.c.begin());
  }
  if (f.degree() < 1) return roots;
  Int lcm = 1;
  for (const Rat& c : f.c)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int b0 = f.c.front().get_num() * (lcm / f.c.front().get_den());
  Int bd = f.c.back().get_num() * (lcm / f.c.back().get_den());
  auto nums = small_divisors(b0), dens = small_divisors(bd);
  if (nums.size() * dens.size() > 50000) return roots;  // give up, solve numerically
  // Cauchy bound on |root| prunes most divisor combinations up front
  Rat bound(1);
  for (int k = 0; k < f.degree(); ++k) {
    Rat q = abs(f.c[k] / f.c.back());
    if (q > bound) bound = q;
  }
  bound += 1;
  for (const Int& den : dens)
    for (const Int& num : nums)
      for (int sign = -1; sign <= 1; sign += 2) {
        if (f.degree() < 1) return roots;
        Rat cand(sign < 0 ? Int(-num) : num, den);
        cand.canonicalize();
        if (abs(cand) > bound) continue;
        while (f.degree() >= 1 && f.eval(cand) == 0) {
          roots.push_back(cand);
          // synthetic division by (x - cand)
          std::vector<Rat> q((size_t)f.degree(), Rat(0));
          Rat carry(0);
          for (int k = f.degree(); k >= 1; --k) {
            carry = f.c[k] + cand * carry;
            q[k - 1] = carry;
          }
          f = QPoly(std::move(q));
        }
      }
  return roots;
}

// exact roots of a monic degree-2 factor x^2 + bx + c with b, c rational;
// returns empty when the roots are not real
std::vector<Surd> quadratic_surds(const Rat& b, const Rat& c) {
  Rat disc = b * b - make_rat(4) * c;
  if (disc < 0) return {};
  Rat half_b = -b / make_rat(2);
  if (disc == 0) return {Surd(half_b), Surd(half_b)};
  // sqrt(N/M) = sqrt(N*M)/M with N*M a positive integer
  Int nm = disc.get_num() * disc.get_den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), nm.get_mpz_t());
  if (root * root == nm) {
    Rat sq(root, disc.get_den());
    sq.canonicalize();
    Rat h = sq / make_rat(2);
    return {Surd(half_b - h), Surd(half_b + h)};
  }
  Rat q(Int(1), Int(2) * disc.get_den());
  q.canonicalize();
  return {Surd(half_b, -q, nm), Surd(half_b, q, nm)};
}

}  // namespace

Spectrum spectrum_from_poly(const QPoly& p, bool real_roots) {
  Spectrum sp;
  if (p.degree() <= 0) return sp;
  sp.exact = true;
  for (auto& [factor_in, mult] : squarefree_decomposition(p)) {
    QPoly factor = factor_in;
    if (factor.degree() == 0) continue;
    for (const Rat& root : peel_rational_roots(factor)) {
      EigenValue ev;
      ev.exact = Surd(root);
      ev.re = rat_to_double(root);
      ev.multiplicity = mult;
      sp.values.push_back(ev);
    }
    int d = factor.degree();
    if (d <= 0) continue;
    if (d == 2) {
      Rat lead = factor.c[2];
      auto surds = quadratic_surds(factor.c[1] / lead, factor.c[0] / lead);
      if (!surds.empty() && surds[0].value() != surds[1].value()) {
        for (const Surd& s : surds) {
          EigenValue ev;
          ev.exact = s;
          ev.re = s.value();
          ev.multiplicity = mult;
          sp.values.push_back(ev);
        }
        continue;
      }
    }
    sp.exact = false;
    for (const auto& z : aberth_roots(factor)) {
      EigenValue ev;
      ev.re = z.real();
      ev.im = (real_roots || std::abs(z.imag()) < 1e-9 * (1 + std::abs(z.real())))
                  ? 0.0
                  : z.imag();
      ev.multiplicity = mult;
      sp.values.push_back(ev);
    }
  }
  sp.sort_values();
  if (sp.order() != p.degree())
    throw NotSupported("root multiplicity accounting failed");
  return sp;
}

Spectrum eigenvalues(const QMat& m, bool symmetric) {
  if (symmetric && !m.is_symmetric())
    throw InvalidArgument("matrix is not symmetric");
  if (!symmetric) return spectrum_from_poly(char_poly_exact(m), false);
  if (m.n <= 16) return spectrum_from_poly(char_poly_exact(m), true);
  std::vector<double> a(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) a[i] = rat_to_double(m.a[i]);
  auto eig = jacobi_symmetric(std::move(a), m.n);
  return spectrum_from_reals(eig, 1e-7 * std::max(1.0, m.inf_norm()));
}

Spectrum eigenvalues(const QMat& m) { return eigenvalues(m, m.is_symmetric()); }

Spectrum eigenvalues(const IMat& m) { return eigenvalues(QMat::from(m)); }

Spectrum variant_spectrum(const DistanceData& dd, Variant v) {
  bool sym = true;
  for (int i = 0; i < dd.n && sym; ++i)
    for (int j = i + 1; j < dd.n; ++j)
      if (dd.dist[i][j] != dd.dist[j][i]) {
        sym = false;
        break;
      }
  if (v == Variant::DNL) {
    for (long long t : dd.transmissions)
      if (t == 0) throw InvalidArgument("normalized variant undefined: zero transmission");
    QPoly p = charpoly_diag_scaled(
        std::vector<long long>(dd.transmissions.begin(), dd.transmissions.end()),
        variant_matrix_int(dd, Variant::DL));
    return spectrum_from_poly(p, sym);
  }
  IMat m = variant_matrix_int(dd, v);
  if (!sym || m.n <= 16) return spectrum_from_poly(char_poly_exact(m), sym);
  std::vector<double> a(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) a[i] = (double)m.a[i];
  auto eig = jacobi_symmetric(std::move(a), m.n);
  return spectrum_from_reals(eig, 1e-7 * std::max(1.0, (double)m.inf_norm()));
}

Spectrum transform_tr_spectrum(const Spectrum& dist_spec, const Rat& t, Variant v) {
  if (t <= 0) throw InvalidArgument("transmission must be positive");
  Spectrum out;
  out.exact = dist_spec.exact;
  for (const auto& ev : dist_spec.values) {
    EigenValue w = ev;
    // affine map a + b*x applied to value and closed form alike
    Rat a(0), b(1);
    switch (v) {
      case Variant::D: break;
      case Variant::DQ: a = t; b = 1; break;
      case Variant::DL: a = t; b = -1; break;
      case Variant::DNL: a = 1; b = make_rat(-1) / t; break;
    }
    double bd = rat_to_double(b);
    w.re = rat_to_double(a) + bd * ev.re;
    w.im = bd * ev.im;
    if (ev.exact) {
      const Surd& s = *ev.exact;
      w.exact = Surd(a + b * s.p, b * s.q, s.s);
    }
    out.values.push_back(w);
  }
  out.sort_values();
  return out;
}

// ---------------------------------------------------------------------------
// bounds

namespace {

void add_check(BoundsReport& rep, const std::string& name, double lhs, double rhs,
               bool adjudicated, bool tight_expected, double tol,
               const std::string& note = "") {
  BoundCheck c;
  c.name = name;
  c.lhs = lhs;
  c.rhs = rhs;
  c.holds = lhs <= rhs + tol;
  c.tight = std::abs(lhs - rhs) <= tol;
  c.tight_expected = adjudicated ? tight_expected : c.tight;
  c.note = note;
  rep.all_hold = rep.all_hold && c.holds;
  if (adjudicated)
    rep.tightness_consistent =
        rep.tightness_consistent && (c.tight == c.tight_expected);
  rep.checks.push_back(std::move(c));
}

// worst signed violation of the Gershgorin containment: max over eigenvalues
// of min over rows of |lambda - m_ii| - r'_i ; <= 0 means contained
double gershgorin_violation(const QMat& m, const Spectrum& sp) {
  double worst = -1e300;
  for (const auto& ev : sp.values) {
    double best = 1e300;
    for (int i = 0; i < m.n; ++i) {
      double radius = 0;
      for (int j = 0; j < m.n; ++j)
        if (j != i) radius += std::abs(rat_to_double(m.at(i, j)));
      double dist = std::hypot(ev.re - rat_to_double(m.at(i, i)), ev.im);
      best = std::min(best, dist - radius);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

bool perron_positive_vector(const std::vector<double>& mat, int n, double rho) {
  // power iteration; distance matrices are primitive so this converges
  std::vector<double> x((size_t)n, 1.0 / n), y((size_t)n);
  double norm = 1;
  for (int iter = 0; iter < 20000; ++iter) {
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += mat[(size_t)i * n + j] * x[j];
      y[i] = s;
    }
    norm = 0;
    for (double t : y) norm += t * t;
    norm = std::sqrt(norm);
    if (norm == 0) return false;
    double diff = 0;
    for (int i = 0; i < n; ++i) {
      y[i] /= norm;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x = y;
    if (diff < 1e-13) break;
  }
  double lo = 1e300, hi = -1e300, scale = 0;
  for (double t : x) {
    lo = std::min(lo, t);
    hi = std::max(hi, t);
    scale = std::max(scale, std::abs(t));
  }
  bool positive = (lo > 1e-9 * scale) || (hi < -1e-9 * scale);
  return positive && std::abs(norm - rho) <= 1e-6 * std::max(1.0, rho);
}

}  // namespace

BoundsReport verify_bounds(const Graph& g, double tol) {
  if (g.n < 2) throw InvalidArgument("bounds need at least two vertices");
  auto dd = all_pairs_distances(g);
  int n = g.n;
  Spectrum sD = variant_spectrum(dd, Variant::D);
  Spectrum sQ = variant_spectrum(dd, Variant::DQ);
  Spectrum sL = variant_spectrum(dd, Variant::DL);
  Spectrum sN = variant_spectrum(dd, Variant::DNL);
  double rhoD = sD.spectral_radius(), rhoQ = sQ.spectral_radius();
  double rhoL = sL.spectral_radius(), rhoN = sN.spectral_radius();
  long long tmin = dd.transmissions[0], tmax = dd.transmissions[0];
  long long tsum = 0;
  for (long long t : dd.transmissions) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
    tsum += t;
  }
  double tmean = (double)tsum / n;
  bool tr = dd.transmission_regular;
  bool complete = (dd.diameter <= 1);

  BoundsReport rep;
  add_check(rep, "t_min <= t_mean", (double)tmin, tmean, true, tr, tol);
  add_check(rep, "t_mean <= rho_D", tmean, rhoD, true, tr, tol);
  add_check(rep, "rho_D <= t_max", rhoD, (double)tmax, true, tr, tol);
  add_check(rep, "2 t_mean <= rho_DQ", 2 * tmean, rhoQ, true, tr, tol);
  add_check(rep, "rho_DQ <= 2 t_max", rhoQ, 2.0 * tmax, true, tr, tol);
  add_check(rep, "n-1 <= rho_D", n - 1.0, rhoD, true, complete, tol);
  add_check(rep, "2(n-1) <= rho_DQ", 2.0 * (n - 1), rhoQ, true, complete, tol);
  add_check(rep, "n <= rho_DL", (double)n, rhoL, true, complete, tol);
  add_check(rep, "n/(n-1) <= rho_DNL", (double)n / (n - 1), rhoN, true, complete, tol);
  add_check(rep, "rho_DNL <= 2", rhoN, 2.0, true, n == 2, tol,
            "strict for n >= 3");
  add_check(rep, "rho_DL <= 2 t_max", rhoL, 2.0 * tmax, false, false, tol);
  add_check(rep, "psd floor DQ", 0.0, sQ.min_re(), false, false, 1e-9);
  add_check(rep, "psd floor DL", 0.0, sL.min_re(), false, false, 1e-9);
  add_check(rep, "psd floor DNL", 0.0, sN.min_re(), false, false, 1e-9);
  {
    QMat qD = QMat::from(variant_matrix_int(dd, Variant::D));
    add_check(rep, "gershgorin D", gershgorin_violation(qD, sD), 0.0, false, false, tol);
    QMat qQ = QMat::from(variant_matrix_int(dd, Variant::DQ));
    add_check(rep, "gershgorin DQ", gershgorin_violation(qQ, sQ), 0.0, false, false, tol);
    QMat qL = QMat::from(variant_matrix_int(dd, Variant::DL));
    add_check(rep, "gershgorin DL", gershgorin_violation(qL, sL), 0.0, false, false, tol);
    QMat qN = variant_matrix(dd, Variant::DNL);
    add_check(rep, "gershgorin DNL", gershgorin_violation(qN, sN), 0.0, false, false, tol);
  }
  {
    // Perron: rho(D) is a simple eigenvalue with a positive eigenvector
    double second = -1e300;
    int mult_at_max = 0;
    for (const auto& ev : sD.values) {
      if (std::abs(ev.re - sD.max_re()) <= tol)
        mult_at_max += ev.multiplicity;
      else
        second = std::max(second, std::hypot(ev.re, ev.im));
    }
    BoundCheck c;
    c.name = "perron rho_D simple, positive vector";
    c.lhs = second;
    c.rhs = rhoD;
    std::vector<double> mat((size_t)n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mat[(size_t)i * n + j] = (double)dd.dist[i][j];
    c.holds = (mult_at_max == 1) && std::abs(sD.max_re() - rhoD) <= tol &&
              perron_positive_vector(mat, n, rhoD);
    c.tight = false;
    c.tight_expected = false;
    rep.all_hold = rep.all_hold && c.holds;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

BoundsReport verify_bounds(const Digraph& g, double tol) {
  if (g.n < 2) throw InvalidArgument("bounds need at least two vertices");
  auto dd = all_pairs_distances(g);
  int n = g.n;
  Spectrum sD = variant_spectrum(dd, Variant::D);
  Spectrum sQ = variant_spectrum(dd, Variant::DQ);
  Spectrum sL = variant_spectrum(dd, Variant::DL);
  Spectrum sN = variant_spectrum(dd, Variant::DNL);
  double rhoD = sD.spectral_radius(), rhoQ = sQ.spectral_radius();
  double rhoL = sL.spectral_radius(), rhoN = sN.spectral_radius();
  std::vector<long long> ts(dd.transmissions.begin(), dd.transmissions.end());
  std::sort(ts.begin(), ts.end());
  bool tr = dd.transmission_regular;
  bool complete = true;
  for (int i = 0; i < n && complete; ++i)
    if (g.out_degree(i) != n - 1) complete = false;
  bool dicycle = true;
  for (int i = 0; i < n && dicycle; ++i)
    if (g.out_degree(i) != 1) dicycle = false;

  BoundsReport rep;
  add_check(rep, "t_min <= rho_D", (double)ts[0], rhoD, true, tr, tol);
  add_check(rep, "rho_D <= t_max", rhoD, (double)ts[n - 1], true, tr, tol);
  add_check(rep, "sqrt(t1 t2) <= rho_D", std::sqrt((double)ts[0] * ts[1]), rhoD,
            true, tr, tol);
  add_check(rep, "rho_D <= sqrt(t(n-1) t(n))", rhoD,
            std::sqrt((double)ts[n - 2] * ts[n - 1]), true, tr, tol);
  add_check(rep, "2 t_min <= rho_DQ", 2.0 * ts[0], rhoQ, true, tr, tol);
  add_check(rep, "rho_DQ <= 2 t_max", rhoQ, 2.0 * ts[n - 1], true, tr, tol);
  add_check(rep, "t1 + t2 <= rho_DQ", (double)(ts[0] + ts[1]), rhoQ, true, tr, tol);
  add_check(rep, "rho_DQ <= t(n-1) + t(n)", rhoQ, (double)(ts[n - 2] + ts[n - 1]),
            true, tr, tol);
  add_check(rep, "n-1 <= rho_D", n - 1.0, rhoD, true, complete, tol);
  add_check(rep, "2(n-1) <= rho_DQ", 2.0 * (n - 1), rhoQ, true, complete, tol);
  add_check(rep, "rho_D <= n(n-1)/2", rhoD, n * (n - 1) / 2.0, true, dicycle, tol);
  add_check(rep, "rho_DQ <= n(n-1)", rhoQ, (double)n * (n - 1), true, dicycle, tol);
  add_check(rep, "rho_DL <= 2 t_max", rhoL, 2.0 * ts[n - 1], false, false, tol);
  add_check(rep, "rho_DNL <= 2", rhoN, 2.0, false, false, tol);
  add_check(rep, "re floor DQ", 0.0, sQ.min_re(), false, false, 1e-9);
  add_check(rep, "re floor DL", 0.0, sL.min_re(), false, false, 1e-9);
  add_check(rep, "re floor DNL", 0.0, sN.min_re(), false, false, 1e-9);
  {
    QMat qD = QMat::from(variant_matrix_int(dd, Variant::D));
    add_check(rep, "gershgorin D", gershgorin_violation(qD, sD), 0.0, false, false, tol);
    QMat qQ = QMat::from(variant_matrix_int(dd, Variant::DQ));
    add_check(rep, "gershgorin DQ", gershgorin_violation(qQ, sQ), 0.0, false, false, tol);
    QMat qL = QMat::from(variant_matrix_int(dd, Variant::DL));
    add_check(rep, "gershgorin DL", gershgorin_violation(qL, sL), 0.0, false, false, tol);
    QMat qN = variant_matrix(dd, Variant::DNL);
    add_check(rep, "gershgorin DNL", gershgorin_violation(qN, sN), 0.0, false, false, tol);
  }
  {
    double second = -1e300;
    int mult_at_max = 0;
    for (const auto& ev : sD.values) {
      if (std::abs(ev.im) <= tol && std::abs(ev.re - rhoD) <= tol)
        mult_at_max += ev.multiplicity;
      else
        second = std::max(second, std::hypot(ev.re, ev.im));
    }
    BoundCheck c;
    c.name = "perron rho_D simple, positive vector";
    c.lhs = second;
    c.rhs = rhoD;
    std::vector<double> mat((size_t)n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mat[(size_t)i * n + j] = (double)dd.dist[i][j];
    c.holds = (mult_at_max == 1) && perron_positive_vector(mat, n, rhoD);
    rep.all_hold = rep.all_hold && c.holds;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// edge monotonicity and interlacing

namespace {

std::vector<double> variant_reals(const DistanceData& dd, Variant v) {
  return variant_spectrum(dd, v).reals();
}

bool dominates(const std::vector<double>& before, const std::vector<double>& after,
               double tol) {
  for (size_t i = 0; i < before.size(); ++i)
    if (before[i] < after[i] - tol) return false;
  return true;
}

}  // namespace

MonotonicityReport edge_addition_monotonicity(const Graph& g, int u, int v,
                                              double tol) {
  if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n)
    throw InvalidArgument("bad vertex pair");
  if (g.has_edge(u, v)) throw InvalidArgument("edge already present");
  Graph h = g.with_edge(u, v);
  auto db = all_pairs_distances(g), da = all_pairs_distances(h);
  MonotonicityReport rep;
  auto bD = variant_reals(db, Variant::D), aD = variant_reals(da, Variant::D);
  auto bQ = variant_reals(db, Variant::DQ), aQ = variant_reals(da, Variant::DQ);
  auto bL = variant_reals(db, Variant::DL), aL = variant_reals(da, Variant::DL);
  rep.dominance_D = dominates(bD, aD, tol);
  rep.dominance_DQ = dominates(bQ, aQ, tol);
  rep.dominance_DL = dominates(bL, aL, tol);
  rep.rho_D_before = bD.back();
  rep.rho_D_after = aD.back();
  rep.rho_DQ_before = bQ.back();
  rep.rho_DQ_after = aQ.back();
  rep.rho_DL_before = bL.back();
  rep.rho_DL_after = aL.back();
  rep.strict_rho_D = rep.rho_D_before > rep.rho_D_after + tol;
  rep.strict_rho_DQ = rep.rho_DQ_before > rep.rho_DQ_after + tol;
  return rep;
}

MonotonicityReport edge_addition_monotonicity(const Digraph& g, int u, int v,
                                              double tol) {
  if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n)
    throw InvalidArgument("bad vertex pair");
  if (g.adj[u][v]) throw InvalidArgument("arc already present");
  Digraph h = g;
  h.add_arc(u, v);
  auto db = all_pairs_distances(g), da = all_pairs_distances(h);
  MonotonicityReport rep;
  auto rho = [](const DistanceData& dd, Variant v2) {
    return variant_spectrum(dd, v2).spectral_radius();
  };
  rep.rho_D_before = rho(db, Variant::D);
  rep.rho_D_after = rho(da, Variant::D);
  rep.rho_DQ_before = rho(db, Variant::DQ);
  rep.rho_DQ_after = rho(da, Variant::DQ);
  rep.rho_DL_before = rho(db, Variant::DL);
  rep.rho_DL_after = rho(da, Variant::DL);
  rep.strict_rho_D = rep.rho_D_before > rep.rho_D_after + tol;
  rep.strict_rho_DQ = rep.rho_DQ_before > rep.rho_DQ_after + tol;
  rep.dominance_DL = rep.rho_DL_before >= rep.rho_DL_after - tol;
  return rep;
}

bool interlacing_check(const Graph& g, int v, double tol) {
  if (v < 0 || v >= g.n) throw InvalidArgument("bad vertex");
  auto dd = all_pairs_distances(g);
  int n = g.n;
  std::vector<double> full((size_t)n * n), sub((size_t)(n - 1) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full[(size_t)i * n + j] = (double)dd.dist[i][j];
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    int c = 0;
    for (int j = 0; j < n; ++j) {
      if (j == v) continue;
      sub[(size_t)r * (n - 1) + c] = (double)dd.dist[i][j];
      ++c;
    }
    ++r;
  }
  auto lam = jacobi_symmetric(std::move(full), n);
  auto th = jacobi_symmetric(std::move(sub), n - 1);
  for (int i = 0; i < n - 1; ++i)
    if (!(lam[i] <= th[i] + tol && th[i] <= lam[i + 1] + tol)) return false;
  return true;
}

}  // namespace distspec
