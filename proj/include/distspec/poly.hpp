#pragma once

#include <string>
#include <vector>

#include "distspec/matrices.hpp"
#include "distspec/rational.hpp"

namespace distspec {

// exact polynomial over Q; c[k] is the coefficient of x^k
struct QPoly {
  std::vector<Rat> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static QPoly constant(const Rat& v) { return QPoly({v}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return (int)c.size() - 1; }  // -1 for the zero poly
  bool is_zero() const { return c.empty(); }
  Rat coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : Rat(0); }
  Rat eval(const Rat& x) const;
  double eval(double x) const;
  bool operator==(const QPoly&) const = default;

  QPoly operator*(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator+(const QPoly& o) const;
  std::string str() const;  // human-readable, highest degree first
};

// coefficient strings, constant term first
std::vector<std::string> poly_strings(const QPoly& p);
QPoly poly_from_strings(const std::vector<std::string>& coeffs);

QPoly poly_from_roots(const std::vector<std::pair<Rat, int>>& roots);  // prod (x-r)^m

QPoly derivative(const QPoly& p);
QPoly poly_divide_exact(const QPoly& num, const QPoly& den);   // throws if inexact
QPoly poly_gcd(const QPoly& a, const QPoly& b);                // monic gcd
QPoly squarefree_part(const QPoly& p);                         // p / gcd(p, p')
// p = prod factors[i].first ^ factors[i].second with squarefree factors
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

// characteristic polynomial det(xI - M), exact and monic.
// Integer matrices go through fraction-free determinant evaluation at n+1
// points plus exact interpolation; charpoly_berkowitz is the independent
// division-free route used for cross-checks and for rational matrices.
QPoly char_poly_exact(const IMat& m);
QPoly char_poly_exact(const QMat& m);
QPoly charpoly_berkowitz(const QMat& m);

// char poly of diag(t)^{-1} B without leaving Z: det(x diag(t) - B)/prod(t)
QPoly charpoly_diag_scaled(const std::vector<long long>& t, const IMat& b);

// det(lambda I - D + r T) as a polynomial in lambda, for a fixed rational r
QPoly generalized_char_poly(const DistanceData& dd, const Rat& r);

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  bool operator==(const Inertia&) const = default;
};
// exact inertia of a real-rooted monic polynomial: trailing zeros count the
// zero roots, Descartes sign changes count the positive ones (exact in the
// real-rooted case). Throws NotSupported when real_rooted is false.
Inertia inertia_exact(const QPoly& p, bool real_rooted = true);

// number of distinct complex roots: deg p - deg gcd(p, p')
int distinct_root_count(const QPoly& p);

// roots > threshold for a real-rooted polynomial (Descartes after a shift)
int count_roots_above(const QPoly& p, const Rat& threshold);
int count_roots_equal(const QPoly& p, const Rat& value);

enum class CoeffMode { Raw, Absolute, TreeNormalized };
CoeffMode coeff_mode_from_name(const std::string& s);

struct CoefficientReport {
  CoeffMode mode = CoeffMode::Raw;
  std::vector<Rat> values;   // the analyzed sequence (see below)
  bool log_concave = false;  // a_j^2 >= a_{j-1} a_{j+1} on the analyzed values
  bool unimodal = false;     // on |values|
  int peak_index = -1;       // smallest index attaining the max of |values|
  std::string sign_pattern;  // one of + - 0 per analyzed value
  bool abs_nonincreasing = false;  // |c_j| nonincreasing from first nonzero, full poly
};

// Raw analyzes the full signed coefficient sequence c_0..c_n.
// Absolute analyzes |c_0|..|c_{n-2}| (the delta window).
// TreeNormalized analyzes |c_k| / 2^(n-k-2) for k = 0..n-2.
CoefficientReport coefficient_analytics(const QPoly& p, CoeffMode mode);

}  // namespace distspec
