#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"

namespace distspec {

struct EigenValue {
  double re = 0;
  double im = 0;
  int multiplicity = 1;
  std::optional<Surd> exact;  // closed-form value when available
};

// eigenvalue list sorted by (re, im); multiplicities sum to the matrix order
struct Spectrum {
  std::vector<EigenValue> values;
  bool exact = false;  // every value carries a closed form

  int order() const;
  double spectral_radius() const;
  double max_re() const;
  double min_re() const;
  bool all_real(double tol = 1e-8) const;
  // expanded by multiplicity, ascending; requires all_real
  std::vector<double> reals() const;
  std::string str() const;  // descending, "{v^(m), ...}"
  void sort_values();
};

Spectrum spectrum_from_reals(const std::vector<double>& vals, double cluster_radius);
Spectrum spectrum_from_exact(const std::vector<std::pair<Surd, int>>& vals);

// multiset comparison of two spectra within tol (multiplicities included)
bool spectra_close(const Spectrum& a, const Spectrum& b, double tol = 1e-7);

// cyclic Jacobi for symmetric input; exact-charpoly + Aberth otherwise.
// The Aberth route solves each squarefree factor separately, so reported
// multiplicities are exact; degree-1/2 factors get closed-form records.
Spectrum eigenvalues(const QMat& m, bool symmetric);
Spectrum eigenvalues(const QMat& m);
Spectrum eigenvalues(const IMat& m);
Spectrum spectrum_from_poly(const QPoly& p, bool real_roots);

// real symmetric eigensolver; returns ascending eigenvalues, optionally the
// orthogonal eigenvector matrix (column i for eigenvalue i). Throws on
// failure to converge within the iteration budget.
std::vector<double> jacobi_symmetric(std::vector<double> a, int n,
                                     std::vector<double>* vectors = nullptr);

// simultaneous root refinement for a squarefree polynomial
std::vector<std::complex<double>> aberth_roots(const QPoly& squarefree);

Spectrum variant_spectrum(const DistanceData& dd, Variant v);

// eigenvalue maps for transmission-regular inputs with transmission t:
// DQ: x -> t + x,  DL: x -> t - x,  DNL: x -> 1 - x/t
Spectrum transform_tr_spectrum(const Spectrum& dist_spec, const Rat& t, Variant v);

struct BoundCheck {
  std::string name;
  double lhs = 0;  // asserted lhs <= rhs
  double rhs = 0;
  bool holds = false;
  bool tight = false;           // |lhs - rhs| <= tol
  bool tight_expected = false;  // the theorem's structural equality condition
  std::string note;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  bool all_hold = true;
  bool tightness_consistent = true;  // tight == tight_expected wherever adjudicated
};

BoundsReport verify_bounds(const Graph& g, double tol = 1e-8);
BoundsReport verify_bounds(const Digraph& g, double tol = 1e-8);

struct MonotonicityReport {
  // eigenvalue dominance before/after adding one edge (sorted positionwise)
  bool dominance_D = false;
  bool dominance_DQ = false;
  bool dominance_DL = false;
  bool strict_rho_D = false;
  bool strict_rho_DQ = false;
  double rho_D_before = 0, rho_D_after = 0;
  double rho_DQ_before = 0, rho_DQ_after = 0;
  double rho_DL_before = 0, rho_DL_after = 0;
};

MonotonicityReport edge_addition_monotonicity(const Graph& g, int u, int v,
                                              double tol = 1e-8);
// arc version: strict drop of rho(D), rho(DQ); weak drop of rho(DL) recorded
MonotonicityReport edge_addition_monotonicity(const Digraph& g, int u, int v,
                                              double tol = 1e-8);

// Cauchy interlacing for the principal submatrix of D(g) with row/col v
// removed (not the distance matrix of g - v).
bool interlacing_check(const Graph& g, int v, double tol = 1e-8);

}  // namespace distspec
