#pragma once

#include <optional>
#include <string>

#include "distspec/graph.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

enum class ProductKind { Cartesian, Lexicographic };

const char* product_kind_name(ProductKind k);
ProductKind product_kind_from_name(const std::string& s);

// structural products; vertex (u, u') of G * G' gets index u * n' + u',
// i.e. row-major with the left operand major.  This ordering is part of the
// contract: it makes D(G x G') = D(G) (x) J + J (x) D(G') hold blockwise.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph lexicographic_product(const Graph& g, const Graph& h);
Digraph cartesian_product(const Digraph& g, const Digraph& h);
Digraph lexicographic_product(const Digraph& g, const Digraph& h);

struct GraphProductSpec {
  ProductKind kind = ProductKind::Cartesian;
  Graph left, right;
};

struct DigraphProductSpec {
  ProductKind kind = ProductKind::Cartesian;
  Digraph left, right;
};

Graph product_graph(const GraphProductSpec& spec);
Digraph product_digraph(const DigraphProductSpec& spec);

// hypotheses the closed forms depend on, verified structurally
struct ProductHypotheses {
  bool left_transmission_regular = false;
  bool right_transmission_regular = false;
  bool right_regular = false;           // constant (out-)degree
  long long right_degree = -1;          // k' when right_regular
  bool left_doubly_directed_cover = false;  // every left vertex on a 2-cycle
  bool diam_right_le_girth_left = false;
};

ProductHypotheses product_hypotheses(const Graph& g, const Graph& h);
ProductHypotheses product_hypotheses(const Digraph& g, const Digraph& h);

// ---------------------------------------------------------------------------
// closed-form spectrum combinators (operand spectra in, product spectrum out)

// distance spectrum of a Cartesian product of transmission regular operands:
//   {n t' + n' t} u {n' d_i : d_i != t} u {n d'_j : d'_j != t'} u {0^((n-1)(n'-1))}
// throws InvalidArgument when a spectrum lacks its transmission eigenvalue.
Spectrum cartesian_spectrum_tr(const Spectrum& left_dist, const Spectrum& right_dist,
                               int n, int np, const Rat& t, const Rat& tp);

// distance spectrum of G o G' with G' k'-regular:
//   {n' d_i + 2n' - k' - 2 : i = 1..n} u {(-a'_j - 2)^(n) : a'_j != k'}
Spectrum lexicographic_spectrum(const Spectrum& left_dist, const Spectrum& right_adj,
                                int n, int np, long long kp);

// distance spectrum of a digraph lexicographic product whose right operand is
// t'-transmission regular and satisfies diam(right) <= girth(left):
//   {n' d_i + t' : i = 1..n} u {d'_j^(n) : d'_j != t'}
Spectrum lexicographic_spectrum_transmission(const Spectrum& left_dist,
                                             const Spectrum& right_dist,
                                             int n, int np, const Rat& tp);

// ---------------------------------------------------------------------------
// verified closed forms for concrete operands

struct ProductSpectra {
  ProductHypotheses hypotheses;
  std::string formula;   // which closed form produced dist
  Spectrum dist;
  // structural facts about the product itself
  bool transmission_regular = false;
  long long transmission = -1;
  // emitted via the regularity transforms when the product is
  // transmission regular
  std::optional<Spectrum> dq, dl, dnl;
};

// verifies the hypotheses of the applicable closed form and evaluates it;
// throws InvalidArgument when no closed form applies
ProductSpectra product_spectra(const GraphProductSpec& spec);
ProductSpectra product_spectra(const DigraphProductSpec& spec);

// spectrum of the l-fold Cartesian power of a transmission regular digraph
// whose distance spectrum is {t, p2^(m), 0^(n-1-m)}:
//   {l t n^(l-1), (p2 n^(l-1))^(m l), 0^(n^l - 1 - m l)}
Spectrum iterated_cartesian_power_spectrum(const Rat& t, const Rat& p2, int m,
                                           int n, int ell);

}  // namespace distspec
