#pragma once

#include <string>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/rational.hpp"

namespace distspec {

enum class Variant { D, DQ, DL, DNL };

constexpr const char* variant_name(Variant v) {
  switch (v) {
    case Variant::D: return "D";
    case Variant::DQ: return "DQ";
    case Variant::DL: return "DL";
    case Variant::DNL: return "DNL";
  }
  return "?";
}
Variant variant_from_name(const std::string& s);

// dense integer matrix (distance-scale entries)
struct IMat {
  int n = 0;
  std::vector<long long> a;

  IMat() = default;
  explicit IMat(int n_) : n(n_), a((size_t)n_ * n_, 0) {}
  long long& at(int i, int j) { return a[(size_t)i * n + j]; }
  long long at(int i, int j) const { return a[(size_t)i * n + j]; }
  bool is_symmetric() const;
  long long inf_norm() const;
  bool operator==(const IMat&) const = default;
};

// dense exact rational matrix
struct QMat {
  int n = 0;
  std::vector<Rat> a;

  QMat() = default;
  explicit QMat(int n_) : n(n_), a((size_t)n_ * n_, Rat(0)) {}
  Rat& at(int i, int j) { return a[(size_t)i * n + j]; }
  const Rat& at(int i, int j) const { return a[(size_t)i * n + j]; }
  bool is_symmetric() const;
  double inf_norm() const;
  static QMat from(const IMat& m);
  bool operator==(const QMat&) const = default;
};

IMat distance_matrix(const DistanceData& dd);

// D, T+D, T-D as integer matrices; DNL is rational, use variant_matrix
IMat variant_matrix_int(const DistanceData& dd, Variant v);

// The normalized distance Laplacian is T^{-1/2} (T-D) T^{-1/2}; its spectrum
// equals that of the rational matrix T^{-1}(T-D), which is what we build so
// that every downstream computation stays exact.
QMat variant_matrix(const DistanceData& dd, Variant v);

// distance matrix of a graph of diameter <= 2 straight from adjacency
IMat diam2_distance_from_adjacency(const Graph& g);

// exact determinants / sum-of-cofactors
Int det_exact(const IMat& m);
Rat det_exact(const QMat& m);
Int cofactor_sum(const IMat& m);  // sum of all cofactors = 1^T adj(M) 1

Int det_distance_tree(const Graph& tree);

// determinant of D(g) assembled block-by-block from the biconnected blocks:
// sum over blocks of det(D(block)) * prod of cofactor sums of the others
Rat det_via_blocks(const Graph& g);

// JSON-ready serialization: entries as reduced "p/q" strings, row-major rows
std::vector<std::vector<std::string>> matrix_strings(const QMat& m);

}  // namespace distspec
