#pragma once

#include <string>
#include <vector>

#include "distspec/matrices.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

enum class TwinType { Singleton, AdjacentTwins, IndependentTwins };

const char* twin_type_name(TwinType t);

struct TwinClass {
  std::vector<int> vertices;  // ascending
  TwinType type = TwinType::Singleton;
  long long transmission = 0;  // shared by all members
};

// classes ordered by (size, smallest vertex id) for reproducible quotients
struct TwinPartition {
  std::vector<TwinClass> classes;
  bool has_twins() const {
    for (const auto& c : classes)
      if (c.vertices.size() > 1) return true;
    return false;
  }
};

// maximal twin classes: adjacent twins share closed neighborhoods,
// independent twins share open neighborhoods
TwinPartition find_twins(const Graph& g);

// the eigenvalue contributed by one twin pair:
//   D: -2 / -1,  DQ: t-2 / t-1,  DL: t+2 / t+1,  DNL: (t+2)/t / (t+1)/t
// (independent / adjacent), with t the shared transmission
Rat twin_eigenvalue(Variant v, TwinType type, long long t);

struct QuotientMatrix {
  QMat B;                                  // block-averaged row sums
  std::vector<std::vector<int>> classes;   // defining partition
};

// quotient of M over the partition; throws NotEquitable unless every block
// row sum is constant within its class (which makes MS = SB exact)
QuotientMatrix quotient_matrix(const QMat& m, const std::vector<std::vector<int>>& classes);

struct QuotientAssembly {
  QuotientMatrix quotient;
  std::vector<std::pair<Rat, int>> twin_values;  // eigenvalue, multiplicity
  QPoly char_poly;     // p_B * prod (x - lambda)^(class size - 1)
  Spectrum spectrum;   // solved from char_poly
};

// full spectrum assembly: twin eigenvalues with multiplicity
// (class size - 1) joined with the spectrum of the quotient matrix.
// m must be the variant matrix the partition refers to.
QuotientAssembly quotient_spectrum(const QMat& m, const TwinPartition& part,
                                   Variant v, bool real_roots = true);

}  // namespace distspec
