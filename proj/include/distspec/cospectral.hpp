#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"

namespace distspec {

// Exact characteristic polynomial of the variant matrix, the cospectrality
// fingerprint. DNL uses the similar rational matrix T^{-1}(T-D), so the
// coefficients stay in Q for every variant.
QPoly cospectral_fingerprint(const Graph& g, Variant v);

// spec(M*(g1)) == spec(M*(g2)), decided by exact char-poly equality.
bool are_cospectral(const Graph& g1, const Graph& g2, Variant v);

// Graphs sharing one fingerprint polynomial. Members are canonical graph6
// strings, sorted; only classes with at least two members are recorded.
struct CospectralClass {
  QPoly poly;
  std::vector<std::string> members;
};

struct CensusResult {
  int n = 0;  // uniform catalog order, -1 for mixed
  long long graph_count = 0;
  // indexed by (int)Variant; -1 marks variants the census did not run
  std::array<long long, 4> mate_count{-1, -1, -1, -1};
  std::array<std::vector<CospectralClass>, 4> classes;

  // "n,graphs,D,DQ,DL,DNL", e.g. "7,853,22,38,43,0"; "-" for variants not run
  std::string csv_row() const;
};

// Mate census over an isomorph-free catalog (order <= 10 per member, the
// canonical-form limit). Two passes: a 128-bit modular fingerprint buckets
// candidates, then exact coefficient vectors decide every class, so hash
// collisions cost time but never correctness. `jobs` splits the first pass
// over threads; the result is identical for any split.
CensusResult census(const std::vector<Graph>& catalog,
                    const std::vector<Variant>& variants, int jobs = 1);

// enumerate_connected_graphs(n) piped into census
CensusResult census_of_order(int n, const std::vector<Variant>& variants,
                             int jobs = 1);

// Which structural parameters a cospectral pair happens to share.
struct PreservationReport {
  Variant variant = Variant::D;
  StructuralReport first, second;
  bool edges_equal = false;
  bool diameter_equal = false;
  bool girth_equal = false;      // both absent counts as equal
  bool planarity_equal = false;  // both unknown counts as equal
  bool wiener_equal = false;
  bool degree_sequence_equal = false;
  bool transmission_sequence_equal = false;
  bool transmission_regularity_equal = false;
  bool complement_components_equal = false;
  Rat trace_first, trace_second;  // variant-matrix traces; equal for mates
  Rat wiener_first, wiener_second;
};

// Requires are_cospectral(g1, g2, v); throws InvalidArgument otherwise.
// Re-derives the trace equality forced by cospectrality, and for DL/DQ the
// Wiener equality it implies (W = half the trace).
PreservationReport preservation_report(const Graph& g1, const Graph& g2,
                                       Variant v);

// Two disjoint vertex pairs {{v1,v2},{v3,v4}} that no outside vertex can
// tell apart: d(u,v1)=d(u,v2) and d(u,v3)=d(u,v4) for every u outside the
// four, and the outside distance sums of the two pairs agree.
struct CousinSet {
  int v1 = 0, v2 = 0, v3 = 0, v4 = 0;
};

// All cousin sets of g, one per unordered pair of pairs (v1<v2, v3<v4,
// (v1,v2) < (v3,v4) lexicographically). Empty for n < 5.
std::vector<CousinSet> find_cousins(const Graph& g);

// Two ways to grow a cospectral pair from a cousin set by adding one edge:
// WithinPair adds v1v2 vs v3v4, AcrossPairs adds v1v3 vs v2v4. AcrossPairs
// reads the pair order as given, so {v2,v1,v3,v4} is a different attempt.
enum class CousinForm { WithinPair, AcrossPairs };

// Checks the hypotheses of the chosen form on a verified cousin set:
//   WithinPair  - v1v2 and v3v4 nonedges; the 4-vertex subgraphs induced in
//                 g+v1v2 and in g+v3v4 are isomorphic.
//   AcrossPairs - v1v3 and v2v4 nonedges; the 4-vertex subgraphs induced in
//                 g+v1v3 and in g+v2v4 match under the swap v1<->v4, v2<->v3;
//                 every common neighbor of v1,v2 has a neighbor among the
//                 common neighbors of v3,v4 and vice versa.
// Returns the two supergraphs when the hypotheses hold and they are not
// isomorphic (the pair is then DL-cospectral); nullopt when any hypothesis
// fails or the outputs are isomorphic. Throws InvalidArgument when the four
// vertices are not a cousin set.
std::optional<std::pair<Graph, Graph>> cousin_construction(const Graph& g,
                                                           const CousinSet& c,
                                                           CousinForm form);

// True iff no non-isomorphic catalog member is cospectral to g.
bool determined_within_catalog(const Graph& g,
                               const std::vector<Graph>& catalog, Variant v);

}  // namespace distspec
