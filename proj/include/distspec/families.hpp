#pragma once

#include <string>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

enum class FamilyKind {
  CompleteK,
  CompleteBipartite,
  CompleteMultipartite,
  Path,
  Cycle,
  Star,
  StarPlusEdge,
  KnMinusE,
  Hamming,
  Hypercube,
  CocktailParty,
  KPK,
  Petersen,
  Heawood,
  Paley,
  SRG,
  Dicycle,
  CompleteDigraph,
  DSRG,
};

const char* family_kind_name(FamilyKind k);

// parametrized named family; parameters are validated by build/oracle
struct FamilySpec {
  FamilyKind kind{};
  std::vector<long long> params;

  static FamilySpec complete(long long n) { return {FamilyKind::CompleteK, {n}}; }
  static FamilySpec complete_bipartite(long long a, long long b) {
    return {FamilyKind::CompleteBipartite, {a, b}};
  }
  static FamilySpec complete_multipartite(std::vector<long long> parts) {
    return {FamilyKind::CompleteMultipartite, std::move(parts)};
  }
  static FamilySpec path(long long n) { return {FamilyKind::Path, {n}}; }
  static FamilySpec cycle(long long n) { return {FamilyKind::Cycle, {n}}; }
  static FamilySpec star(long long n) { return {FamilyKind::Star, {n}}; }
  static FamilySpec star_plus_edge(long long n) { return {FamilyKind::StarPlusEdge, {n}}; }
  static FamilySpec kn_minus_e(long long n) { return {FamilyKind::KnMinusE, {n}}; }
  static FamilySpec hamming(long long d, long long r) { return {FamilyKind::Hamming, {d, r}}; }
  static FamilySpec hypercube(long long d) { return {FamilyKind::Hypercube, {d}}; }
  static FamilySpec cocktail_party(long long m) { return {FamilyKind::CocktailParty, {m}}; }
  static FamilySpec kpk(long long n1, long long n2, long long n3) {
    return {FamilyKind::KPK, {n1, n2, n3}};
  }
  static FamilySpec petersen() { return {FamilyKind::Petersen, {}}; }
  static FamilySpec heawood() { return {FamilyKind::Heawood, {}}; }
  static FamilySpec paley(long long q) { return {FamilyKind::Paley, {q}}; }
  static FamilySpec srg(long long n, long long k, long long a, long long c) {
    return {FamilyKind::SRG, {n, k, a, c}};
  }
  static FamilySpec dicycle(long long n) { return {FamilyKind::Dicycle, {n}}; }
  static FamilySpec complete_digraph(long long n) { return {FamilyKind::CompleteDigraph, {n}}; }
  static FamilySpec dsrg(long long n, long long k, long long s, long long a, long long c) {
    return {FamilyKind::DSRG, {n, k, s, a, c}};
  }

  // "name" or "name:p1,p2,..." (case-insensitive name), e.g. "K:5",
  // "hamming:2,3", "paley:13", "petersen"
  static FamilySpec parse(const std::string& text);
  std::string str() const;

  bool is_digraph() const;
  long long order() const;  // vertex count implied by the parameters
};

// Concrete labeled instance. build_graph throws InvalidArgument for digraph
// families (and vice versa), InvalidArgument for bad parameters, NotSupported
// for parameter sets with no shipped construction (general SRG/DSRG).
Graph build_graph(const FamilySpec& spec);
Digraph build_digraph(const FamilySpec& spec);

// closed-form spectrum for the requested matrix variant; exact flag set when
// every value carries a closed form. Throws NoClosedForm when the family (or
// this variant of it) has none, InvalidArgument for bad parameters.
Spectrum oracle_spectrum(const FamilySpec& spec, Variant v);
bool has_closed_form(const FamilySpec& spec, Variant v);

struct ClassificationReport {
  int n = 0;
  int diameter = 0;
  bool transmission_regular = false;
  long long transmission = -1;  // when transmission_regular
  Inertia d_inertia;
  bool optimistic = false;               // n_plus > n_minus
  bool one_positive_d_eigenvalue = false;
  int distinct_d_eigenvalues = 0;
  bool distance_regular = false;
  bool eigenvalue_count_bound_ok = true;  // distinct <= diam+1 when DR
  // for transmission-regular inputs: the above/below-sorting-point counts of
  // DQ/DL/DNL restate optimism and the one-positive-eigenvalue property
  bool tr_equivalences_checked = false;
  bool tr_equivalences_hold = true;
};

ClassificationReport classify(const Graph& g);

}  // namespace distspec
