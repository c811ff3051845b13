#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"
#include "distspec/spectra.hpp"

using namespace distspec;

namespace {

// exact polynomial from a fully exact spectrum: rational roots contribute
// (x - r)^m, surd pairs (x^2 - 2px + (p^2 - q^2 s))^m taken from the q>0 entry
QPoly poly_from_exact_spectrum(const Spectrum& sp) {
  QPoly out;
  out.c = {Rat(1)};
  for (const auto& ev : sp.values) {
    const Surd& s = *ev.exact;
    QPoly f;
    if (s.q == 0) {
      f.c = {Rat(-s.p), Rat(1)};
    } else if (s.q > 0) {
      f.c = {Rat(s.p * s.p - s.q * s.q * Rat(s.s)), Rat(Rat(-2) * s.p), Rat(1)};
    } else {
      continue;
    }
    for (int i = 0; i < ev.multiplicity; ++i) out = out * f;
  }
  return out;
}

QPoly direct_poly(const DistanceData& dd, Variant v) {
  if (v == Variant::DNL)
    return charpoly_diag_scaled(dd.transmissions, variant_matrix_int(dd, Variant::DL));
  return char_poly_exact(variant_matrix_int(dd, v));
}

bool spectra_exact_equal(const Spectrum& a, const Spectrum& b) {
  if (!a.exact || !b.exact) return false;
  std::map<std::tuple<Rat, Rat, Int>, int> ma, mb;
  for (const auto& ev : a.values) ma[{ev.exact->p, ev.exact->q, ev.exact->s}] += ev.multiplicity;
  for (const auto& ev : b.values) mb[{ev.exact->p, ev.exact->q, ev.exact->s}] += ev.multiplicity;
  return ma == mb;
}

// Exact char-poly equality for matrices too large to run through Bareiss:
// the matrix is m/scale with every oracle value rational. Annihilation by
// prod (m - mu_i I) proves the eigenvalue SET; Newton trace identities
// tr(m^j) = sum mult_i mu_i^j pin the multiplicities. Pure int64 with a
// growth guard.
void annihilation_exact(const IMat& m, const Spectrum& oracle, long long scale) {
  int n = m.n;
  std::vector<std::pair<long long, long long>> vals;  // (scale*lambda, mult)
  for (const auto& ev : oracle.values) {
    REQUIRE(ev.exact);
    REQUIRE(ev.exact->q == 0);
    Rat v = ev.exact->p * make_rat((long)scale);
    REQUIRE(v.get_den() == 1);
    vals.push_back({v.get_num().get_si(), ev.multiplicity});
  }
  int k = (int)vals.size();
  REQUIRE(k >= 1);
  REQUIRE(k <= 4);
  long long amax = 0;
  for (long long x : m.a) amax = std::max(amax, std::llabs(x));
  for (auto& [mu, mult] : vals) amax = std::max(amax, std::llabs(mu));
  REQUIRE(n <= 300);
  REQUIRE(amax <= 20000);  // keeps every product within int64
  std::vector<long long> P((size_t)n * n, 0), T((size_t)n * n);
  for (int i = 0; i < n; ++i) P[(size_t)i * n + i] = 1;
  long long mult_total = 0, tr1 = 0, tr2 = 0;
  for (int i = 0; i < n; ++i) {
    tr1 += m.a[(size_t)i * n + i];
    for (int j = 0; j < n; ++j) tr2 += m.a[(size_t)i * n + j] * m.a[(size_t)j * n + i];
  }
  for (const auto& [mu, mult] : vals) {
    mult_total += mult;
    // T = P * (m - mu I)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long acc = 0;
        for (int l = 0; l < n; ++l) acc += P[(size_t)i * n + l] * m.a[(size_t)l * n + j];
        T[(size_t)i * n + j] = acc - mu * P[(size_t)i * n + j];
      }
    P.swap(T);
  }
  for (long long x : P) REQUIRE(x == 0);
  REQUIRE(mult_total == n);
  long long s1 = 0, s2 = 0;
  for (const auto& [mu, mult] : vals) {
    s1 += mult * mu;
    s2 += mult * mu * mu;
  }
  REQUIRE(s1 == tr1);
  if (k >= 3) REQUIRE(s2 == tr2);
}

const Variant kVariants[4] = {Variant::D, Variant::DQ, Variant::DL, Variant::DNL};

// oracle vs direct for one family instance, all variants with closed forms
void check_family_graph(const FamilySpec& spec, bool expect_exact) {
  INFO("family ", spec.str());
  Graph g = build_graph(spec);
  DistanceData dd = all_pairs_distances(g);
  bool big = g.n > 100;
  Spectrum direct_d;
  if (big) direct_d = variant_spectrum(dd, Variant::D);
  for (Variant v : kVariants) {
    if (!has_closed_form(spec, v)) continue;
    INFO("variant ", variant_name(v));
    Spectrum oracle = oracle_spectrum(spec, v);
    CHECK(oracle.order() == g.n);
    Spectrum direct;
    if (big && v == Variant::DNL) {
      REQUIRE(dd.transmission_regular);
      direct = transform_tr_spectrum(direct_d, make_rat((long)dd.transmissions[0]), v);
    } else {
      direct = variant_spectrum(dd, v);
    }
    double tol = 1e-9 * std::max(1.0, direct.spectral_radius());
    CHECK_MESSAGE(spectra_close(oracle, direct, tol),
                  "oracle ", oracle.str(), " direct ", direct.str());
    if (expect_exact) {
      CHECK(oracle.exact);
      if (!big) {
        CHECK(poly_from_exact_spectrum(oracle).c == direct_poly(dd, v).c);
      } else if (v == Variant::DNL) {
        annihilation_exact(variant_matrix_int(dd, Variant::DL), oracle,
                           dd.transmissions[0]);
      } else {
        annihilation_exact(variant_matrix_int(dd, v), oracle, 1);
      }
    }
  }
  // transform-of-D consistency on transmission-regular families
  if (dd.transmission_regular && has_closed_form(spec, Variant::D)) {
    Spectrum d = oracle_spectrum(spec, Variant::D);
    Rat t = make_rat((long)dd.transmissions[0]);
    for (Variant v : {Variant::DQ, Variant::DL, Variant::DNL}) {
      if (!has_closed_form(spec, v)) continue;
      Spectrum tr = transform_tr_spectrum(d, t, v);
      Spectrum oracle = oracle_spectrum(spec, v);
      if (d.exact && oracle.exact)
        CHECK(spectra_exact_equal(tr, oracle));
      else
        CHECK(spectra_close(tr, oracle, 1e-9));
    }
  }
}

void check_family_digraph(const FamilySpec& spec) {
  INFO("family ", spec.str());
  Digraph g = build_digraph(spec);
  DistanceData dd = all_pairs_distances(g);
  for (Variant v : kVariants) {
    if (!has_closed_form(spec, v)) continue;
    Spectrum oracle = oracle_spectrum(spec, v);
    CHECK(oracle.order() == g.n);
    Spectrum direct = variant_spectrum(dd, v);
    CHECK_MESSAGE(spectra_close(oracle, direct, 1e-7),
                  "oracle ", oracle.str(), " direct ", direct.str());
  }
}

}  // namespace

TEST_CASE("family spec parsing") {
  FamilySpec s = FamilySpec::parse("K:7");
  CHECK(s.kind == FamilyKind::CompleteK);
  CHECK(s.params == std::vector<long long>{7});
  CHECK(s.str() == "K:7");
  CHECK(FamilySpec::parse("hamming:2,3").order() == 9);
  CHECK(FamilySpec::parse("petersen").order() == 10);
  CHECK(FamilySpec::parse("SRG:10,3,0,1").kind == FamilyKind::SRG);
  CHECK(FamilySpec::parse("Kdigraph:4").is_digraph());
  CHECK(FamilySpec::parse("star+e:6").kind == FamilyKind::StarPlusEdge);
  CHECK_THROWS_AS(FamilySpec::parse("nosuch:3"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("K"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("cycle:2"), InvalidArgument);
  CHECK_THROWS_AS(FamilySpec::parse("paley:7"), InvalidArgument);
  CHECK_THROWS_AS(FamilySpec::parse("srg:10,3,0,2"), InvalidArgument);
}

TEST_CASE("family builders") {
  Graph q3 = build_graph(FamilySpec::hypercube(3));
  CHECK(q3.n == 8);
  CHECK(is_regular(q3));
  CHECK(q3.degree(0) == 3);
  CHECK(build_graph(FamilySpec::kpk(1, 4, 1)) == build_graph(FamilySpec::path(4)));

  Graph paley13 = build_graph(FamilySpec::paley(13));
  CHECK(paley13.n == 13);
  CHECK(is_regular(paley13));
  CHECK(paley13.degree(0) == 6);
  // brute-force (13,6,2,3) strongly regular parameter check
  for (int u = 0; u < 13; ++u)
    for (int v = u + 1; v < 13; ++v) {
      int common = 0;
      for (int w = 0; w < 13; ++w)
        if (w != u && w != v && paley13.adj[u][w] && paley13.adj[v][w]) ++common;
      CHECK(common == (paley13.adj[u][v] ? 2 : 3));
    }

  Graph pet = build_graph(FamilySpec::petersen());
  CHECK(pet.n == 10);
  CHECK(is_regular(pet));
  CHECK(pet.degree(0) == 3);
  CHECK(girth(pet) == std::optional<int>(5));
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      int common = 0;
      for (int w = 0; w < 10; ++w)
        if (w != u && w != v && pet.adj[u][w] && pet.adj[v][w]) ++common;
      CHECK(common == (pet.adj[u][v] ? 0 : 1));
    }
  CHECK(is_distance_regular(pet));

  Graph hea = build_graph(FamilySpec::heawood());
  CHECK(hea.n == 14);
  CHECK(hea.edge_count() == 21);
  CHECK(is_regular(hea));
  CHECK(girth(hea) == std::optional<int>(6));
  CHECK(is_distance_regular(hea));

  // parameter dispatch to shipped instances
  CHECK(build_graph(FamilySpec::srg(10, 3, 0, 1)) == pet);
  CHECK(is_isomorphic(build_graph(FamilySpec::srg(4, 2, 0, 2)),
                      build_graph(FamilySpec::cycle(4))));
  CHECK(build_graph(FamilySpec::srg(13, 6, 2, 3)) == paley13);
  CHECK_THROWS_AS(build_graph(FamilySpec::srg(16, 6, 2, 2)), NotSupported);
  CHECK_THROWS_AS(build_graph(FamilySpec::dicycle(4)), InvalidArgument);
  // 9 = 3^2 passes feasibility but only prime q is constructed
  CHECK_THROWS_AS(build_graph(FamilySpec::paley(9)), NotSupported);

  Digraph dsrg = build_digraph(FamilySpec::dsrg(8, 4, 3, 1, 3));
  CHECK(dsrg.n == 8);
  CHECK(dsrg.arc_count() == 32);
  CHECK(all_pairs_distances(dsrg).transmission_regular);
  // counting identity 16 != 2+4+9 fails
  CHECK_THROWS_AS(build_digraph(FamilySpec::dsrg(8, 4, 2, 1, 3)), InvalidArgument);
  // feasible parameters, no shipped instance
  CHECK_THROWS_AS(build_digraph(FamilySpec::dsrg(6, 2, 1, 0, 1)), NotSupported);
}

TEST_CASE("single vertex corner") {
  Spectrum s = oracle_spectrum(FamilySpec::complete(1), Variant::D);
  CHECK(s.order() == 1);
  CHECK(s.values[0].re == 0);
  CHECK_THROWS_AS(oracle_spectrum(FamilySpec::complete(1), Variant::DNL),
                  InvalidArgument);
}

TEST_CASE("exact family sweeps") {
  for (long long n = 2; n <= 12; ++n)
    check_family_graph(FamilySpec::complete(n), true);
  for (long long a = 2; a <= 6; ++a)
    for (long long b = a; b <= 6; ++b)
      check_family_graph(FamilySpec::complete_bipartite(a, b), true);
  check_family_graph(FamilySpec::complete_bipartite(1, 1), true);
  for (long long b = 2; b <= 6; ++b) {
    check_family_graph(FamilySpec::complete_bipartite(1, b), true);
    check_family_graph(FamilySpec::complete_bipartite(b, 1), true);
  }
  for (long long n = 4; n <= 10; ++n)
    check_family_graph(FamilySpec::kn_minus_e(n), true);
  for (long long n = 2; n <= 10; ++n) check_family_graph(FamilySpec::star(n), true);
  for (long long n = 4; n <= 10; ++n)
    check_family_graph(FamilySpec::star_plus_edge(n), true);
  for (long long m = 2; m <= 5; ++m)
    check_family_graph(FamilySpec::cocktail_party(m), true);
  check_family_graph(FamilySpec::petersen(), true);
  check_family_graph(FamilySpec::complete_multipartite({2, 2, 2}), true);
  check_family_graph(FamilySpec::complete_multipartite({3, 3, 3}), true);
  check_family_graph(FamilySpec::complete_multipartite({1, 1, 1, 1}), true);
  check_family_graph(FamilySpec::complete_multipartite({2, 3}), true);
}

TEST_CASE("hamming sweeps") {
  for (long long d = 1; d <= 8; ++d)
    for (long long r = 2; r <= 16; ++r) {
      long long order = 1;
      bool fits = true;
      for (int i = 0; i < d; ++i) {
        order *= r;
        if (order > 256) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      check_family_graph(FamilySpec::hamming(d, r), true);
    }
  for (long long d = 1; d <= 8; ++d)
    check_family_graph(FamilySpec::hypercube(d), true);
}

TEST_CASE("srg formulas checked against an independent instance") {
  // H(2,3) is the 3x3 rook's graph with parameters (9,4,1,2); the builder
  // ships no (9,4,1,2) instance, so the formulas get a neutral oracle here
  Graph rook = build_graph(FamilySpec::hamming(2, 3));
  DistanceData dd = all_pairs_distances(rook);
  for (Variant v : kVariants) {
    Spectrum oracle = oracle_spectrum(FamilySpec::srg(9, 4, 1, 2), v);
    CHECK(spectra_close(oracle, variant_spectrum(dd, v), 1e-9));
    CHECK(poly_from_exact_spectrum(oracle).c == direct_poly(dd, v).c);
  }
  CHECK_THROWS_AS(build_graph(FamilySpec::srg(9, 4, 1, 2)), NotSupported);
}

TEST_CASE("families without closed forms") {
  Graph g = build_graph(FamilySpec::complete_multipartite({1, 2, 3}));
  CHECK(g.n == 6);
  CHECK(!has_closed_form(FamilySpec::complete_multipartite({1, 2, 3}), Variant::D));
  CHECK(!has_closed_form(FamilySpec::path(5), Variant::D));
  CHECK(!has_closed_form(FamilySpec::heawood(), Variant::DL));
  CHECK(!has_closed_form(FamilySpec::kpk(2, 3, 2), Variant::D));
  CHECK(!has_closed_form(FamilySpec::star(5), Variant::D));
  CHECK(!has_closed_form(FamilySpec::star_plus_edge(4), Variant::DNL));
  CHECK(has_closed_form(FamilySpec::star_plus_edge(5), Variant::DNL));
}

TEST_CASE("cycle sweep") {
  // trig closed forms are numeric except C3 = K3
  for (long long n = 3; n <= 15; ++n)
    check_family_graph(FamilySpec::cycle(n), n == 3);
}

TEST_CASE("conference graph sweep") {
  for (long long q : {5LL, 13LL, 17LL}) check_family_graph(FamilySpec::paley(q), true);
  CHECK(is_isomorphic(build_graph(FamilySpec::paley(5)),
                      build_graph(FamilySpec::cycle(5))));

  // petersen DNL multiset: 0, 1^(4), (6/5)^(5)
  Spectrum dnl = oracle_spectrum(FamilySpec::petersen(), Variant::DNL);
  std::map<std::pair<long, long>, int> got;
  for (const auto& ev : dnl.values) {
    REQUIRE(ev.exact);
    REQUIRE(ev.exact->q == 0);
    got[{ev.exact->p.get_num().get_si(), ev.exact->p.get_den().get_si()}] +=
        ev.multiplicity;
  }
  std::map<std::pair<long, long>, int> want{{{0, 1}, 1}, {{1, 1}, 4}, {{6, 5}, 5}};
  CHECK(got == want);

  // conference-graph normalized eigenvalues approach 1: the theta distance
  // and the worst-case distance both shrink along the sweep; tau alone does
  // not (3 - sqrt(q) changes sign between q=5 and q=13), so its values are
  // pinned instead
  double prev_theta = 1e9, prev_worst = 1e9;
  std::vector<double> taus;
  for (long long q : {5LL, 13LL, 17LL}) {
    Spectrum dnl_q = oracle_spectrum(FamilySpec::paley(q), Variant::DNL);
    double theta_dist = 0, tau_dist = 0, worst = 0;
    for (const auto& ev : dnl_q.values) {
      if (std::abs(ev.re) < 1e-12) continue;  // skip the 0 eigenvalue
      double dist = std::abs(ev.re - 1.0);
      worst = std::max(worst, dist);
      // theta_D = (-3-sqrt(q))/2 maps to 1 + (3+sqrt(q))/(2t): the + branch
      if (ev.exact && ev.exact->q > 0) theta_dist = dist;
      if (ev.exact && ev.exact->q < 0) tau_dist = dist;
    }
    CHECK(theta_dist > 0);
    CHECK(tau_dist > 0);
    CHECK(theta_dist < prev_theta);
    CHECK(worst < prev_worst);
    CHECK(worst == theta_dist);
    prev_theta = theta_dist;
    prev_worst = worst;
    taus.push_back(tau_dist);
  }
  CHECK(std::abs(taus[0] - 0.0636610) < 1e-6);
  CHECK(std::abs(taus[1] - 0.0168209) < 1e-6);
  CHECK(std::abs(taus[2] - 0.0233980) < 1e-6);
  CHECK(!(taus[1] > taus[2]));  // the non-monotone step
}

TEST_CASE("digraph family sweeps") {
  for (long long n = 2; n <= 8; ++n) check_family_digraph(FamilySpec::dicycle(n));
  for (long long n = 2; n <= 6; ++n)
    check_family_digraph(FamilySpec::complete_digraph(n));
  check_family_digraph(FamilySpec::dsrg(8, 4, 3, 1, 3));

  Spectrum d = oracle_spectrum(FamilySpec::dsrg(8, 4, 3, 1, 3), Variant::D);
  std::map<std::pair<long, long>, int> got;
  for (const auto& ev : d.values) {
    REQUIRE(ev.exact);
    REQUIRE(ev.exact->q == 0);
    got[{ev.exact->p.get_num().get_si(), ev.exact->p.get_den().get_si()}] +=
        ev.multiplicity;
  }
  std::map<std::pair<long, long>, int> want{{{10, 1}, 1}, {{0, 1}, 2}, {{-2, 1}, 5}};
  CHECK(got == want);
  for (long long n = 2; n <= 8; ++n) {
    Spectrum dd = oracle_spectrum(FamilySpec::dicycle(n), Variant::D);
    CHECK(std::abs(dd.spectral_radius() - n * (n - 1) / 2.0) < 1e-9);
  }
}

TEST_CASE("classification reports") {
  ClassificationReport r = classify(build_graph(FamilySpec::paley(13)));
  CHECK(r.transmission_regular);
  CHECK(r.optimistic);
  CHECK(!r.one_positive_d_eigenvalue);
  CHECK(r.tr_equivalences_checked);
  CHECK(r.tr_equivalences_hold);
  CHECK(r.d_inertia.n_plus == 7);
  CHECK(r.d_inertia.n_minus == 6);
  CHECK(r.d_inertia.n_zero == 0);

  r = classify(build_graph(FamilySpec::complete_multipartite({2, 2, 2})));
  CHECK(r.one_positive_d_eigenvalue);
  CHECK(!r.optimistic);
  CHECK(r.tr_equivalences_checked);
  CHECK(r.tr_equivalences_hold);

  r = classify(build_graph(FamilySpec::petersen()));
  CHECK(r.distinct_d_eigenvalues == 3);
  CHECK(r.diameter == 2);
  CHECK(r.distance_regular);
  CHECK(r.eigenvalue_count_bound_ok);
  CHECK(r.one_positive_d_eigenvalue);

  r = classify(build_graph(FamilySpec::path(5)));
  CHECK(!r.transmission_regular);
  CHECK(!r.tr_equivalences_checked);
  CHECK(r.one_positive_d_eigenvalue);
  CHECK(!r.distance_regular);

  r = classify(build_graph(FamilySpec::cycle(6)));
  CHECK(r.transmission_regular);
  CHECK(r.tr_equivalences_hold);
  CHECK(r.one_positive_d_eigenvalue);
  CHECK(r.distance_regular);
  CHECK(r.eigenvalue_count_bound_ok);

  r = classify(build_graph(FamilySpec::heawood()));
  CHECK(r.transmission_regular);
  CHECK(r.tr_equivalences_hold);
  CHECK(r.distance_regular);
  CHECK(r.eigenvalue_count_bound_ok);

  r = classify(build_graph(FamilySpec::complete(7)));
  CHECK(r.one_positive_d_eigenvalue);
  CHECK(r.distinct_d_eigenvalues == 2);
  CHECK(r.diameter == 1);
}
