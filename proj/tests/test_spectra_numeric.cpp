#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "distspec/graph.hpp"
#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"
#include "distspec/spectra.hpp"
#include "helpers.hpp"

using namespace distspec;
using namespace testutil;

TEST_CASE("complete graph spectrum is exact") {
  auto sp = variant_spectrum(all_pairs_distances(complete(5)), Variant::D);
  REQUIRE(sp.values.size() == 2);
  CHECK(sp.values[0].multiplicity == 4);
  CHECK(sp.values[0].re == doctest::Approx(-1).epsilon(1e-12));
  CHECK(sp.values[1].multiplicity == 1);
  CHECK(sp.values[1].re == doctest::Approx(4).epsilon(1e-12));
  CHECK(sp.exact);
  CHECK(sp.order() == 5);
  CHECK(sp.spectral_radius() == doctest::Approx(4));
  CHECK(sp.all_real());
  CHECK(sp.str() == "{4, -1^(4)}");
}

TEST_CASE("jacobi eigensolver") {
  // D(C4) has eigenvalues {4, 0, -2, -2}
  auto dd = all_pairs_distances(cycle(4));
  IMat d = distance_matrix(dd);
  std::vector<double> a(d.a.begin(), d.a.end());
  std::vector<double> vecs;
  auto ev = jacobi_symmetric(a, 4, &vecs);
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(-2).epsilon(1e-10));
  CHECK(ev[1] == doctest::Approx(-2).epsilon(1e-10));
  CHECK(ev[2] == doctest::Approx(0).epsilon(1e-10));
  CHECK(ev[3] == doctest::Approx(4).epsilon(1e-10));
  // columns are orthonormal eigenvectors: check M v = lambda v for the top one
  for (int i = 0; i < 4; ++i) {
    double acc = 0;
    for (int j = 0; j < 4; ++j) acc += d.at(i, j) * vecs[(size_t)j * 4 + 3];
    CHECK(acc == doctest::Approx(4 * vecs[(size_t)i * 4 + 3]).epsilon(1e-9));
  }
}

TEST_CASE("aberth root finder") {
  // roots of x^3 - 6x^2 + 11x - 6 are 1, 2, 3
  QPoly p({Rat(-6), Rat(11), Rat(-6), Rat(1)});
  auto roots = aberth_roots(p);
  REQUIRE(roots.size() == 3);
  std::vector<double> re;
  for (auto& z : roots) {
    CHECK(std::abs(z.imag()) < 1e-10);
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1).epsilon(1e-9));
  CHECK(re[1] == doctest::Approx(2).epsilon(1e-9));
  CHECK(re[2] == doctest::Approx(3).epsilon(1e-9));
  // complex pair: x^2 + 1
  auto ip = aberth_roots(QPoly({Rat(1), Rat(0), Rat(1)}));
  REQUIRE(ip.size() == 2);
  CHECK(std::abs(std::abs(ip[0].imag()) - 1) < 1e-10);
}

TEST_CASE("spectrum_from_reals clusters") {
  Spectrum sp = spectrum_from_reals({1.0, 1.0 + 1e-12, 3.0, -2.0}, 1e-9);
  REQUIRE(sp.values.size() == 3);
  CHECK(sp.values[0].re == doctest::Approx(-2));
  CHECK(sp.values[1].multiplicity == 2);
  CHECK(sp.values[2].re == doctest::Approx(3));
  CHECK(sp.order() == 4);
}

TEST_CASE("spectra_close is a multiset comparison") {
  Spectrum a = spectrum_from_reals({1, 1, 2}, 1e-12);
  Spectrum b = spectrum_from_reals({1, 1 + 1e-9, 2}, 1e-12);
  CHECK(spectra_close(a, b, 1e-7));
  CHECK(!spectra_close(a, b, 1e-12));
  Spectrum c = spectrum_from_reals({1, 2, 2}, 1e-12);
  CHECK(!spectra_close(a, c, 1e-7));  // multiplicities differ
  Spectrum d = spectrum_from_reals({1, 1}, 1e-12);
  CHECK(!spectra_close(a, d, 1e-7));  // orders differ
}

TEST_CASE("transform of a transmission-regular spectrum") {
  auto dd = all_pairs_distances(cycle(5));  // t = 6
  REQUIRE(dd.transmission_regular);
  auto sd = variant_spectrum(dd, Variant::D);
  CHECK(spectra_close(transform_tr_spectrum(sd, Rat(6), Variant::DQ),
                      variant_spectrum(dd, Variant::DQ), 1e-9));
  CHECK(spectra_close(transform_tr_spectrum(sd, Rat(6), Variant::DL),
                      variant_spectrum(dd, Variant::DL), 1e-9));
  CHECK(spectra_close(transform_tr_spectrum(sd, Rat(6), Variant::DNL),
                      variant_spectrum(dd, Variant::DNL), 1e-9));
}

TEST_CASE("path bounds hold but are not tight") {
  auto rep = verify_bounds(path(4));
  CHECK(rep.all_hold);
  CHECK(rep.tightness_consistent);
  bool saw = false;
  for (const auto& c : rep.checks)
    if (c.name == "t_mean <= rho_D") {
      CHECK(!c.tight);
      CHECK(c.lhs == doctest::Approx(5.0).epsilon(1e-12));
      saw = true;
    }
  CHECK(saw);
}

TEST_CASE("complete graph bounds are tight at the minima") {
  auto rep = verify_bounds(complete(6));
  CHECK(rep.all_hold);
  CHECK(rep.tightness_consistent);
  bool saw = false;
  for (const auto& c : rep.checks)
    if (c.name == "n-1 <= rho_D") {
      CHECK(c.tight);
      CHECK(c.tight_expected);
      saw = true;
    }
  CHECK(saw);
}

TEST_CASE("interlacing after deleting a row/column of D") {
  for (int v = 0; v < 6; ++v) CHECK(interlacing_check(cycle(6), v));
  CHECK(interlacing_check(path(5), 0));
  CHECK(interlacing_check(complete(4), 2));
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(4 + trial % 5, rng);
    CHECK(interlacing_check(g, trial % g.n));
  }
}

TEST_CASE("edge addition monotonicity on the star") {
  int n = 5;
  auto rep = edge_addition_monotonicity(star(n), 1, 2);
  CHECK(rep.dominance_DQ);
  CHECK(rep.dominance_DL);
  CHECK(!rep.dominance_D);  // the D perturbation is indefinite here
  CHECK(rep.strict_rho_D);
  CHECK(rep.strict_rho_DQ);
  CHECK(rep.rho_DL_before == doctest::Approx(2 * n - 1).epsilon(1e-9));
  CHECK(rep.rho_DL_after == doctest::Approx(2 * n - 1).epsilon(1e-9));
}

TEST_CASE("star plus one edge keeps the top of the DL spectrum") {
  int n = 6;
  auto sp = variant_spectrum(all_pairs_distances(star_plus_edge(n)), Variant::DL);
  auto re = sp.reals();
  REQUIRE((int)re.size() == n);
  CHECK(std::abs(re[0]) < 1e-12);
  CHECK(re[1] == doctest::Approx(n).epsilon(1e-12));
  CHECK(re[2] == doctest::Approx(2 * n - 3).epsilon(1e-12));
  for (int k = 3; k < n; ++k)
    CHECK(re[k] == doctest::Approx(2 * n - 1).epsilon(1e-12));
}

TEST_CASE("transmission-regular digraph on four vertices") {
  Digraph d = table_digraph();
  auto dd = all_pairs_distances(d);
  REQUIRE(dd.transmission_regular);
  auto sp = variant_spectrum(dd, Variant::D);
  auto re = sp.reals();
  CHECK(re[0] == doctest::Approx(-2).epsilon(1e-9));
  CHECK(re[1] == doctest::Approx(-1).epsilon(1e-9));
  CHECK(re[2] == doctest::Approx(-1).epsilon(1e-9));
  CHECK(re[3] == doctest::Approx(4).epsilon(1e-9));
  auto sq = variant_spectrum(dd, Variant::DQ);
  CHECK(spectra_close(sq, transform_tr_spectrum(sp, make_rat(4), Variant::DQ), 1e-9));

  // arc reversal preserves D but not DL
  auto rr = all_pairs_distances(d.reverse());
  CHECK(spectra_close(variant_spectrum(rr, Variant::D), sp, 1e-9));
  auto sl = variant_spectrum(rr, Variant::DL);
  auto rl = sl.reals();
  double phi = std::sqrt(5.0);
  CHECK(std::abs(rl[0]) < 1e-9);
  CHECK(rl[1] == doctest::Approx((11 - phi) / 2).epsilon(1e-9));
  CHECK(rl[2] == doctest::Approx(5).epsilon(1e-9));
  CHECK(rl[3] == doctest::Approx((11 + phi) / 2).epsilon(1e-9));
  CHECK(sl.exact);  // quadratic factors resolve to closed forms

  auto rep = verify_bounds(d);
  CHECK(rep.all_hold);
  CHECK(rep.tightness_consistent);
}

TEST_CASE("directed cycle attains the directed maximum") {
  auto rep = verify_bounds(dicycle(5));
  CHECK(rep.all_hold);
  CHECK(rep.tightness_consistent);
  bool saw = false;
  for (const auto& ch : rep.checks)
    if (ch.name == "rho_D <= n(n-1)/2") {
      CHECK(ch.tight);
      CHECK(ch.tight_expected);
      saw = true;
    }
  CHECK(saw);
}

TEST_CASE("complete digraph bounds") {
  auto rep = verify_bounds(complete_digraph(4));
  CHECK(rep.all_hold);
  CHECK(rep.tightness_consistent);
}

TEST_CASE("digraph spectra can be complex") {
  // dicycle C4: D eigenvalues 6, -2, -2 +- 2i... check conjugate symmetry
  auto sp = variant_spectrum(all_pairs_distances(dicycle(4)), Variant::D);
  CHECK(!sp.all_real());
  CHECK(sp.order() == 4);
  double imsum = 0;
  for (const auto& v : sp.values) imsum += v.im * v.multiplicity;
  CHECK(std::abs(imsum) < 1e-9);  // conjugate pairs cancel
  CHECK(sp.spectral_radius() == doctest::Approx(6).epsilon(1e-9));
}

TEST_CASE("random graph bound sweep") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected_graph(4 + trial % 5, rng);
    auto rep = verify_bounds(g);
    CHECK(rep.all_hold);
    CHECK(rep.tightness_consistent);
  }
  for (int trial = 0; trial < 25; ++trial) {
    Digraph g = random_strongly_connected_digraph(3 + trial % 5, rng);
    auto rep = verify_bounds(g);
    CHECK(rep.all_hold);
    CHECK(rep.tightness_consistent);
    auto sp = variant_spectrum(all_pairs_distances(g), Variant::DL);
    CHECK(sp.min_re() >= -1e-9);  // directed DL eigenvalues stay in the right half plane
  }
}
