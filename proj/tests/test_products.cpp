#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "distspec/graph.hpp"
#include "distspec/matrices.hpp"
#include "distspec/products.hpp"
#include "distspec/spectra.hpp"
#include "helpers.hpp"

using namespace distspec;
using namespace testutil;

namespace {

Spectrum direct_graph_spectrum(const Graph& g) {
  return variant_spectrum(all_pairs_distances(g), Variant::D);
}
Spectrum direct_digraph_spectrum(const Digraph& g) {
  return variant_spectrum(all_pairs_distances(g), Variant::D);
}

bool has_value(const Spectrum& sp, double v, int mult) {
  for (const auto& ev : sp.values)
    if (std::abs(ev.re - v) < 1e-7 && std::abs(ev.im) < 1e-7)
      return ev.multiplicity == mult;
  return false;
}

}  // namespace

TEST_CASE("product structure") {
  auto torus = cartesian_product(cycle(4), cycle(4));
  CHECK(torus.n == 16);
  for (int v = 0; v < 16; ++v) CHECK(torus.degree(v) == 4);

  auto k4 = lexicographic_product(complete(2), complete(2));
  CHECK(k4.n == 4);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(k4.adj[u][v] == (u != v));

  auto dp = cartesian_product(dicycle(3), dicycle(3));
  CHECK(dp.n == 9);
  CHECK(all_pairs_distances(dp).transmission_regular);
}

TEST_CASE("torus closed form") {
  GraphProductSpec spec{ProductKind::Cartesian, cycle(4), cycle(4)};
  auto ps = product_spectra(spec);
  CHECK(has_value(ps.dist, 32, 1));
  CHECK(has_value(ps.dist, -8, 4));
  CHECK(has_value(ps.dist, 0, 11));
  CHECK(spectra_close(ps.dist, direct_graph_spectrum(product_graph(spec)), 1e-7));
  CHECK(ps.transmission_regular);
  CHECK(ps.transmission == 32);
  CHECK(ps.dq);
  CHECK(ps.dl);
  CHECK(ps.dnl);
}

TEST_CASE("hamming square closed form") {
  GraphProductSpec spec{ProductKind::Cartesian, complete(3), complete(3)};
  auto ps = product_spectra(spec);
  CHECK(has_value(ps.dist, 12, 1));
  CHECK(has_value(ps.dist, 0, 4));
  CHECK(has_value(ps.dist, -3, 4));
  CHECK(spectra_close(ps.dist, direct_graph_spectrum(product_graph(spec)), 1e-7));
}

TEST_CASE("lexicographic closed forms") {
  GraphProductSpec spec{ProductKind::Lexicographic, path(3), complete(2)};
  auto ps = product_spectra(spec);
  CHECK(spectra_close(ps.dist, direct_graph_spectrum(product_graph(spec)), 1e-7));

  Graph empty2(2);
  GraphProductSpec spec2{ProductKind::Lexicographic, complete(2), empty2};
  auto ps2 = product_spectra(spec2);
  auto prod = product_graph(spec2);
  CHECK(is_isomorphic(prod, cycle(4)));
  CHECK(spectra_close(ps2.dist, direct_graph_spectrum(prod), 1e-7));
  CHECK(has_value(ps2.dist, 4, 1));
  CHECK(has_value(ps2.dist, 0, 1));
  CHECK(has_value(ps2.dist, -2, 2));
}

TEST_CASE("operand pool sweep") {
  std::vector<Graph> pool = {complete(2), complete(3), cycle(4), cycle(5),
                             path(3), star(4)};
  int cart = 0, lex = 0, vetoed = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      GraphProductSpec cs{ProductKind::Cartesian, a, b};
      auto hyp = product_hypotheses(a, b);
      if (hyp.left_transmission_regular && hyp.right_transmission_regular) {
        auto ps = product_spectra(cs);
        CHECK(spectra_close(ps.dist, direct_graph_spectrum(product_graph(cs)), 1e-7));
        auto dda = all_pairs_distances(a);
        auto ddb = all_pairs_distances(b);
        CHECK(ps.transmission_regular);
        CHECK(ps.transmission ==
              a.n * ddb.transmissions[0] + b.n * dda.transmissions[0]);
        ++cart;
      } else {
        CHECK_THROWS_AS(product_spectra(cs), InvalidArgument);
        ++vetoed;
      }
      GraphProductSpec ls{ProductKind::Lexicographic, a, b};
      if (hyp.right_regular) {
        auto ps = product_spectra(ls);
        CHECK(spectra_close(ps.dist, direct_graph_spectrum(product_graph(ls)), 1e-7));
        ++lex;
      } else {
        CHECK_THROWS_AS(product_spectra(ls), InvalidArgument);
        ++vetoed;
      }
    }
  CHECK(cart == 16);  // K2,K3,C4,C5 are transmission regular; P3,S4 are not
  CHECK(lex == 24);   // right operand regular: K2,K3,C4,C5
  CHECK(vetoed == 32);
}

TEST_CASE("directed cartesian closed form") {
  DigraphProductSpec spec{ProductKind::Cartesian, dicycle(3), dicycle(3)};
  auto ps = product_spectra(spec);
  CHECK(spectra_close(ps.dist, direct_digraph_spectrum(product_digraph(spec)), 1e-7));
  CHECK(has_value(ps.dist, 18, 1));
  CHECK(has_value(ps.dist, 0, 4));
  CHECK(ps.transmission_regular);
  CHECK(ps.transmission == 18);
}

TEST_CASE("directed lexicographic closed forms") {
  // doubly directed left + out-regular right
  Digraph left = Digraph::from_graph(cycle(3));
  DigraphProductSpec spec{ProductKind::Lexicographic, left, dicycle(2)};
  auto ps = product_spectra(spec);
  CHECK(ps.formula == "lexicographic-regular");
  CHECK(spectra_close(ps.dist, direct_digraph_spectrum(product_digraph(spec)), 1e-7));

  // transmission-regular right with diam(right) <= girth(left)
  DigraphProductSpec spec2{ProductKind::Lexicographic, dicycle(3), dicycle(3)};
  auto ps2 = product_spectra(spec2);
  CHECK(ps2.formula == "lexicographic-transmission-regular");
  CHECK(spectra_close(ps2.dist, direct_digraph_spectrum(product_digraph(spec2)), 1e-7));

  // diam(right) exceeds girth(left): no closed form applies
  DigraphProductSpec spec3{ProductKind::Lexicographic, dicycle(3), dicycle(5)};
  CHECK_THROWS_AS(product_spectra(spec3), InvalidArgument);
}

TEST_CASE("iterated cartesian power") {
  // base pattern {t, p2^(m), 0^(n-1-m)} = (10, -2, 5, 8), two steps
  auto sp = iterated_cartesian_power_spectrum(make_rat(10), make_rat(-2), 5, 8, 2);
  CHECK(sp.order() == 64);
  CHECK(has_value(sp, 160, 1));
  CHECK(has_value(sp, -16, 10));
  CHECK(has_value(sp, 0, 53));
  // one explicit closed-form step from the base spectrum agrees
  Spectrum base;
  EigenValue e1;
  e1.re = 10;
  e1.exact = Surd(make_rat(10));
  e1.multiplicity = 1;
  EigenValue e2;
  e2.re = -2;
  e2.exact = Surd(make_rat(-2));
  e2.multiplicity = 5;
  EigenValue e3;
  e3.re = 0;
  e3.exact = Surd(Rat(0));
  e3.multiplicity = 2;
  base.values = {e1, e2, e3};
  base.exact = true;
  auto once = cartesian_spectrum_tr(base, base, 8, 8, make_rat(10), make_rat(10));
  CHECK(spectra_close(once, sp, 1e-9));
}
