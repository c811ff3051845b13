#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"
#include "helpers.hpp"

using namespace distspec;
using namespace testutil;

TEST_CASE("poly arithmetic and strings") {
  QPoly p({Rat(-2), Rat(-3), Rat(0), Rat(1)});  // x^3 - 3x - 2
  CHECK(p.degree() == 3);
  CHECK(p.str() == "x^3 - 3*x - 2");
  CHECK(p.eval(Rat(2)) == 0);
  CHECK(p.eval(Rat(-1)) == 0);
  CHECK(p.eval(Rat(3)) == 16);
  CHECK(p.eval(2.0) == doctest::Approx(0.0));

  QPoly q({Rat(1), Rat(1)});  // x + 1
  CHECK((p + q).coeff(0) == -1);
  CHECK((p - q).coeff(1) == -4);
  CHECK((q * q).str() == "x^2 + 2*x + 1");
  CHECK(derivative(p).str() == "3*x^2 - 3");
  CHECK(derivative(QPoly::constant(Rat(7))).is_zero());

  CHECK(poly_divide_exact(p, q) * q == p);  // (x+1)^2 divides p
  CHECK_THROWS_AS(poly_divide_exact(p, QPoly({Rat(5), Rat(1)})), InvalidArgument);

  auto ss = poly_strings(p);
  CHECK(ss == std::vector<std::string>({"-2", "-3", "0", "1"}));
  CHECK(poly_from_strings(ss) == p);
  CHECK_THROWS_AS(poly_from_strings({"1", "nope"}), ParseError);

  QPoly g = poly_gcd(p, derivative(p));
  CHECK(g.degree() == 1);
  CHECK(g.coeff(1) == 1);  // monic: x + 1
  CHECK(g.coeff(0) == 1);

  QPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.str() == "0");
}

TEST_CASE("poly_from_roots") {
  QPoly p = poly_from_roots({{Rat(1), 2}, {Rat(-2), 1}});
  CHECK(p.degree() == 3);
  CHECK(p.eval(Rat(1)) == 0);
  CHECK(p.eval(Rat(-2)) == 0);
  CHECK(p.coeff(3) == 1);
  CHECK(p == QPoly({Rat(2), Rat(-3), Rat(0), Rat(1)}));
}

TEST_CASE("small charpolys against hand values") {
  {
    auto dd = all_pairs_distances(complete(3));
    QPoly p = char_poly_exact(distance_matrix(dd));
    CHECK(p.degree() == 3);
    CHECK(p.coeff(2) == 0);
    CHECK(p.coeff(1) == -3);
    CHECK(p.coeff(0) == -2);
  }
  {
    auto dd = all_pairs_distances(path(3));
    QPoly p = char_poly_exact(distance_matrix(dd));
    CHECK(p == QPoly({Rat(-4), Rat(-6), Rat(0), Rat(1)}));
  }
  {
    auto dd = all_pairs_distances(star(4));
    QPoly p = char_poly_exact(variant_matrix_int(dd, Variant::DQ));
    CHECK(p.coeff(3) == -18);
    CHECK(p.coeff(2) == 105);
    CHECK(p.coeff(1) == -252);
    CHECK(p.coeff(0) == 216);
  }
}

TEST_CASE("interpolation route matches berkowitz") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> U(-4, 7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 7;
    IMat m(n);
    for (auto& v : m.a) v = U(rng);
    QPoly p1 = char_poly_exact(m);
    QPoly p2 = charpoly_berkowitz(QMat::from(m));
    CHECK(p1 == p2);
    // det = (-1)^n p(0)
    Rat d0 = p1.coeff(0);
    Int dt = det_exact(m);
    CHECK(d0 == (n % 2 ? Rat(-dt) : Rat(dt)));
    // trace = -c_{n-1}
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr += m.at(i, i);
    CHECK(p1.coeff(n - 1) == Rat((long)-tr));
  }
}

TEST_CASE("rational charpoly routes agree") {
  std::mt19937 rng(5001);
  std::uniform_int_distribution<int> U(-6, 6);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + trial % 5;
    QMat m(n);
    for (auto& v : m.a) v = make_rat(U(rng), 1 + (trial % 3));
    CHECK(char_poly_exact(m) == charpoly_berkowitz(m));
  }
}

TEST_CASE("scaled pencil equals berkowitz on the normalized variant") {
  auto dd = all_pairs_distances(star(4));
  QPoly a = charpoly_diag_scaled(
      std::vector<long long>(dd.transmissions.begin(), dd.transmissions.end()),
      variant_matrix_int(dd, Variant::DL));
  QPoly b = charpoly_berkowitz(variant_matrix(dd, Variant::DNL));
  CHECK(a == b);
  // same identity across random strongly connected digraphs
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    Digraph g = random_strongly_connected_digraph(6 + trial % 3, rng);
    auto d2 = all_pairs_distances(g);
    std::vector<long long> t(d2.transmissions.begin(), d2.transmissions.end());
    CHECK(charpoly_diag_scaled(t, variant_matrix_int(d2, Variant::DL)) ==
          charpoly_berkowitz(variant_matrix(d2, Variant::DNL)));
  }
}

TEST_CASE("squarefree decomposition") {
  QPoly p = poly_from_roots({{Rat(1), 2}, {Rat(-2), 1}});
  auto fac = squarefree_decomposition(p);
  CHECK(fac.size() == 2);
  QPoly rebuilt({Rat(1)});
  for (auto& [f, m] : fac)
    for (int i = 0; i < m; ++i) rebuilt = rebuilt * f;
  CHECK(rebuilt == p);
  CHECK(squarefree_part(p).degree() == 2);
  QPoly q = poly_from_roots({{Rat(0), 3}, {Rat(5), 1}, {make_rat(-1, 2), 2}});
  CHECK(squarefree_part(q).degree() == 3);
  CHECK(distinct_root_count(q) == 3);
}

TEST_CASE("inertia and root counting") {
  QPoly p = poly_from_roots({{Rat(0), 1}, {Rat(3), 2}});
  Inertia in = inertia_exact(p);
  CHECK(in.n_plus == 2);
  CHECK(in.n_minus == 0);
  CHECK(in.n_zero == 1);
  CHECK(count_roots_above(p, Rat(1)) == 2);
  CHECK(count_roots_above(p, Rat(3)) == 0);
  CHECK(count_roots_equal(p, Rat(3)) == 2);
  CHECK(count_roots_equal(p, Rat(7)) == 0);
  CHECK(distinct_root_count(p) == 2);

  QPoly m = poly_from_roots({{Rat(-1), 3}, {make_rat(5, 2), 1}});
  Inertia im = inertia_exact(m);
  CHECK(im.n_plus == 1);
  CHECK(im.n_minus == 3);
  CHECK(im.n_zero == 0);
  CHECK(count_roots_above(m, make_rat(-3, 2)) == 4);
  CHECK(count_roots_above(m, Rat(0)) == 1);
  CHECK(count_roots_above(m, Rat(-2)) == 4);
}

TEST_CASE("generalized charpoly specializations") {
  auto dd = all_pairs_distances(path(4));
  CHECK(generalized_char_poly(dd, Rat(0)) ==
        char_poly_exact(distance_matrix(dd)));
  // at r=1 the roots are the negatives of the T - D spectrum
  QPoly a = generalized_char_poly(dd, Rat(1));
  QPoly dl = char_poly_exact(variant_matrix_int(dd, Variant::DL));
  QPoly neg = a;
  for (int k = 0; k <= neg.degree(); ++k)
    if ((neg.degree() - k) % 2) neg.c[k] = -neg.c[k];
  CHECK((neg == dl || a == dl));
}

TEST_CASE("coefficient analytics windows") {
  CHECK(coeff_mode_from_name("raw") == CoeffMode::Raw);
  CHECK(coeff_mode_from_name("absolute") == CoeffMode::Absolute);
  CHECK(coeff_mode_from_name("tree-normalized") == CoeffMode::TreeNormalized);
  CHECK_THROWS_AS(coeff_mode_from_name("???"), InvalidArgument);

  QPoly p = poly_from_roots({{Rat(1), 4}});  // x^4 - 4x^3 + 6x^2 - 4x + 1
  auto raw = coefficient_analytics(p, CoeffMode::Raw);
  CHECK(raw.values == std::vector<Rat>({Rat(1), Rat(-4), Rat(6), Rat(-4), Rat(1)}));
  CHECK(raw.sign_pattern == "+-+-+");
  CHECK(raw.log_concave);
  CHECK(raw.unimodal);
  CHECK(raw.peak_index == 2);
  CHECK(!raw.abs_nonincreasing);

  auto ab = coefficient_analytics(p, CoeffMode::Absolute);
  CHECK(ab.values == std::vector<Rat>({Rat(1), Rat(4), Rat(6)}));
  CHECK(ab.sign_pattern == "+++");
  CHECK(ab.unimodal);
  CHECK(ab.peak_index == 2);

  // 5 - x + 7x^2 + 3x^3 + x^4: the |c| window dips then rises
  QPoly w({Rat(5), Rat(-1), Rat(7), Rat(3), Rat(1)});
  auto aw = coefficient_analytics(w, CoeffMode::Absolute);
  CHECK(aw.values == std::vector<Rat>({Rat(5), Rat(1), Rat(7)}));
  CHECK(!aw.unimodal);
  CHECK(!aw.log_concave);

  // tree-normalized window of the path on 3 vertices: {4/2, 6/1}
  auto dd = all_pairs_distances(path(3));
  auto tn = coefficient_analytics(char_poly_exact(distance_matrix(dd)),
                                  CoeffMode::TreeNormalized);
  CHECK(tn.values == std::vector<Rat>({Rat(2), Rat(6)}));
  CHECK(tn.unimodal);
  CHECK(tn.peak_index == 1);

  CHECK_THROWS_AS(coefficient_analytics(QPoly(), CoeffMode::Raw), InvalidArgument);
  CHECK_THROWS_AS(coefficient_analytics(QPoly({Rat(1), Rat(1)}), CoeffMode::Absolute),
                  InvalidArgument);
}

TEST_CASE("a distance-regular non-tree can fail window unimodality") {
  Graph hea = build_graph(FamilySpec::heawood());
  QPoly p = char_poly_exact(distance_matrix(all_pairs_distances(hea)));
  CHECK(p == charpoly_berkowitz(variant_matrix(all_pairs_distances(hea), Variant::D)));
  auto ab = coefficient_analytics(p, CoeffMode::Absolute);
  CHECK(!ab.unimodal);
  CHECK(!ab.log_concave);
  auto tn = coefficient_analytics(p, CoeffMode::TreeNormalized);
  CHECK(!tn.unimodal);
  CHECK(tn.peak_index == 7);
  CHECK(tn.values.front() == Rat(81));
  CHECK(tn.values.back() == Rat(441));
}

TEST_CASE("trees have nonincreasing absolute coefficients, peak inside window") {
  for (int n = 4; n <= 9; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      QPoly p = char_poly_exact(distance_matrix(all_pairs_distances(t)));
      auto rep = coefficient_analytics(p, CoeffMode::TreeNormalized);
      CHECK(rep.unimodal);
      CHECK(rep.log_concave);
      auto abs_rep = coefficient_analytics(p, CoeffMode::Absolute);
      CHECK(abs_rep.values[0] > 0);  // nonzero constant term
    }
}
