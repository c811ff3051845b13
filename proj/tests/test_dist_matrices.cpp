#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "distspec/graph.hpp"
#include "distspec/matrices.hpp"
#include "helpers.hpp"

using namespace distspec;
using namespace testutil;

TEST_CASE("variant names") {
  CHECK(variant_from_name("D") == Variant::D);
  CHECK(variant_from_name("DQ") == Variant::DQ);
  CHECK(variant_from_name("DL") == Variant::DL);
  CHECK(variant_from_name("DNL") == Variant::DNL);
  CHECK(std::string(variant_name(Variant::DQ)) == "DQ");
  CHECK_THROWS_AS(variant_from_name("XL"), InvalidArgument);
}

TEST_CASE("variant matrices of C4") {
  auto dd = all_pairs_distances(cycle(4));
  IMat d = variant_matrix_int(dd, Variant::D);
  CHECK(d == distance_matrix(dd));
  CHECK(d.is_symmetric());
  CHECK(d.at(0, 0) == 0);
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(0, 2) == 2);
  CHECK(d.inf_norm() == 4);

  IMat q = variant_matrix_int(dd, Variant::DQ);
  IMat l = variant_matrix_int(dd, Variant::DL);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long long diag = i == j ? 4 : 0;  // every transmission is 4
      CHECK(q.at(i, j) == diag + d.at(i, j));
      CHECK(l.at(i, j) == diag - d.at(i, j));
    }

  CHECK_THROWS_AS(variant_matrix_int(dd, Variant::DNL), InvalidArgument);
  QMat nl = variant_matrix(dd, Variant::DNL);
  CHECK(nl.is_symmetric());  // C4 is transmission regular
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(nl.at(i, j) == make_rat((long)l.at(i, j), 4));
  // rational builds agree with the integer ones on the integer variants
  CHECK(variant_matrix(dd, Variant::DL) == QMat::from(l));
  CHECK(variant_matrix(dd, Variant::DQ) == QMat::from(q));
}

TEST_CASE("normalized matrix of an irregular graph") {
  auto dd = all_pairs_distances(path(3));
  CHECK(dd.transmissions == std::vector<long long>({3, 2, 3}));
  QMat nl = variant_matrix(dd, Variant::DNL);
  CHECK(!nl.is_symmetric());
  CHECK(nl.at(0, 0) == Rat(1));
  CHECK(nl.at(0, 1) == Rat(-1, 3));
  CHECK(nl.at(0, 2) == Rat(-2, 3));
  CHECK(nl.at(1, 0) == Rat(-1, 2));
  auto rows = matrix_strings(nl);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>({"1", "-1/3", "-2/3"}));
  CHECK(rows[1] == std::vector<std::string>({"-1/2", "1", "-1/2"}));
  CHECK(rows[2] == std::vector<std::string>({"-2/3", "-1/3", "1"}));
}

TEST_CASE("diameter-2 shortcut") {
  std::mt19937 rng(5150);
  int used = 0;
  for (const Graph& g : enumerate_connected_graphs(5)) {
    auto dd = all_pairs_distances(g);
    if (dd.diameter <= 2) {
      CHECK(diam2_distance_from_adjacency(g) == distance_matrix(dd));
      ++used;
    }
  }
  CHECK(used > 5);
  CHECK_THROWS_AS(diam2_distance_from_adjacency(path(4)), InvalidArgument);
  (void)rng;
}

TEST_CASE("complete graph determinant") {
  // D(K_n) = J - I has eigenvalues n-1 and -1^(n-1)
  for (int n = 2; n <= 8; ++n) {
    Int d = det_exact(distance_matrix(all_pairs_distances(complete(n))));
    Int expect = Int((long)(n - 1));
    if (n % 2 == 0) expect = -expect;
    CHECK(d == expect);
  }
}

TEST_CASE("tree determinant formula") {
  // det D(tree on n vertices) = (-1)^(n-1) (n-1) 2^(n-2), independent of shape
  for (int n = 2; n <= 10; ++n) {
    Int expect = Int((long)(n - 1)) << (n - 2);
    if (n % 2 == 0) expect = -expect;
    for (const Graph& t : enumerate_trees(n)) {
      CHECK(det_distance_tree(t) == expect);
      if (n <= 8)
        CHECK(det_exact(distance_matrix(all_pairs_distances(t))) == expect);
    }
  }
  CHECK_THROWS_AS(det_distance_tree(cycle(4)), InvalidArgument);
}

TEST_CASE("block assembly matches direct determinant") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(3 + trial % 6, rng);
    Rat lhs = det_via_blocks(g);
    Int rhs = det_exact(distance_matrix(all_pairs_distances(g)));
    CHECK(lhs == Rat(rhs));
  }
}

TEST_CASE("cofactor sum") {
  // M = J - I on 3 vertices: det(M + J) - det(M) = 5 - 2 = 3
  IMat m(3);
  m.at(0, 1) = m.at(1, 0) = m.at(0, 2) = m.at(2, 0) = m.at(1, 2) = m.at(2, 1) = 1;
  CHECK(cofactor_sum(m) == 3);
  // singular matrix with equal rows: adjugate rows sum independently
  IMat s(2);
  s.at(0, 0) = s.at(0, 1) = s.at(1, 0) = s.at(1, 1) = 2;
  CHECK(cofactor_sum(s) == 0);
}

TEST_CASE("rational and integer determinants agree") {
  std::mt19937 rng(901);
  std::uniform_int_distribution<int> U(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 6;
    IMat m(n);
    for (auto& v : m.a) v = U(rng);
    CHECK(det_exact(QMat::from(m)) == Rat(det_exact(m)));
  }
  // scaling one row by 1/3 scales det by 1/3
  IMat m(3);
  std::mt19937 rng2(902);
  for (auto& v : m.a) v = std::uniform_int_distribution<int>(-3, 3)(rng2);
  QMat q = QMat::from(m);
  for (int j = 0; j < 3; ++j) q.at(1, j) = q.at(1, j) / Rat(3);
  CHECK(det_exact(q) * Rat(3) == Rat(det_exact(m)));
}
