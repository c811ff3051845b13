#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "distspec/graph.hpp"
#include "helpers.hpp"

using namespace distspec;
using namespace testutil;

TEST_CASE("graph6 parse and re-encode") {
  Graph k4 = parse_graph6("C~");
  CHECK(k4.n == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(to_graph6(k4) == "C~");
  Graph p4 = parse_graph6("Ch");
  CHECK(p4.edge_count() == 3);
  CHECK(is_isomorphic(p4, path(4)));
  // optional catalog header is accepted
  Graph c4 = parse_graph6(">>graph6<<Cl");
  CHECK(is_isomorphic(c4, cycle(4)));
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  // round trip across orders and densities
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected_graph(2 + trial % 9, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("digraph6 parse and re-encode") {
  Digraph d = table_digraph();
  std::string enc = to_digraph6(d);
  CHECK(enc[0] == '&');
  CHECK(parse_digraph6(enc) == d);
  CHECK_THROWS_AS(parse_digraph6("Cl"), ParseError);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Digraph g = random_strongly_connected_digraph(2 + trial % 6, rng);
    CHECK(parse_digraph6(to_digraph6(g)) == g);
  }
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# a square\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(g == cycle(4));
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  Digraph d = parse_arc_list("0 1\n1 2\n2 0\n");
  CHECK(d == dicycle(3));
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("\n# only comments\n"), ParseError);
  CHECK(parse_edge_list("0 5\n").n == 6);  // order inferred from largest id
}

TEST_CASE("distances, transmissions, wiener") {
  auto dd = all_pairs_distances(cycle(4));
  CHECK(dd.diameter == 2);
  CHECK(dd.transmissions == std::vector<long long>({4, 4, 4, 4}));
  CHECK(dd.transmission_regular);
  CHECK(dd.wiener == Rat(8));
  auto dp = all_pairs_distances(path(4));
  CHECK(dp.diameter == 3);
  CHECK(dp.transmissions == std::vector<long long>({6, 4, 4, 6}));
  CHECK(!dp.transmission_regular);
  CHECK(dp.wiener == Rat(10));
  // disconnected input throws
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK_THROWS_AS(all_pairs_distances(two), DisconnectedInput);
  CHECK(!is_connected(two));
  CHECK(component_count(two) == 2);
  // digraph: out-transmissions row sums, in-transmissions column sums
  auto dg = all_pairs_distances(table_digraph());
  CHECK(dg.transmission_regular);
  CHECK(dg.transmissions == std::vector<long long>({4, 4, 4, 4}));
  CHECK(dg.in_transmissions.size() == 4);
  Digraph not_strong(3);
  not_strong.add_arc(0, 1);
  not_strong.add_arc(1, 2);
  CHECK(!is_strongly_connected(not_strong));
  CHECK_THROWS_AS(all_pairs_distances(not_strong), DisconnectedInput);
}

TEST_CASE("canonical forms and isomorphism") {
  CHECK(canonical_form(path(4)) == canonical_form(parse_graph6("Ch")));
  CHECK(is_isomorphic(cycle(5), parse_graph6(canonical_form(cycle(5)))));
  CHECK(!is_isomorphic(path(4), star(4)));
  // relabeled copies collapse to one canonical string
  std::mt19937 rng(3);
  Graph g = random_connected_graph(7, rng);
  std::string canon = canonical_form(g);
  std::vector<int> perm = {3, 1, 4, 0, 6, 2, 5};
  Graph h(7);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  CHECK(canonical_form(h) == canon);
  CHECK(is_isomorphic(g, h));
}

TEST_CASE("connected graph enumeration counts") {
  const long long expected[] = {2, 6, 21, 112, 853, 11117};
  for (int n = 3; n <= 8; ++n) {
    auto cat = enumerate_connected_graphs(n);
    CHECK((long long)cat.size() == expected[n - 3]);
    // one representative per class, sorted by canonical form
    std::set<std::string> seen;
    for (const auto& g : cat) {
      CHECK(g.n == n);
      CHECK(is_connected(g));
      seen.insert(canonical_form(g));
    }
    CHECK((long long)seen.size() == expected[n - 3]);
  }
}

TEST_CASE("catalog reader matches enumerator") {
  auto cat = enumerate_connected_graphs(5);
  std::ostringstream os;
  for (const auto& g : cat) os << to_graph6(g) << "\n";
  std::istringstream is(os.str());
  auto back = read_graph6_catalog(is);
  REQUIRE(back.size() == cat.size());
  for (size_t i = 0; i < cat.size(); ++i) CHECK(back[i] == cat[i]);
}

TEST_CASE("tree enumeration counts") {
  const long long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    auto trees = enumerate_trees(n);
    CHECK((long long)trees.size() == expected[n - 1]);
    for (const auto& t : trees) CHECK(is_tree(t));
  }
  CHECK(!is_tree(cycle(4)));
}

TEST_CASE("structural reports") {
  StructuralReport r = structural_report(cycle(6));
  CHECK(r.edges == 6);
  CHECK(r.diameter == 3);
  CHECK(r.girth == std::optional<int>(6));
  CHECK(r.planar == std::optional<bool>(true));
  CHECK(r.degree_sequence == std::vector<int>(6, 2));
  CHECK(r.transmission_sequence == std::vector<long long>(6, 9));
  CHECK(r.transmission_regular);
  r = structural_report(star(5));
  CHECK(r.degree_sequence == std::vector<int>({1, 1, 1, 1, 4}));
  CHECK(!r.girth.has_value());  // forest
  CHECK(r.complement_component_count == 2);
}

TEST_CASE("girth and planarity") {
  CHECK(girth(path(5)) == std::nullopt);
  CHECK(girth(cycle(7)) == std::optional<int>(7));
  CHECK(girth(complete(4)) == std::optional<int>(3));
  CHECK(planar(complete(4)) == std::optional<bool>(true));
  CHECK(planar(complete(5)) == std::optional<bool>(false));
  CHECK(planar(complete_bipartite(3, 3)) == std::optional<bool>(false));
  int planar_count = 0;
  for (const auto& g : enumerate_connected_graphs(6))
    if (*planar(g)) ++planar_count;
  CHECK(planar_count == 99);
  CHECK(digraph_girth(dicycle(5)) == std::optional<int>(5));
  CHECK(digraph_girth(Digraph::from_graph(path(3))) == std::optional<int>(2));
}

TEST_CASE("distance-regular recognizers") {
  // Petersen as the Kneser graph on 2-subsets of a 5-set
  Graph pet(10);
  int pairs[10][2];
  int c = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      pairs[c][0] = a;
      pairs[c][1] = b;
      ++c;
    }
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      bool disjoint = pairs[i][0] != pairs[j][0] && pairs[i][0] != pairs[j][1] &&
                      pairs[i][1] != pairs[j][0] && pairs[i][1] != pairs[j][1];
      if (disjoint) pet.add_edge(i, j);
    }
  CHECK(*girth(pet) == 5);
  CHECK(*planar(pet) == false);
  CHECK(is_distance_regular(pet));
  CHECK(is_regular(pet));
  CHECK(!is_distance_regular(path(4)));
  CHECK(is_distance_regular(cycle(6)));
}

TEST_CASE("biconnected blocks") {
  auto bl = biconnected_blocks(path(4));
  CHECK(bl.blocks.size() == 3);
  CHECK(bl.cut_vertices.size() == 2);
  bl = biconnected_blocks(cycle(5));
  CHECK(bl.blocks.size() == 1);
  CHECK(bl.cut_vertices.empty());
  // bowtie: two triangles sharing one vertex
  Graph bowtie(5);
  bowtie.add_edge(0, 1);
  bowtie.add_edge(1, 2);
  bowtie.add_edge(2, 0);
  bowtie.add_edge(2, 3);
  bowtie.add_edge(3, 4);
  bowtie.add_edge(4, 2);
  bl = biconnected_blocks(bowtie);
  CHECK(bl.blocks.size() == 2);
  CHECK(bl.cut_vertices == std::vector<int>({2}));
  for (const auto& b : bl.blocks) CHECK(b.n == 3);
}

TEST_CASE("random samplers are connected and deterministic") {
  std::mt19937 a(99), b(99);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected_graph(3 + trial % 7, a);
    CHECK(is_connected(g));
    CHECK(random_connected_graph(3 + trial % 7, b) == g);
  }
  std::mt19937 c(5);
  for (int trial = 0; trial < 25; ++trial)
    CHECK(is_strongly_connected(random_strongly_connected_digraph(2 + trial % 6, c)));
}

TEST_CASE("graph helpers") {
  Graph g = path(4);
  CHECK(g.neighbors(1) == std::vector<int>({0, 2}));
  Graph h = g.with_edge(0, 3);
  CHECK(h.has_edge(0, 3));
  CHECK(!g.has_edge(0, 3));
  Graph comp = complete(4).complement();
  CHECK(comp.edge_count() == 0);
  Digraph rev = dicycle(3).reverse();
  CHECK(rev.has_arc(1, 0));
  CHECK(!rev.has_arc(0, 1));
  Digraph dbl = Digraph::from_graph(path(3));
  CHECK(dbl.arc_count() == 4);
}
