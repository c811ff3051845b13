#pragma once

#include "distspec/graph.hpp"

namespace testutil {

inline distspec::Graph complete(int n) {
  distspec::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline distspec::Graph path(int n) {
  distspec::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline distspec::Graph cycle(int n) {
  distspec::Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline distspec::Graph star(int n) {
  distspec::Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

inline distspec::Graph star_plus_edge(int n) {
  distspec::Graph g = star(n);
  g.add_edge(1, 2);
  return g;
}

inline distspec::Graph complete_bipartite(int a, int b) {
  distspec::Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline distspec::Digraph dicycle(int n) {
  distspec::Digraph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

inline distspec::Digraph complete_digraph(int n) {
  distspec::Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.add_arc(i, j);
  return g;
}

// the 4-vertex transmission-regular digraph used in the digraph spectra tests
inline distspec::Digraph table_digraph() {
  distspec::Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(0, 3);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  d.add_arc(2, 1);
  d.add_arc(3, 0);
  d.add_arc(3, 2);
  return d;
}

}  // namespace testutil
