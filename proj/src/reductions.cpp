#include "distspec/reductions.hpp"

#include <algorithm>

namespace distspec {

const char* twin_type_name(TwinType t) {
  switch (t) {
    case TwinType::Singleton: return "singleton";
    case TwinType::AdjacentTwins: return "adjacent";
    case TwinType::IndependentTwins: return "independent";
  }
  return "?";
}

namespace {

// neighborhoods compared with u and v masked out; the adjacent flag decides
// closed (N[u]=N[v], u~v) versus open (N(u)=N(v), u!~v) twins
bool are_twins(const Graph& g, int u, int v, bool adjacent) {
  if (g.adj[u][v] != adjacent) return false;
  for (int w = 0; w < g.n; ++w) {
    if (w == u || w == v) continue;
    if (g.adj[u][w] != g.adj[v][w]) return false;
  }
  return true;
}

}  // namespace

TwinPartition find_twins(const Graph& g) {
  if (g.n < 3) throw InvalidArgument("twin detection needs order >= 3");
  auto dd = all_pairs_distances(g);
  std::vector<int> owner(g.n, -1);
  TwinPartition part;
  for (int u = 0; u < g.n; ++u) {
    if (owner[u] >= 0) continue;
    TwinClass cls;
    cls.vertices.push_back(u);
    cls.transmission = dd.transmissions[u];
    owner[u] = (int)part.classes.size();
    for (int v = u + 1; v < g.n; ++v) {
      if (owner[v] >= 0) continue;
      if (are_twins(g, u, v, true)) {
        cls.type = TwinType::AdjacentTwins;
        cls.vertices.push_back(v);
        owner[v] = owner[u];
      } else if (are_twins(g, u, v, false)) {
        cls.type = TwinType::IndependentTwins;
        cls.vertices.push_back(v);
        owner[v] = owner[u];
      }
    }
    if (cls.vertices.size() == 1) cls.type = TwinType::Singleton;
    part.classes.push_back(std::move(cls));
  }
  std::sort(part.classes.begin(), part.classes.end(),
            [](const TwinClass& a, const TwinClass& b) {
              if (a.vertices.size() != b.vertices.size())
                return a.vertices.size() < b.vertices.size();
              return a.vertices.front() < b.vertices.front();
            });
  return part;
}

Rat twin_eigenvalue(Variant v, TwinType type, long long t) {
  if (t <= 0) throw InvalidArgument("transmission must be positive");
  if (type == TwinType::Singleton) throw InvalidArgument("not a twin class");
  long alpha = (type == TwinType::IndependentTwins) ? 2 : 1;
  switch (v) {
    case Variant::D: return make_rat(-alpha);
    case Variant::DQ: return make_rat((long)t - alpha);
    case Variant::DL: return make_rat((long)t + alpha);
    case Variant::DNL: return make_rat((long)t + alpha, (long)t);
  }
  throw InvalidArgument("bad variant");
}

QuotientMatrix quotient_matrix(const QMat& m,
                               const std::vector<std::vector<int>>& classes) {
  int p = (int)classes.size();
  std::vector<int> seen(m.n, 0);
  for (const auto& c : classes)
    for (int v : c) {
      if (v < 0 || v >= m.n || seen[v]) throw InvalidArgument("bad partition");
      seen[v] = 1;
    }
  for (int v = 0; v < m.n; ++v)
    if (!seen[v]) throw InvalidArgument("partition misses a vertex");
  QuotientMatrix out;
  out.classes = classes;
  out.B = QMat(p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      // block row sums must agree for every member of class i
      bool first = true;
      Rat common(0);
      for (int u : classes[i]) {
        Rat sum(0);
        for (int w : classes[j]) sum += m.at(u, w);
        if (first) {
          common = sum;
          first = false;
        } else if (sum != common) {
          throw NotEquitable("block row sums differ inside a class");
        }
      }
      out.B.at(i, j) = common;
    }
  return out;
}

QuotientAssembly quotient_spectrum(const QMat& m, const TwinPartition& part,
                                   Variant v, bool real_roots) {
  QuotientAssembly out;
  std::vector<std::vector<int>> classes;
  for (const auto& c : part.classes) classes.push_back(c.vertices);
  out.quotient = quotient_matrix(m, classes);
  QPoly p = char_poly_exact(out.quotient.B);
  for (const auto& c : part.classes) {
    if (c.vertices.size() < 2) continue;
    Rat lambda = twin_eigenvalue(v, c.type, c.transmission);
    int mult = (int)c.vertices.size() - 1;
    out.twin_values.push_back({lambda, mult});
    p = p * poly_from_roots({{lambda, mult}});
  }
  out.char_poly = p;
  out.spectrum = spectrum_from_poly(p, real_roots);
  return out;
}

}  // namespace distspec
