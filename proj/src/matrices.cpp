#include "distspec/matrices.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace distspec {

Variant variant_from_name(const std::string& s) {
  if (s == "D") return Variant::D;
  if (s == "DQ") return Variant::DQ;
  if (s == "DL") return Variant::DL;
  if (s == "DNL") return Variant::DNL;
  throw InvalidArgument("unknown matrix variant: " + s);
}

bool IMat::is_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

long long IMat::inf_norm() const {
  long long best = 0;
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += std::abs(at(i, j));
    best = std::max(best, s);
  }
  return best;
}

bool QMat::is_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

double QMat::inf_norm() const {
  double best = 0;
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += std::abs(rat_to_double(at(i, j)));
    best = std::max(best, s);
  }
  return best;
}

QMat QMat::from(const IMat& m) {
  QMat q(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) q.at(i, j) = make_rat((long)m.at(i, j));
  return q;
}

IMat distance_matrix(const DistanceData& dd) {
  IMat m(dd.n);
  for (int i = 0; i < dd.n; ++i)
    for (int j = 0; j < dd.n; ++j) m.at(i, j) = dd.dist[i][j];
  return m;
}

IMat variant_matrix_int(const DistanceData& dd, Variant v) {
  IMat m = distance_matrix(dd);
  switch (v) {
    case Variant::D:
      return m;
    case Variant::DQ:
      for (int i = 0; i < m.n; ++i) m.at(i, i) += dd.transmissions[i];
      return m;
    case Variant::DL:
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
          m.at(i, j) = (i == j ? dd.transmissions[i] : -m.at(i, j));
      return m;
    case Variant::DNL:
      throw InvalidArgument("normalized variant is rational; use variant_matrix");
  }
  throw InvalidArgument("bad variant");
}

QMat variant_matrix(const DistanceData& dd, Variant v) {
  if (v != Variant::DNL) return QMat::from(variant_matrix_int(dd, v));
  for (long long t : dd.transmissions)
    if (t == 0) throw InvalidArgument("normalized variant undefined: zero transmission");
  IMat dl = variant_matrix_int(dd, Variant::DL);
  QMat q(dd.n);
  for (int i = 0; i < dd.n; ++i)
    for (int j = 0; j < dd.n; ++j) {
      Rat x((long)dl.at(i, j), (long)dd.transmissions[i]);
      x.canonicalize();
      q.at(i, j) = x;
    }
  return q;
}

IMat diam2_distance_from_adjacency(const Graph& g) {
  auto dd = all_pairs_distances(g);
  if (dd.diameter > 2)
    throw InvalidArgument("diameter exceeds 2; shortcut does not apply");
  IMat m(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      m.at(i, j) = (i == j) ? 0 : (g.adj[i][j] ? 1 : 2);
  return m;
}

// ---------------------------------------------------------------------------
// exact determinants (fraction-free Bareiss)

namespace {

Int det_bareiss_mpz(std::vector<Int> m, int n) {
  if (n == 0) return 1;
  Int prev = 1, t1, t2;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[(size_t)k * n + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[(size_t)i * n + k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j)
        std::swap(m[(size_t)k * n + j], m[(size_t)piv * n + j]);
      sign = -sign;
    }
    Int& piv = m[(size_t)k * n + k];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int& x = m[(size_t)i * n + j];
        mpz_mul(t1.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        mpz_mul(t2.get_mpz_t(), m[(size_t)i * n + k].get_mpz_t(),
                m[(size_t)k * n + j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(x.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m[(size_t)i * n + k] = 0;
    }
    prev = piv;
  }
  Int d = m[(size_t)(n - 1) * n + (n - 1)];
  return sign > 0 ? d : Int(-d);
}

}  // namespace

Int det_exact(const IMat& m) {
  std::vector<Int> w(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) w[i] = (long)m.a[i];
  return det_bareiss_mpz(std::move(w), m.n);
}

Rat det_exact(const QMat& m) {
  // clear denominators row by row, then integer Bareiss
  std::vector<Int> w(m.a.size());
  Int scale = 1;
  for (int i = 0; i < m.n; ++i) {
    Int l = 1;
    for (int j = 0; j < m.n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.n; ++j) {
      Int num = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
      w[(size_t)i * m.n + j] = num;
    }
    scale *= l;
  }
  Rat d(det_bareiss_mpz(std::move(w), m.n), scale);
  d.canonicalize();
  return d;
}

Int cofactor_sum(const IMat& m) {
  // det(M + J) = det(M) + sum of cofactors, since J has rank one
  std::vector<Int> w(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) w[i] = (long)(m.a[i] + 1);
  return det_bareiss_mpz(std::move(w), m.n) - det_exact(m);
}

Int det_distance_tree(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidArgument("input is not a tree");
  return det_exact(distance_matrix(all_pairs_distances(tree)));
}

Rat det_via_blocks(const Graph& g) {
  auto blocks = biconnected_blocks(g);
  size_t b = blocks.blocks.size();
  if (b == 0) throw InvalidArgument("graph has no blocks");
  std::vector<Int> dets(b), cofs(b);
  for (size_t i = 0; i < b; ++i) {
    IMat d = distance_matrix(all_pairs_distances(blocks.blocks[i]));
    dets[i] = det_exact(d);
    cofs[i] = cofactor_sum(d);
  }
  Int total = 0;
  for (size_t i = 0; i < b; ++i) {
    Int term = dets[i];
    for (size_t j = 0; j < b; ++j)
      if (j != i) term *= cofs[j];
    total += term;
  }
  return Rat(total);
}

std::vector<std::vector<std::string>> matrix_strings(const QMat& m) {
  std::vector<std::vector<std::string>> rows(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) rows[i].push_back(rat_to_string(m.at(i, j)));
  return rows;
}

}  // namespace distspec
