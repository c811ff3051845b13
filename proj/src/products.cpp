#include "distspec/products.hpp"

#include <algorithm>
#include <cmath>

#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"

namespace distspec {

const char* product_kind_name(ProductKind k) {
  return k == ProductKind::Cartesian ? "cartesian" : "lexicographic";
}

ProductKind product_kind_from_name(const std::string& s) {
  if (s == "cartesian") return ProductKind::Cartesian;
  if (s == "lexicographic") return ProductKind::Lexicographic;
  throw InvalidArgument("unknown product kind: " + s);
}

// ---------------------------------------------------------------------------
// structural products

Graph cartesian_product(const Graph& g, const Graph& h) {
  Graph p(g.n * h.n);
  auto id = [&](int u, int up) { return u * h.n + up; };
  for (int u = 0; u < g.n; ++u)
    for (int up = 0; up < h.n; ++up) {
      for (int vp = up + 1; vp < h.n; ++vp)
        if (h.adj[up][vp]) p.add_edge(id(u, up), id(u, vp));
      for (int v = u + 1; v < g.n; ++v)
        if (g.adj[u][v]) p.add_edge(id(u, up), id(v, up));
    }
  return p;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
  Graph p(g.n * h.n);
  auto id = [&](int u, int up) { return u * h.n + up; };
  for (int u = 0; u < g.n; ++u)
    for (int up = 0; up < h.n; ++up) {
      for (int vp = up + 1; vp < h.n; ++vp)
        if (h.adj[up][vp]) p.add_edge(id(u, up), id(u, vp));
      for (int v = u + 1; v < g.n; ++v)
        if (g.adj[u][v])
          for (int vp = 0; vp < h.n; ++vp) p.add_edge(id(u, up), id(v, vp));
    }
  return p;
}

Digraph cartesian_product(const Digraph& g, const Digraph& h) {
  Digraph p(g.n * h.n);
  auto id = [&](int u, int up) { return u * h.n + up; };
  for (int u = 0; u < g.n; ++u)
    for (int up = 0; up < h.n; ++up) {
      for (int vp = 0; vp < h.n; ++vp)
        if (h.adj[up][vp]) p.add_arc(id(u, up), id(u, vp));
      for (int v = 0; v < g.n; ++v)
        if (g.adj[u][v]) p.add_arc(id(u, up), id(v, up));
    }
  return p;
}

Digraph lexicographic_product(const Digraph& g, const Digraph& h) {
  Digraph p(g.n * h.n);
  auto id = [&](int u, int up) { return u * h.n + up; };
  for (int u = 0; u < g.n; ++u)
    for (int up = 0; up < h.n; ++up) {
      for (int vp = 0; vp < h.n; ++vp)
        if (h.adj[up][vp]) p.add_arc(id(u, up), id(u, vp));
      for (int v = 0; v < g.n; ++v)
        if (g.adj[u][v])
          for (int vp = 0; vp < h.n; ++vp) p.add_arc(id(u, up), id(v, vp));
    }
  return p;
}

Graph product_graph(const GraphProductSpec& spec) {
  return spec.kind == ProductKind::Cartesian
             ? cartesian_product(spec.left, spec.right)
             : lexicographic_product(spec.left, spec.right);
}

Digraph product_digraph(const DigraphProductSpec& spec) {
  return spec.kind == ProductKind::Cartesian
             ? cartesian_product(spec.left, spec.right)
             : lexicographic_product(spec.left, spec.right);
}

// ---------------------------------------------------------------------------
// hypotheses

namespace {

bool constant_degree(const std::vector<std::vector<bool>>& adj, int n,
                     long long& deg) {
  deg = -1;
  for (int v = 0; v < n; ++v) {
    long long d = 0;
    for (int w = 0; w < n; ++w)
      if (adj[v][w]) ++d;
    if (deg < 0) deg = d;
    if (d != deg) return false;
  }
  return true;
}

}  // namespace

ProductHypotheses product_hypotheses(const Graph& g, const Graph& h) {
  ProductHypotheses hyp;
  try {
    hyp.left_transmission_regular = all_pairs_distances(g).transmission_regular;
  } catch (const DisconnectedInput&) {
  }
  try {
    hyp.right_transmission_regular = all_pairs_distances(h).transmission_regular;
  } catch (const DisconnectedInput&) {
  }
  hyp.right_regular = constant_degree(h.adj, h.n, hyp.right_degree);
  if (!hyp.right_regular) hyp.right_degree = -1;
  // in a graph every edge is doubly directed; covered iff no isolated vertex
  hyp.left_doubly_directed_cover = true;
  for (int v = 0; v < g.n; ++v) {
    bool any = false;
    for (int w = 0; w < g.n; ++w) any = any || g.adj[v][w];
    if (!any) hyp.left_doubly_directed_cover = false;
  }
  return hyp;
}

ProductHypotheses product_hypotheses(const Digraph& g, const Digraph& h) {
  ProductHypotheses hyp;
  std::optional<DistanceData> ddh;
  try {
    hyp.left_transmission_regular = all_pairs_distances(g).transmission_regular;
  } catch (const DisconnectedInput&) {
  }
  try {
    ddh = all_pairs_distances(h);
    hyp.right_transmission_regular = ddh->transmission_regular;
  } catch (const DisconnectedInput&) {
  }
  hyp.right_regular = constant_degree(h.adj, h.n, hyp.right_degree);
  if (!hyp.right_regular) hyp.right_degree = -1;
  hyp.left_doubly_directed_cover = g.n > 0;
  for (int v = 0; v < g.n; ++v) {
    bool any = false;
    for (int w = 0; w < g.n; ++w) any = any || (g.adj[v][w] && g.adj[w][v]);
    if (!any) hyp.left_doubly_directed_cover = false;
  }
  if (ddh) {
    auto girth = digraph_girth(g);
    hyp.diam_right_le_girth_left = girth && ddh->diameter <= *girth;
  }
  return hyp;
}

// ---------------------------------------------------------------------------
// spectrum assembly helpers

namespace {

EigenValue affine_ev(const EigenValue& ev, const Rat& scale, const Rat& shift) {
  EigenValue w;
  w.multiplicity = ev.multiplicity;
  double sd = rat_to_double(scale), hd = rat_to_double(shift);
  w.re = hd + sd * ev.re;
  w.im = sd * ev.im;
  if (ev.exact) {
    const Surd& s = *ev.exact;
    w.exact = Surd(shift + scale * s.p, scale * s.q, s.s);
  }
  return w;
}

// removes one copy of the rational eigenvalue v; false when absent
bool remove_one(Spectrum& sp, const Rat& v) {
  double vd = rat_to_double(v);
  for (size_t i = 0; i < sp.values.size(); ++i) {
    EigenValue& ev = sp.values[i];
    bool match;
    if (ev.exact)
      match = ev.exact->q == 0 && ev.exact->p == v;
    else
      match = std::abs(ev.im) <= 1e-9 &&
              std::abs(ev.re - vd) <= 1e-9 * std::max(1.0, std::abs(vd));
    if (!match) continue;
    if (--ev.multiplicity == 0) sp.values.erase(sp.values.begin() + (long)i);
    return true;
  }
  return false;
}

void merge_duplicates(Spectrum& sp) {
  std::vector<EigenValue> out;
  for (const EigenValue& ev : sp.values) {
    bool merged = false;
    for (EigenValue& w : out) {
      if (ev.exact && w.exact) {
        if (ev.exact->p == w.exact->p && ev.exact->q == w.exact->q &&
            ev.exact->s == w.exact->s) {
          w.multiplicity += ev.multiplicity;
          merged = true;
          break;
        }
      } else if (!ev.exact && !w.exact && ev.re == w.re && ev.im == w.im) {
        w.multiplicity += ev.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(ev);
  }
  sp.values = std::move(out);
  sp.exact = true;
  for (const EigenValue& ev : sp.values)
    if (!ev.exact) sp.exact = false;
  sp.sort_values();
}

void require_order(const Spectrum& sp, int expect) {
  if (sp.order() != expect)
    throw NotSupported("product spectrum assembly lost eigenvalues");
}

}  // namespace

// ---------------------------------------------------------------------------
// closed forms

Spectrum cartesian_spectrum_tr(const Spectrum& left_dist, const Spectrum& right_dist,
                               int n, int np, const Rat& t, const Rat& tp) {
  Spectrum l = left_dist, r = right_dist;
  if (!remove_one(l, t))
    throw InvalidArgument("left spectrum lacks its transmission eigenvalue");
  if (!remove_one(r, tp))
    throw InvalidArgument("right spectrum lacks its transmission eigenvalue");
  Spectrum out;
  EigenValue rho;
  Rat rv = t * make_rat(np) + tp * make_rat(n);
  rho.re = rat_to_double(rv);
  rho.exact = Surd(rv);
  rho.multiplicity = 1;
  out.values.push_back(rho);
  for (const EigenValue& ev : l.values)
    out.values.push_back(affine_ev(ev, make_rat(np), Rat(0)));
  for (const EigenValue& ev : r.values)
    out.values.push_back(affine_ev(ev, make_rat(n), Rat(0)));
  if (n > 1 && np > 1) {
    EigenValue z;
    z.re = 0.0;
    z.exact = Surd(Rat(0));
    z.multiplicity = (n - 1) * (np - 1);
    out.values.push_back(z);
  }
  merge_duplicates(out);
  require_order(out, n * np);
  return out;
}

Spectrum lexicographic_spectrum(const Spectrum& left_dist, const Spectrum& right_adj,
                                int n, int np, long long kp) {
  Spectrum r = right_adj;
  if (!remove_one(r, make_rat((long)kp)))
    throw InvalidArgument("right adjacency spectrum lacks its degree eigenvalue");
  Rat shift = make_rat(2 * (long)np - (long)kp - 2);
  Spectrum out;
  for (const EigenValue& ev : left_dist.values)
    out.values.push_back(affine_ev(ev, make_rat(np), shift));
  for (const EigenValue& ev : r.values) {
    EigenValue w = affine_ev(ev, make_rat(-1), make_rat(-2));
    w.multiplicity *= n;
    out.values.push_back(w);
  }
  merge_duplicates(out);
  require_order(out, n * np);
  return out;
}

Spectrum lexicographic_spectrum_transmission(const Spectrum& left_dist,
                                             const Spectrum& right_dist,
                                             int n, int np, const Rat& tp) {
  Spectrum r = right_dist;
  if (!remove_one(r, tp))
    throw InvalidArgument("right spectrum lacks its transmission eigenvalue");
  Spectrum out;
  for (const EigenValue& ev : left_dist.values)
    out.values.push_back(affine_ev(ev, make_rat(np), tp));
  for (const EigenValue& ev : r.values) {
    EigenValue w = ev;
    w.multiplicity *= n;
    out.values.push_back(w);
  }
  merge_duplicates(out);
  require_order(out, n * np);
  return out;
}

// ---------------------------------------------------------------------------
// verified closed forms

namespace {

template <typename ProductT>
void attach_tr_transforms(ProductSpectra& out, const ProductT& prod) {
  auto dd = all_pairs_distances(prod);
  out.transmission_regular = dd.transmission_regular;
  if (!dd.transmission_regular) return;
  out.transmission = dd.transmissions[0];
  Rat t((long)out.transmission);
  out.dq = transform_tr_spectrum(out.dist, t, Variant::DQ);
  out.dl = transform_tr_spectrum(out.dist, t, Variant::DL);
  out.dnl = transform_tr_spectrum(out.dist, t, Variant::DNL);
}

Spectrum adjacency_spectrum(const std::vector<std::vector<bool>>& adj, int n) {
  IMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = adj[i][j] ? 1 : 0;
  return eigenvalues(QMat::from(a));
}

}  // namespace

ProductSpectra product_spectra(const GraphProductSpec& spec) {
  const Graph& g = spec.left;
  const Graph& h = spec.right;
  ProductSpectra out;
  out.hypotheses = product_hypotheses(g, h);
  if (spec.kind == ProductKind::Cartesian) {
    if (!out.hypotheses.left_transmission_regular ||
        !out.hypotheses.right_transmission_regular)
      throw InvalidArgument(
          "cartesian closed form needs transmission regular operands");
    auto ddg = all_pairs_distances(g), ddh = all_pairs_distances(h);
    Rat t((long)ddg.transmissions[0]), tp((long)ddh.transmissions[0]);
    out.formula = "cartesian-transmission-regular";
    out.dist = cartesian_spectrum_tr(variant_spectrum(ddg, Variant::D),
                                     variant_spectrum(ddh, Variant::D), g.n, h.n,
                                     t, tp);
  } else {
    if (g.n < 2)
      throw InvalidArgument("lexicographic closed form needs a left operand "
                            "with at least two vertices");
    if (!out.hypotheses.right_regular)
      throw InvalidArgument("lexicographic closed form needs a regular right "
                            "operand");
    auto ddg = all_pairs_distances(g);  // DisconnectedInput when not connected
    out.formula = "lexicographic-regular";
    out.dist = lexicographic_spectrum(variant_spectrum(ddg, Variant::D),
                                      adjacency_spectrum(h.adj, h.n), g.n, h.n,
                                      out.hypotheses.right_degree);
  }
  attach_tr_transforms(out, product_graph(spec));
  return out;
}

ProductSpectra product_spectra(const DigraphProductSpec& spec) {
  const Digraph& g = spec.left;
  const Digraph& h = spec.right;
  ProductSpectra out;
  out.hypotheses = product_hypotheses(g, h);
  if (spec.kind == ProductKind::Cartesian) {
    if (!out.hypotheses.left_transmission_regular ||
        !out.hypotheses.right_transmission_regular)
      throw InvalidArgument(
          "cartesian closed form needs transmission regular operands");
    auto ddg = all_pairs_distances(g), ddh = all_pairs_distances(h);
    Rat t((long)ddg.transmissions[0]), tp((long)ddh.transmissions[0]);
    out.formula = "cartesian-transmission-regular";
    out.dist = cartesian_spectrum_tr(variant_spectrum(ddg, Variant::D),
                                     variant_spectrum(ddh, Variant::D), g.n, h.n,
                                     t, tp);
  } else {
    if (g.n < 2)
      throw InvalidArgument("lexicographic closed form needs a left operand "
                            "with at least two vertices");
    auto ddg = all_pairs_distances(g);
    bool right_strong = true;
    try {
      all_pairs_distances(h);
    } catch (const DisconnectedInput&) {
      right_strong = false;
    }
    if (out.hypotheses.left_doubly_directed_cover &&
        out.hypotheses.right_regular && right_strong) {
      out.formula = "lexicographic-regular";
      out.dist = lexicographic_spectrum(variant_spectrum(ddg, Variant::D),
                                        adjacency_spectrum(h.adj, h.n), g.n, h.n,
                                        out.hypotheses.right_degree);
    } else if (out.hypotheses.right_transmission_regular &&
               out.hypotheses.diam_right_le_girth_left) {
      auto ddh = all_pairs_distances(h);
      Rat tp((long)ddh.transmissions[0]);
      out.formula = "lexicographic-transmission-regular";
      out.dist = lexicographic_spectrum_transmission(
          variant_spectrum(ddg, Variant::D), variant_spectrum(ddh, Variant::D),
          g.n, h.n, tp);
    } else {
      throw InvalidArgument(
          "no lexicographic closed form applies: need a doubly-directed cover "
          "with a regular right operand, or a transmission regular right "
          "operand whose diameter is at most the left girth");
    }
  }
  attach_tr_transforms(out, product_digraph(spec));
  return out;
}

Spectrum iterated_cartesian_power_spectrum(const Rat& t, const Rat& p2, int m,
                                           int n, int ell) {
  if (n < 2 || ell < 1 || m < 0 || m > n - 1)
    throw InvalidArgument("bad iterated power parameters");
  Int scale = 1;
  for (int i = 1; i < ell; ++i) scale *= n;
  Int total = scale * n;
  if (total > 100000000) throw InvalidArgument("iterated power too large");
  long long order = (long long)mpz_get_si(total.get_mpz_t());
  Rat sc(scale);
  Spectrum out;
  EigenValue rho;
  Rat rv = t * sc * make_rat(ell);
  rho.re = rat_to_double(rv);
  rho.exact = Surd(rv);
  rho.multiplicity = 1;
  out.values.push_back(rho);
  if (m * ell > 0) {
    EigenValue mid;
    Rat mv = p2 * sc;
    mid.re = rat_to_double(mv);
    mid.exact = Surd(mv);
    mid.multiplicity = m * ell;
    out.values.push_back(mid);
  }
  long long zeros = order - 1 - (long long)m * ell;
  if (zeros < 0) throw InvalidArgument("multiplicities exceed the order");
  if (zeros > 0) {
    EigenValue z;
    z.re = 0.0;
    z.exact = Surd(Rat(0));
    z.multiplicity = (int)zeros;
    out.values.push_back(z);
  }
  merge_duplicates(out);
  require_order(out, (int)order);
  return out;
}

}  // namespace distspec
