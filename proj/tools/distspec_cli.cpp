// batch front end: spectra reports, cospectrality census, family oracles,
// product closed forms, twin quotients, addressing, cousin constructions,
// coefficient analytics and a property-suite verifier.
//
// exit codes: 0 success, 1 usage/input error, 2 property violation.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "distspec/addressing.hpp"
#include "distspec/cospectral.hpp"
#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/jsonio.hpp"
#include "distspec/matrices.hpp"
#include "distspec/poly.hpp"
#include "distspec/products.hpp"
#include "distspec/reductions.hpp"
#include "distspec/spectra.hpp"

namespace ds = distspec;
using ds::Json;

namespace {

struct CmdOpts {
  std::string graph6, digraph6, file, family;
  std::string variant = "all";
  std::string format = "text";
  double tolerance = 1e-9;
  int n = 0;
  int jobs = 1;
  // product operands
  std::string left, right;
  std::string kind = "cartesian";
};

void add_input_opts(CLI::App* c, CmdOpts& o) {
  c->add_option("--graph6", o.graph6, "graph6 literal");
  c->add_option("--digraph6", o.digraph6, "digraph6 literal");
  c->add_option("--file", o.file, "file holding graph6, digraph6 or an edge list");
  c->add_option("--family", o.family, "family spec NAME[:p1,p2,...]");
}

void add_common_opts(CLI::App* c, CmdOpts& o, bool with_variant = true) {
  if (with_variant)
    c->add_option("--variant", o.variant, "D|DQ|DL|DNL|all or a comma list")
        ->capture_default_str();
  c->add_option("--format", o.format, "json|csv|text")->capture_default_str();
  c->add_option("--tolerance", o.tolerance, "numeric comparison tolerance")
      ->capture_default_str();
}

std::vector<ds::Variant> parse_variants(const std::string& s) {
  if (s == "all")
    return {ds::Variant::D, ds::Variant::DQ, ds::Variant::DL, ds::Variant::DNL};
  std::vector<ds::Variant> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');)
    out.push_back(ds::variant_from_name(tok));
  if (out.empty()) throw ds::InvalidArgument("empty variant list");
  return out;
}

void require_format(const std::string& fmt, bool csv_ok = false) {
  if (fmt == "json" || fmt == "text") return;
  if (fmt == "csv" && csv_ok) return;
  throw ds::InvalidArgument("unsupported format for this command: " + fmt);
}

struct LoadedInput {
  bool directed = false;
  ds::Graph g;
  ds::Digraph d;
  std::string label;
};

LoadedInput load_one(const CmdOpts& o) {
  int sources = (int)!o.graph6.empty() + (int)!o.digraph6.empty() +
                (int)!o.file.empty() + (int)!o.family.empty();
  if (sources != 1)
    throw ds::InvalidArgument(
        "exactly one of --graph6/--digraph6/--file/--family is required");
  LoadedInput in;
  if (!o.graph6.empty()) {
    in.g = ds::parse_graph6(o.graph6);
    in.label = o.graph6;
  } else if (!o.digraph6.empty()) {
    in.directed = true;
    in.d = ds::parse_digraph6(o.digraph6);
    in.label = o.digraph6;
  } else if (!o.family.empty()) {
    ds::FamilySpec spec = ds::FamilySpec::parse(o.family);
    in.label = spec.str();
    if (spec.is_digraph()) {
      in.directed = true;
      in.d = ds::build_digraph(spec);
    } else {
      in.g = ds::build_graph(spec);
    }
  } else {
    std::ifstream f(o.file);
    if (!f) throw ds::InvalidArgument("cannot open " + o.file);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    std::string first;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (line.empty() || line[0] == '#') continue;
      first = line;
      break;
    }
    if (first.empty()) throw ds::ParseError("no graph in " + o.file);
    if (first[0] == '&') {
      in.directed = true;
      in.d = ds::parse_digraph6(first);
    } else if (first.find(' ') != std::string::npos) {
      in.g = ds::parse_edge_list(text);
    } else {
      in.g = ds::parse_graph6(first);
    }
    in.label = o.file;
  }
  return in;
}

// exact char poly of the variant matrix for any distance data
ds::QPoly variant_poly(const ds::DistanceData& dd, ds::Variant v) {
  if (v == ds::Variant::DNL) {
    for (long long t : dd.transmissions)
      if (t == 0)
        throw ds::InvalidArgument("normalized variant undefined: zero transmission");
    return ds::charpoly_diag_scaled(dd.transmissions,
                                    ds::variant_matrix_int(dd, ds::Variant::DL));
  }
  return ds::char_poly_exact(ds::variant_matrix_int(dd, v));
}

std::string b2s(bool b) { return b ? "true" : "false"; }

void emit(const std::string& fmt, const Json& j, const std::vector<std::string>& text) {
  if (fmt == "json") {
    std::cout << ds::dump_json(j);
  } else {
    for (const auto& line : text) std::cout << line << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_spectra(const CmdOpts& o) {
  require_format(o.format);
  auto vars = parse_variants(o.variant);
  LoadedInput in = load_one(o);
  Json out;
  std::vector<std::string> text;
  out["command"] = "spectra";
  out["input"] = in.label;
  out["directed"] = in.directed;
  ds::DistanceData dd =
      in.directed ? ds::all_pairs_distances(in.d) : ds::all_pairs_distances(in.g);
  int n = dd.n;
  out["n"] = n;
  if (in.directed) {
    out["arcs"] = in.d.arc_count();
    out["digraph6"] = ds::to_digraph6(in.d);
  } else {
    out["edges"] = in.g.edge_count();
    out["graph6"] = ds::to_graph6(in.g);
  }
  out["diameter"] = dd.diameter;
  out["wiener"] = ds::rat_to_string(dd.wiener);
  out["transmission_regular"] = dd.transmission_regular;
  Json tr = Json::array();
  for (long long t : dd.transmissions) tr.push_back(t);
  out["transmissions"] = tr;
  text.push_back("input: " + in.label + "  n=" + std::to_string(n) +
                 (in.directed ? "  arcs=" + std::to_string(in.d.arc_count())
                              : "  edges=" + std::to_string(in.g.edge_count())));
  text.push_back("diameter=" + std::to_string(dd.diameter) +
                 "  wiener=" + ds::rat_to_string(dd.wiener) +
                 "  transmission_regular=" + b2s(dd.transmission_regular));

  bool all_requested = (o.variant == "all");
  Json vj;
  for (ds::Variant v : vars) {
    const char* vn = ds::variant_name(v);
    if (v == ds::Variant::DNL && all_requested) {
      bool zero_t = false;
      for (long long t : dd.transmissions) zero_t |= (t == 0);
      if (zero_t) {
        vj[vn] = Json{{"skipped", "normalized variant undefined: zero transmission"}};
        text.push_back(std::string("[") + vn + "] skipped: zero transmission");
        continue;
      }
    }
    ds::QPoly p = variant_poly(dd, v);
    ds::Spectrum sp = ds::variant_spectrum(dd, v);
    Json e;
    e["char_poly"] = ds::to_json(p);
    e["spectrum"] = ds::to_json(sp);
    e["spectral_radius"] = ds::format_double(sp.spectral_radius());
    text.push_back(std::string("[") + vn + "] char_poly: " + p.str());
    text.push_back(std::string("[") + vn + "] spectrum: " + sp.str());
    std::string line = std::string("[") + vn +
                       "] spectral_radius=" + ds::format_double(sp.spectral_radius());
    if (!in.directed) {
      ds::Inertia ine = ds::inertia_exact(p);
      e["inertia"] = ds::to_json(ine);
      line += "  inertia=(" + std::to_string(ine.n_plus) + "," +
              std::to_string(ine.n_minus) + "," + std::to_string(ine.n_zero) + ")";
    }
    text.push_back(line);
    vj[vn] = e;
  }
  out["variants"] = vj;

  if (!in.directed) {
    ds::ClassificationReport cls = ds::classify(in.g);
    out["classification"] = ds::to_json(cls);
    text.push_back("classification: optimistic=" + b2s(cls.optimistic) +
                   "  one_positive_d=" + b2s(cls.one_positive_d_eigenvalue) +
                   "  distinct_d=" + std::to_string(cls.distinct_d_eigenvalues) +
                   "  distance_regular=" + b2s(cls.distance_regular));
  }
  if (n >= 2) {
    ds::BoundsReport br =
        in.directed ? ds::verify_bounds(in.d) : ds::verify_bounds(in.g);
    out["bounds"] = ds::to_json(br);
    text.push_back("bounds: " + std::to_string(br.checks.size()) +
                   " checks  all_hold=" + b2s(br.all_hold) +
                   "  tightness_consistent=" + b2s(br.tightness_consistent));
    for (const auto& c : br.checks)
      if (!c.holds)
        text.push_back("  FAILED " + c.name + ": " + ds::format_double(c.lhs) +
                       " <= " + ds::format_double(c.rhs));
  }
  emit(o.format, out, text);
  return 0;
}

int cmd_census(const CmdOpts& o) {
  require_format(o.format, /*csv_ok=*/true);
  auto vars = parse_variants(o.variant);
  ds::CensusResult r;
  if (o.n > 0 && o.file.empty()) {
    r = ds::census_of_order(o.n, vars, o.jobs);
  } else if (o.n == 0 && !o.file.empty()) {
    std::ifstream f(o.file);
    if (!f) throw ds::InvalidArgument("cannot open " + o.file);
    auto cat = ds::read_graph6_catalog(f);
    r = ds::census(cat, vars, o.jobs);
  } else {
    throw ds::InvalidArgument("census needs exactly one of --n or --file");
  }
  Json out;
  out["command"] = "census";
  Json payload = ds::to_json(r);
  for (auto& [k, v] : payload.items()) out[k] = v;
  std::vector<std::string> text = {"n,graphs,D,DQ,DL,DNL", r.csv_row()};
  emit(o.format, out, text);
  return 0;
}

int cmd_family(const CmdOpts& o) {
  require_format(o.format);
  if (o.family.empty()) throw ds::InvalidArgument("family requires --family");
  auto vars = parse_variants(o.variant);
  ds::FamilySpec spec = ds::FamilySpec::parse(o.family);
  Json out;
  std::vector<std::string> text;
  out["command"] = "family";
  out["family"] = spec.str();
  out["order"] = spec.order();
  text.push_back("family: " + spec.str() + "  order=" + std::to_string(spec.order()));
  ds::DistanceData dd;
  if (spec.is_digraph())
    dd = ds::all_pairs_distances(ds::build_digraph(spec));
  else
    dd = ds::all_pairs_distances(ds::build_graph(spec));
  int violations = 0;
  Json vj;
  for (ds::Variant v : vars) {
    const char* vn = ds::variant_name(v);
    Json e;
    if (!ds::has_closed_form(spec, v)) {
      e["closed_form"] = false;
      text.push_back(std::string("[") + vn + "] no closed form");
      vj[vn] = e;
      continue;
    }
    ds::Spectrum oracle = ds::oracle_spectrum(spec, v);
    ds::Spectrum direct = ds::variant_spectrum(dd, v);
    bool agree = ds::spectra_close(oracle, direct, o.tolerance);
    e["closed_form"] = true;
    e["oracle"] = ds::to_json(oracle);
    e["direct"] = ds::to_json(direct);
    e["agree"] = agree;
    // exact-level comparison when the closed form is rational throughout
    bool all_rational = oracle.exact;
    std::vector<std::pair<ds::Rat, int>> roots;
    for (const auto& ev : oracle.values) {
      if (!ev.exact || !ev.exact->is_rational()) {
        all_rational = false;
        break;
      }
      roots.push_back({ev.exact->p, ev.multiplicity});
    }
    if (all_rational) {
      bool poly_eq = ds::poly_from_roots(roots) == variant_poly(dd, v);
      e["char_poly_equal"] = poly_eq;
      if (!poly_eq) ++violations;
    }
    if (!agree) ++violations;
    text.push_back(std::string("[") + vn + "] oracle: " + oracle.str());
    text.push_back(std::string("[") + vn + "] direct: " + direct.str());
    text.push_back(std::string("[") + vn + "] agree=" + b2s(agree));
    vj[vn] = e;
  }
  out["variants"] = vj;
  out["violations"] = violations;
  text.push_back(violations == 0 ? "family oracle: PASS" : "family oracle: FAIL");
  emit(o.format, out, text);
  return violations == 0 ? 0 : 2;
}

LoadedInput parse_operand(const std::string& s) {
  LoadedInput in;
  in.label = s;
  if (!s.empty() && s[0] == '&') {
    in.directed = true;
    in.d = ds::parse_digraph6(s);
    return in;
  }
  try {
    ds::FamilySpec spec = ds::FamilySpec::parse(s);
    if (spec.is_digraph()) {
      in.directed = true;
      in.d = ds::build_digraph(spec);
    } else {
      in.g = ds::build_graph(spec);
    }
    in.label = spec.str();
    return in;
  } catch (const std::runtime_error&) {
  }
  try {
    in.g = ds::parse_graph6(s);
    return in;
  } catch (const std::runtime_error&) {
    throw ds::InvalidArgument("cannot parse operand: " + s);
  }
}

int cmd_product(const CmdOpts& o) {
  require_format(o.format);
  if (o.left.empty() || o.right.empty())
    throw ds::InvalidArgument("product requires --left and --right");
  LoadedInput a = parse_operand(o.left), b = parse_operand(o.right);
  if (a.directed != b.directed)
    throw ds::InvalidArgument("product operands must both be graphs or both digraphs");
  ds::ProductKind kind = ds::product_kind_from_name(o.kind);
  Json out;
  std::vector<std::string> text;
  out["command"] = "product";
  out["kind"] = ds::product_kind_name(kind);
  out["left"] = a.label;
  out["right"] = b.label;
  text.push_back(std::string("product: ") + ds::product_kind_name(kind) + "  left=" +
                 a.label + "  right=" + b.label);
  ds::ProductSpectra ps;
  ds::DistanceData dd;
  if (a.directed) {
    ds::DigraphProductSpec spec{kind, a.d, b.d};
    ps = ds::product_spectra(spec);
    dd = ds::all_pairs_distances(ds::product_digraph(spec));
  } else {
    ds::GraphProductSpec spec{kind, a.g, b.g};
    ps = ds::product_spectra(spec);
    dd = ds::all_pairs_distances(ds::product_graph(spec));
  }
  out["closed_form"] = ds::to_json(ps);
  int violations = 0;
  double tol = std::max(o.tolerance, 1e-7);  // clustering floor on the direct side
  auto compare = [&](const char* name, const ds::Spectrum& formula, ds::Variant v) {
    ds::Spectrum direct = ds::variant_spectrum(dd, v);
    bool agree = ds::spectra_close(formula, direct, tol);
    out["direct_agree"][name] = agree;
    text.push_back(std::string("[") + name + "] formula: " + formula.str());
    text.push_back(std::string("[") + name + "] agree=" + b2s(agree));
    if (!agree) ++violations;
  };
  text.push_back("formula: " + ps.formula);
  compare("D", ps.dist, ds::Variant::D);
  if (ps.dq) compare("DQ", *ps.dq, ds::Variant::DQ);
  if (ps.dl) compare("DL", *ps.dl, ds::Variant::DL);
  if (ps.dnl) compare("DNL", *ps.dnl, ds::Variant::DNL);
  out["violations"] = violations;
  text.push_back(violations == 0 ? "product closed form: PASS"
                                 : "product closed form: FAIL");
  emit(o.format, out, text);
  return violations == 0 ? 0 : 2;
}

int cmd_twins(const CmdOpts& o) {
  require_format(o.format);
  auto vars = parse_variants(o.variant);
  LoadedInput in = load_one(o);
  if (in.directed) throw ds::InvalidArgument("twins expects an undirected graph");
  const ds::Graph& g = in.g;
  ds::DistanceData dd = ds::all_pairs_distances(g);
  ds::TwinPartition part = ds::find_twins(g);
  Json out;
  std::vector<std::string> text;
  out["command"] = "twins";
  out["input"] = in.label;
  out["n"] = g.n;
  out["has_twins"] = part.has_twins();
  out["classes"] = ds::to_json(part);
  text.push_back("input: " + in.label + "  n=" + std::to_string(g.n) +
                 "  has_twins=" + b2s(part.has_twins()));
  for (const auto& c : part.classes) {
    std::string line = std::string("class {");
    for (size_t i = 0; i < c.vertices.size(); ++i)
      line += (i ? "," : "") + std::to_string(c.vertices[i]);
    line += std::string("} type=") + ds::twin_type_name(c.type) +
            " transmission=" + std::to_string(c.transmission);
    text.push_back(line);
  }
  int violations = 0;
  Json vj;
  for (ds::Variant v : vars) {
    const char* vn = ds::variant_name(v);
    ds::QMat m = ds::variant_matrix(dd, v);
    ds::QuotientAssembly qa = ds::quotient_spectrum(m, part, v);
    ds::QPoly direct = ds::cospectral_fingerprint(g, v);
    bool match = qa.char_poly == direct;
    Json e;
    e["assembly"] = ds::to_json(qa);
    e["char_poly_match"] = match;
    if (!match) ++violations;
    text.push_back(std::string("[") + vn +
                   "] quotient order=" + std::to_string(qa.quotient.B.n) +
                   "  assembled == direct: " + b2s(match));
    text.push_back(std::string("[") + vn + "] spectrum: " + qa.spectrum.str());
    vj[vn] = e;
  }
  out["variants"] = vj;
  out["violations"] = violations;
  text.push_back(violations == 0 ? "twin quotient: PASS" : "twin quotient: FAIL");
  emit(o.format, out, text);
  return violations == 0 ? 0 : 2;
}

int cmd_address(const CmdOpts& o) {
  require_format(o.format);
  LoadedInput in = load_one(o);
  if (in.directed) throw ds::InvalidArgument("address expects an undirected graph");
  const ds::Graph& g = in.g;
  Json out;
  std::vector<std::string> text;
  out["command"] = "address";
  out["input"] = in.label;
  out["n"] = g.n;
  ds::AddressingResult res;
  if (ds::is_tree(g) && g.n >= 2) {
    res.witness = ds::tree_addressing(g);
    res.length = g.n - 1;
    out["method"] = "tree";
  } else {
    res = ds::minimal_addressing_search(g);
    out["method"] = "search";
    ds::Inertia ine = ds::inertia_exact(
        ds::cospectral_fingerprint(g, ds::Variant::D));
    out["lower_bound"] = std::max(ine.n_plus, ine.n_minus);
    out["upper_bound"] = g.n - 1;
  }
  bool ok = ds::verify_addressing(g, res.witness);
  out["length"] = res.length;
  out["witness"] = ds::to_json(res).at("witness");
  out["verified"] = ok;
  text.push_back("input: " + in.label + "  n=" + std::to_string(g.n));
  text.push_back("N = " + std::to_string(res.length) + "  (" +
                 out["method"].get<std::string>() + ")");
  for (const auto& w : res.witness) text.push_back(w);
  text.push_back(std::string("verified=") + b2s(ok));
  emit(o.format, out, text);
  return ok ? 0 : 2;
}

int cmd_cousins(const CmdOpts& o) {
  require_format(o.format);
  LoadedInput in = load_one(o);
  if (in.directed) throw ds::InvalidArgument("cousins expects an undirected graph");
  const ds::Graph& g = in.g;
  auto sets = ds::find_cousins(g);
  Json out;
  std::vector<std::string> text;
  out["command"] = "cousins";
  out["input"] = in.label;
  out["n"] = g.n;
  out["set_count"] = (long long)sets.size();
  text.push_back("input: " + in.label + "  cousin sets: " + std::to_string(sets.size()));
  long long emitted = 0;
  int violations = 0;
  Json list = Json::array();
  for (const auto& s : sets) {
    Json sj;
    sj["vertices"] = Json::array({s.v1, s.v2, s.v3, s.v4});
    std::string base = "{" + std::to_string(s.v1) + "," + std::to_string(s.v2) +
                       "}/{" + std::to_string(s.v3) + "," + std::to_string(s.v4) + "}";
    struct Attempt {
      const char* name;
      ds::CousinSet set;
      ds::CousinForm form;
    };
    ds::CousinSet swapped{s.v2, s.v1, s.v3, s.v4};
    std::vector<Attempt> attempts = {
        {"within", s, ds::CousinForm::WithinPair},
        {"across", s, ds::CousinForm::AcrossPairs},
        {"across_swapped", swapped, ds::CousinForm::AcrossPairs},
    };
    Json aj = Json::array();
    for (const auto& at : attempts) {
      Json e;
      e["form"] = at.name;
      auto pair = ds::cousin_construction(g, at.set, at.form);
      e["emitted"] = pair.has_value();
      if (pair) {
        ++emitted;
        bool cos = ds::are_cospectral(pair->first, pair->second, ds::Variant::DL);
        bool noniso = !ds::is_isomorphic(pair->first, pair->second);
        e["first"] = ds::to_graph6(pair->first);
        e["second"] = ds::to_graph6(pair->second);
        e["dl_cospectral"] = cos;
        e["non_isomorphic"] = noniso;
        if (!cos || !noniso) ++violations;
        text.push_back("set " + base + " " + at.name + ": " +
                       ds::to_graph6(pair->first) + "  " +
                       ds::to_graph6(pair->second) + "  dl_cospectral=" + b2s(cos) +
                       "  non_isomorphic=" + b2s(noniso));
      }
      aj.push_back(e);
    }
    sj["attempts"] = aj;
    list.push_back(sj);
  }
  out["sets"] = list;
  out["emitted_pairs"] = emitted;
  out["violations"] = violations;
  text.push_back("emitted pairs: " + std::to_string(emitted));
  if (violations) text.push_back("cousins: FAIL");
  emit(o.format, out, text);
  return violations == 0 ? 0 : 2;
}

int cmd_coeffs(const CmdOpts& o) {
  require_format(o.format);
  auto vars = parse_variants(o.variant);
  LoadedInput in = load_one(o);
  if (in.directed) throw ds::InvalidArgument("coeffs expects an undirected graph");
  const ds::Graph& g = in.g;
  ds::DistanceData dd = ds::all_pairs_distances(g);
  Json out;
  std::vector<std::string> text;
  out["command"] = "coeffs";
  out["input"] = in.label;
  out["n"] = g.n;
  text.push_back("input: " + in.label + "  n=" + std::to_string(g.n));
  bool all_requested = (o.variant == "all");
  Json vj;
  for (ds::Variant v : vars) {
    const char* vn = ds::variant_name(v);
    if (v == ds::Variant::DNL && all_requested && g.n == 1) {
      vj[vn] = Json{{"skipped", "normalized variant undefined: zero transmission"}};
      continue;
    }
    ds::QPoly p = variant_poly(dd, v);
    Json e;
    e["char_poly"] = ds::to_json(p);
    ds::CoefficientReport raw = ds::coefficient_analytics(p, ds::CoeffMode::Raw);
    ds::CoefficientReport abs = ds::coefficient_analytics(p, ds::CoeffMode::Absolute);
    e["raw"] = ds::to_json(raw);
    e["absolute"] = ds::to_json(abs);
    text.push_back(std::string("[") + vn + "] coeffs: " + p.str());
    text.push_back(std::string("[") + vn + "] raw: log_concave=" +
                   b2s(raw.log_concave) + " unimodal=" + b2s(raw.unimodal) +
                   " peak=" + std::to_string(raw.peak_index) + " signs=" +
                   raw.sign_pattern);
    text.push_back(std::string("[") + vn + "] absolute: log_concave=" +
                   b2s(abs.log_concave) + " unimodal=" + b2s(abs.unimodal) +
                   " peak=" + std::to_string(abs.peak_index) +
                   " abs_nonincreasing=" + b2s(abs.abs_nonincreasing));
    if (v == ds::Variant::D && ds::is_tree(g)) {
      ds::CoefficientReport tn =
          ds::coefficient_analytics(p, ds::CoeffMode::TreeNormalized);
      e["tree_normalized"] = ds::to_json(tn);
      text.push_back(std::string("[") + vn + "] tree_normalized: log_concave=" +
                     b2s(tn.log_concave) + " unimodal=" + b2s(tn.unimodal) +
                     " peak=" + std::to_string(tn.peak_index));
    }
    vj[vn] = e;
  }
  out["variants"] = vj;
  emit(o.format, out, text);
  return 0;
}

// aggregate property suite over one order: every exact identity, bound and
// theorem-shaped invariant the library exposes, checked graph by graph
int cmd_verify(const CmdOpts& o) {
  require_format(o.format);
  if (o.n < 3 || o.n > 8)
    throw ds::NotSupported("verify supports 3 <= n <= 8");
  int n = o.n;
  struct Check {
    std::string name;
    long long pass = 0, fail = 0;
    std::vector<std::string> examples;
    void note(bool ok, const ds::Graph& g) {
      if (ok) {
        ++pass;
        return;
      }
      ++fail;
      if (examples.size() < 5) examples.push_back(ds::to_graph6(g));
    }
  };
  std::vector<Check> checks = {
      {"charpoly_two_routes"}, {"trace_identities"}, {"laplacian_kernels"},
      {"bounds"},              {"coefficient_laws"}, {"twin_quotient"},
      {"block_determinant"},   {"interlacing"},      {"addressing_sandwich"},
  };
  Check& two_routes = checks[0];
  Check& traces = checks[1];
  Check& kernels = checks[2];
  Check& bounds = checks[3];
  Check& coeffs = checks[4];
  Check& twins = checks[5];
  Check& blockdet = checks[6];
  Check& interlacing = checks[7];
  Check& addressing = checks[8];

  auto cat = ds::enumerate_connected_graphs(n);
  long long idx = 0;
  for (const ds::Graph& g : cat) {
    ++idx;
    ds::DistanceData dd = ds::all_pairs_distances(g);
    ds::QPoly pD = variant_poly(dd, ds::Variant::D);
    ds::QPoly pQ = variant_poly(dd, ds::Variant::DQ);
    ds::QPoly pL = variant_poly(dd, ds::Variant::DL);
    ds::QPoly pN = variant_poly(dd, ds::Variant::DNL);

    if (n < 8 || idx % 7 == 0) {
      ds::QPoly alt = ds::charpoly_berkowitz(
          ds::QMat::from(ds::variant_matrix_int(dd, ds::Variant::D)));
      two_routes.note(pD == alt, g);
    }
    ds::Rat two_w = dd.wiener * 2;
    traces.note(pD.coeff(n - 1) == 0 && pQ.coeff(n - 1) == -two_w &&
                    pL.coeff(n - 1) == -two_w,
                g);
    kernels.note(pL.coeff(0) == 0 && ds::count_roots_equal(pL, ds::Rat(0)) == 1 &&
                     ds::inertia_exact(pL).n_minus == 0 && pN.coeff(0) == 0 &&
                     ds::count_roots_equal(pN, ds::Rat(0)) == 1 &&
                     ds::inertia_exact(pN).n_minus == 0,
                g);
    ds::BoundsReport br = ds::verify_bounds(g);
    bounds.note(br.all_hold && br.tightness_consistent, g);
    bool claws = true;
    for (const ds::QPoly* p : {&pQ, &pL, &pN}) {
      ds::CoefficientReport cr = ds::coefficient_analytics(*p, ds::CoeffMode::Raw);
      claws = claws && cr.log_concave && cr.unimodal;
    }
    claws = claws &&
            ds::coefficient_analytics(pL, ds::CoeffMode::Absolute).abs_nonincreasing;
    coeffs.note(claws, g);
    ds::TwinPartition part = ds::find_twins(g);
    if (part.has_twins()) {
      bool match = true;
      const ds::QPoly* direct[4] = {&pD, &pQ, &pL, &pN};
      for (int v = 0; v < 4; ++v) {
        ds::QMat m = ds::variant_matrix(dd, (ds::Variant)v);
        match = match &&
                ds::quotient_spectrum(m, part, (ds::Variant)v).char_poly == *direct[v];
      }
      twins.note(match, g);
    }
    ds::Rat detD(0);
    if (n % 2 == 0)
      detD = pD.coeff(0);
    else
      detD = -pD.coeff(0);
    blockdet.note(ds::det_via_blocks(g) == detD, g);
    interlacing.note(ds::interlacing_check(g, 0), g);
    if (n <= 5) {
      ds::AddressingResult ar = ds::minimal_addressing_search(g);
      ds::Inertia ine = ds::inertia_exact(pD);
      addressing.note(std::max(ine.n_plus, ine.n_minus) <= ar.length &&
                          ar.length <= n - 1 && ds::verify_addressing(g, ar.witness),
                      g);
    }
  }
  ds::CensusResult census = ds::census(
      cat, {ds::Variant::D, ds::Variant::DQ, ds::Variant::DL, ds::Variant::DNL},
      o.jobs);
  bool census_ok = census.graph_count == (long long)cat.size();
  for (int v = 0; v < 4; ++v) {
    long long total = 0;
    for (const auto& c : census.classes[v]) {
      total += (long long)c.members.size();
      census_ok = census_ok && c.members.size() >= 2;
    }
    census_ok = census_ok && total == census.mate_count[v];
  }

  Json out;
  std::vector<std::string> text;
  out["command"] = "verify";
  out["n"] = n;
  out["graphs"] = (long long)cat.size();
  text.push_back("verify n=" + std::to_string(n) + ": " +
                 std::to_string(cat.size()) + " graphs");
  long long failures = census_ok ? 0 : 1;
  Json cj = Json::array();
  for (const auto& c : checks) {
    if (c.pass + c.fail == 0) continue;
    failures += c.fail;
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["fail"] = c.fail;
    if (!c.examples.empty()) e["examples"] = c.examples;
    cj.push_back(e);
    std::string line = c.name + ": pass=" + std::to_string(c.pass) +
                       " fail=" + std::to_string(c.fail);
    for (const auto& ex : c.examples) line += " " + ex;
    text.push_back(line);
  }
  out["checks"] = cj;
  out["census_consistent"] = census_ok;
  out["census_csv"] = census.csv_row();
  text.push_back("census: " + census.csv_row() +
                 "  consistent=" + b2s(census_ok));
  out["failures"] = failures;
  text.push_back(failures == 0 ? "verify: PASS" : "verify: FAIL");
  emit(o.format, out, text);
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact distance-matrix spectra toolkit"};
  app.require_subcommand(1);

  CmdOpts spectra_o, census_o, family_o, product_o, twins_o, address_o, cousins_o,
      coeffs_o, verify_o;

  CLI::App* spectra = app.add_subcommand(
      "spectra", "char polys, spectra, inertia and bounds for one (di)graph");
  add_input_opts(spectra, spectra_o);
  add_common_opts(spectra, spectra_o);

  CLI::App* census =
      app.add_subcommand("census", "cospectral-mate census over an order or catalog");
  census->add_option("--n", census_o.n, "catalog order (connected graphs)");
  census->add_option("--file", census_o.file, "graph6 catalog file");
  census->add_option("--jobs", census_o.jobs, "parallel fingerprint workers")
      ->capture_default_str();
  add_common_opts(census, census_o);

  CLI::App* family =
      app.add_subcommand("family", "closed-form oracle vs direct pipeline");
  family->add_option("--family", family_o.family, "family spec NAME[:p1,p2,...]")
      ->required();
  add_common_opts(family, family_o);

  CLI::App* product =
      app.add_subcommand("product", "product closed forms vs direct spectra");
  product->add_option("--left", product_o.left, "left operand: family spec or graph6")
      ->required();
  product->add_option("--right", product_o.right, "right operand")->required();
  product->add_option("--kind", product_o.kind, "cartesian|lexicographic")
      ->capture_default_str();
  add_common_opts(product, product_o, /*with_variant=*/false);

  CLI::App* twins =
      app.add_subcommand("twins", "twin partition and quotient spectrum assembly");
  add_input_opts(twins, twins_o);
  add_common_opts(twins, twins_o);

  CLI::App* address =
      app.add_subcommand("address", "squashed-cube addressing (exact or tree)");
  add_input_opts(address, address_o);
  add_common_opts(address, address_o, /*with_variant=*/false);

  CLI::App* cousins = app.add_subcommand(
      "cousins", "cousin vertex sets and one-edge cospectral constructions");
  add_input_opts(cousins, cousins_o);
  add_common_opts(cousins, cousins_o, /*with_variant=*/false);

  CLI::App* coeffs =
      app.add_subcommand("coeffs", "coefficient analytics of the char polys");
  add_input_opts(coeffs, coeffs_o);
  add_common_opts(coeffs, coeffs_o);

  CLI::App* verify =
      app.add_subcommand("verify", "aggregate property suite over one order");
  verify->add_option("--n", verify_o.n, "catalog order (3..8)")->required();
  verify->add_option("--jobs", verify_o.jobs, "parallel census workers")
      ->capture_default_str();
  add_common_opts(verify, verify_o, /*with_variant=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (spectra->parsed()) return cmd_spectra(spectra_o);
    if (census->parsed()) return cmd_census(census_o);
    if (family->parsed()) return cmd_family(family_o);
    if (product->parsed()) return cmd_product(product_o);
    if (twins->parsed()) return cmd_twins(twins_o);
    if (address->parsed()) return cmd_address(address_o);
    if (cousins->parsed()) return cmd_cousins(cousins_o);
    if (coeffs->parsed()) return cmd_coeffs(coeffs_o);
    if (verify->parsed()) return cmd_verify(verify_o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
