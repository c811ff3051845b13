#include "distspec/jsonio.hpp"

#include <cstdio>

namespace distspec {

std::string format_double(double x) {
  if (x == 0) x = 0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

Json rat_json(const Rat& q) { return rat_to_string(q); }

Json string_list(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

template <class T>
Json num_list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

}  // namespace

Json to_json(const EigenValue& v) {
  Json j;
  j["re"] = format_double(v.re);
  j["im"] = format_double(v.im);
  j["multiplicity"] = v.multiplicity;
  if (v.exact) j["exact"] = v.exact->str();
  return j;
}

Json to_json(const Spectrum& s) {
  Json j;
  j["exact"] = s.exact;
  j["order"] = s.order();
  Json vals = Json::array();
  for (const auto& v : s.values) vals.push_back(to_json(v));
  j["values"] = vals;
  j["display"] = s.str();
  return j;
}

Json to_json(const QPoly& p) {
  Json j;
  j["degree"] = p.degree();
  j["coeffs"] = string_list(poly_strings(p));
  j["display"] = p.str();
  return j;
}

Json to_json(const Inertia& i) {
  Json j;
  j["n_plus"] = i.n_plus;
  j["n_minus"] = i.n_minus;
  j["n_zero"] = i.n_zero;
  return j;
}

Json to_json(const StructuralReport& r) {
  Json j;
  j["edges"] = r.edges;
  j["diameter"] = r.diameter;
  j["girth"] = r.girth ? Json(*r.girth) : Json();
  j["planar"] = r.planar ? Json(*r.planar) : Json();
  j["degree_sequence"] = num_list(r.degree_sequence);
  j["transmission_sequence"] = num_list(r.transmission_sequence);
  j["transmission_regular"] = r.transmission_regular;
  j["complement_components"] = r.complement_component_count;
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["all_hold"] = r.all_hold;
  j["tightness_consistent"] = r.tightness_consistent;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["lhs"] = format_double(c.lhs);
    cj["rhs"] = format_double(c.rhs);
    cj["holds"] = c.holds;
    cj["tight"] = c.tight;
    cj["tight_expected"] = c.tight_expected;
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const CoefficientReport& r) {
  Json j;
  switch (r.mode) {
    case CoeffMode::Raw: j["mode"] = "raw"; break;
    case CoeffMode::Absolute: j["mode"] = "absolute"; break;
    case CoeffMode::TreeNormalized: j["mode"] = "tree_normalized"; break;
  }
  Json vals = Json::array();
  for (const auto& v : r.values) vals.push_back(rat_json(v));
  j["values"] = vals;
  j["log_concave"] = r.log_concave;
  j["unimodal"] = r.unimodal;
  j["peak_index"] = r.peak_index;
  j["sign_pattern"] = r.sign_pattern;
  j["abs_nonincreasing"] = r.abs_nonincreasing;
  return j;
}

Json to_json(const CospectralClass& c) {
  Json j;
  j["poly"] = to_json(c.poly);
  j["members"] = string_list(c.members);
  return j;
}

Json to_json(const CensusResult& r) {
  Json j;
  j["n"] = r.n;
  j["graphs"] = r.graph_count;
  Json counts, classes;
  for (int v = 0; v < 4; ++v) {
    const char* name = variant_name((Variant)v);
    if (r.mate_count[v] < 0) continue;
    counts[name] = r.mate_count[v];
    Json list = Json::array();
    for (const auto& c : r.classes[v]) list.push_back(to_json(c));
    classes[name] = list;
  }
  j["mates"] = counts;
  j["classes"] = classes;
  j["csv"] = r.csv_row();
  return j;
}

Json to_json(const PreservationReport& r) {
  Json j;
  j["variant"] = variant_name(r.variant);
  j["first"] = to_json(r.first);
  j["second"] = to_json(r.second);
  j["edges_equal"] = r.edges_equal;
  j["diameter_equal"] = r.diameter_equal;
  j["girth_equal"] = r.girth_equal;
  j["planarity_equal"] = r.planarity_equal;
  j["wiener_equal"] = r.wiener_equal;
  j["degree_sequence_equal"] = r.degree_sequence_equal;
  j["transmission_sequence_equal"] = r.transmission_sequence_equal;
  j["transmission_regularity_equal"] = r.transmission_regularity_equal;
  j["complement_components_equal"] = r.complement_components_equal;
  j["trace_first"] = rat_json(r.trace_first);
  j["trace_second"] = rat_json(r.trace_second);
  j["wiener_first"] = rat_json(r.wiener_first);
  j["wiener_second"] = rat_json(r.wiener_second);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["diameter"] = r.diameter;
  j["transmission_regular"] = r.transmission_regular;
  if (r.transmission_regular) j["transmission"] = r.transmission;
  j["d_inertia"] = to_json(r.d_inertia);
  j["optimistic"] = r.optimistic;
  j["one_positive_d_eigenvalue"] = r.one_positive_d_eigenvalue;
  j["distinct_d_eigenvalues"] = r.distinct_d_eigenvalues;
  j["distance_regular"] = r.distance_regular;
  j["eigenvalue_count_bound_ok"] = r.eigenvalue_count_bound_ok;
  if (r.tr_equivalences_checked) j["tr_equivalences_hold"] = r.tr_equivalences_hold;
  return j;
}

Json to_json(const AddressingResult& r) {
  Json j;
  j["length"] = r.length;
  j["witness"] = string_list(r.witness);
  return j;
}

Json to_json(const TwinPartition& p) {
  Json j = Json::array();
  for (const auto& c : p.classes) {
    Json cj;
    cj["vertices"] = num_list(c.vertices);
    cj["type"] = twin_type_name(c.type);
    cj["transmission"] = c.transmission;
    j.push_back(cj);
  }
  return j;
}

Json to_json(const QuotientAssembly& a) {
  Json j;
  j["quotient_order"] = a.quotient.B.n;
  j["quotient_matrix"] = matrix_strings(a.quotient.B);
  Json tv = Json::array();
  for (const auto& [val, mult] : a.twin_values) {
    Json e;
    e["value"] = rat_json(val);
    e["multiplicity"] = mult;
    tv.push_back(e);
  }
  j["twin_values"] = tv;
  j["char_poly"] = to_json(a.char_poly);
  j["spectrum"] = to_json(a.spectrum);
  return j;
}

Json to_json(const ProductSpectra& s) {
  Json j;
  Json h;
  h["left_transmission_regular"] = s.hypotheses.left_transmission_regular;
  h["right_transmission_regular"] = s.hypotheses.right_transmission_regular;
  h["right_regular"] = s.hypotheses.right_regular;
  h["right_degree"] = s.hypotheses.right_degree;
  h["left_doubly_directed_cover"] = s.hypotheses.left_doubly_directed_cover;
  h["diam_right_le_girth_left"] = s.hypotheses.diam_right_le_girth_left;
  j["hypotheses"] = h;
  j["formula"] = s.formula;
  j["dist"] = to_json(s.dist);
  j["transmission_regular"] = s.transmission_regular;
  if (s.transmission_regular) j["transmission"] = s.transmission;
  if (s.dq) j["DQ"] = to_json(*s.dq);
  if (s.dl) j["DL"] = to_json(*s.dl);
  if (s.dnl) j["DNL"] = to_json(*s.dnl);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace distspec
