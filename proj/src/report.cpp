// report.cpp

#include "permtri/report.hpp"

namespace permtri {

using nlohmann::json;

std::string scalar_json(const Scalar& s) { return s.to_string(); }

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

RunOutcome run_report(const CoxeterSystem& W, Elem c, const RunOptions& opt) {
  RunOutcome out;
  json& j = out.report;
  Sbdw T(W, c);
  Vec y = base_point(W, opt.seed);
  j["group"] = W.label();
  j["coxeter_element_word"] = format_word(T.dual().c_word());
  j["base_point"] = {{"mode", base_point_name(opt.seed)}, {"coordinates", vec_json(y)}};
  j["cell_count"] = T.cells().size();
  j["w_plus_size"] = T.w_plus().size();
  j["chain_count"] = T.dual().chains().size();

  Certificate cert = certify(T, y);
  json certs = {{"nondegenerate", cert.nondegenerate},
                {"facet_matched", cert.facet_matched},
                {"volume_equal", cert.volume_equal},
                {"volume", scalar_json(cert.volume_sum)},
                {"volume_oracle", scalar_json(cert.volume_oracle)},
                {"interior_facets", cert.interior.size()},
                {"boundary_facets", cert.boundary.size()}};
  if (!cert.failure.empty()) certs["failure"] = cert.failure;
  out.pass = cert.ok();

  json reg = {{"found_gamma", false}, {"epsilon", nullptr}};
  if (opt.regular) {
    Regularity r = certify_regular(T, cert, y, opt.lp_attempts);
    reg["found_gamma"] = r.found_gamma;
    reg["certified"] = r.certified;
    if (r.found_gamma) reg["gamma"] = vec_json(r.gamma);
    if (r.certified) {
      reg["epsilon"] = r.epsilon.get_str();
      reg["negated_gamma"] = r.negated_gamma;
    }
    reg["attempts"] = r.attempts;
    if (!r.certified) reg["failure"] = r.failure;
    out.pass = out.pass && r.certified;
  }
  certs["regular"] = reg;
  j["certificates"] = certs;

  if (opt.theorems) {
    TheoremReport tr = theorem_suite(T);
    json th = json::object();
    for (const auto& c2 : tr.checks) th[c2.name] = {{"pass", c2.pass}, {"witness", c2.witness}};
    th["class_count"] = tr.class_count;
    th["cat_plus"] = tr.cat_plus.get_str();
    NcbOrder ncb = ncb_order(T);
    th["ncb_bookkeeping"] = {{"pass", ncb.ok()},
                             {"diamonds_checked", ncb.diamonds_checked},
                             {"witness", ncb.failure}};
    j["theorems"] = th;
    out.pass = out.pass && tr.all_pass() && ncb.ok();
  }
  if (opt.conjectures) {
    NcbOrder ncb = ncb_order(T);
    ConjectureScan cs = conjecture_scan(T, cert, ncb);
    auto verdict = [](bool b) { return b ? "PASS" : "FAIL"; };
    j["conjectures"] = {{"ncb_lattice", verdict(cs.ncb_lattice)},
                        {"class_lattice", verdict(cs.class_lattice)},
                        {"class_semidistributive", verdict(cs.class_semidistributive)},
                        {"class_hasse_regular", verdict(cs.class_regular)},
                        {"adjacency_iff_shared_facet", verdict(cs.adjacency_facet)},
                        {"witnesses", cs.witnesses}};
  }
  if (opt.jv) {
    JvResult jv = jv_polynomial(T.dual());
    json rhs = json::array();
    for (const auto& q : jv.rhs) rhs.push_back(q.get_str());
    j["jv"] = {{"lhs_coeffs", jv.lhs}, {"rhs_coeffs", rhs}, {"equal", jv.equal}};
    out.pass = out.pass && jv.equal;
  }
  return out;
}

}  // namespace permtri
