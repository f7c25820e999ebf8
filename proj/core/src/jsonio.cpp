#include "codegree/jsonio.hpp"

#include <nlohmann/json.hpp>

#include "codegree/errors.hpp"

namespace codegree {

namespace {

using ordered = nlohmann::json;  // std::map-backed: keys serialize sorted

ordered cyclo_to_json(const CycloNum& v) {
  ordered j;
  j["conductor"] = v.conductor();
  ordered arr = ordered::array();
  for (const mpq_class& c : v.coeffs()) arr.push_back(c.get_str());
  j["coeffs"] = std::move(arr);
  return j;
}

CycloNum cyclo_from_json(const ordered& j) {
  uint32_t e = j.at("conductor").get<uint32_t>();
  std::vector<mpq_class> coeffs;
  for (const auto& s : j.at("coeffs")) {
    mpq_class q;
    if (q.set_str(s.get<std::string>(), 10) != 0)
      throw Error("bad rational in table JSON: " + s.get<std::string>());
    q.canonicalize();
    coeffs.push_back(std::move(q));
  }
  return CycloNum::from_coeffs(e, std::move(coeffs));
}

}  // namespace

std::string table_to_json(const CharacterTable& T) {
  ordered j;
  j["spec"] = T.spec;
  j["order"] = T.order.get_str();
  j["exponent"] = T.exponent;
  ordered classes = ordered::array();
  for (const ClassMeta& m : T.class_meta) {
    ordered c;
    c["rep_cycles"] = m.rep_cycles;
    c["size"] = m.size;
    c["element_order"] = m.element_order;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  ordered rows = ordered::array();
  for (const auto& row : T.rows) {
    ordered r = ordered::array();
    for (const CycloNum& v : row) r.push_back(cyclo_to_json(v));
    rows.push_back(std::move(r));
  }
  j["irreducibles"] = std::move(rows);
  j["degrees"] = T.degrees;
  ordered cods = ordered::array();
  for (const CodegreeRecord& rec : codegrees(T)) cods.push_back(rec.codegree.get_str());
  j["codegrees"] = std::move(cods);
  return j.dump(2);
}

CharacterTable table_from_json(const std::string& text) {
  ordered j = ordered::parse(text);
  CharacterTable T;
  T.spec = j.at("spec").get<std::string>();
  T.order = mpz_class(j.at("order").get<std::string>());
  T.exponent = j.at("exponent").get<uint64_t>();
  for (const auto& c : j.at("classes")) {
    ClassMeta m;
    m.rep_cycles = c.at("rep_cycles").get<std::string>();
    m.size = c.at("size").get<uint64_t>();
    m.element_order = c.at("element_order").get<uint64_t>();
    T.class_meta.push_back(std::move(m));
  }
  for (const auto& row : j.at("irreducibles")) {
    std::vector<CycloNum> r;
    for (const auto& v : row) r.push_back(cyclo_from_json(v));
    T.rows.push_back(std::move(r));
  }
  T.degrees = j.at("degrees").get<std::vector<uint64_t>>();
  return T;
}

std::string qian_report_to_json(const QianReport& rep) {
  ordered j;
  j["spec"] = rep.spec;
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["element_orders"] = rep.element_orders;
  ordered ws = ordered::array();
  for (const QianWitness& w : rep.witnesses) {
    ordered e;
    e["order"] = w.order;
    e["degree"] = w.degree;
    e["codegree"] = w.codegree.get_str();
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  j["failures"] = rep.failures;
  j["flags"] = rep.flags;
  return j.dump(2);
}

std::string theorem_a_report_to_json(const TheoremAReport& rep) {
  ordered j;
  j["spec"] = rep.spec;
  j["fitting_order"] = rep.fitting_order.get_str();
  j["fitting_trivial"] = rep.fitting_trivial;
  j["solvable"] = rep.solvable;
  ordered socle;
  ordered mins = ordered::array();
  for (size_t i = 0; i < rep.socle.minimal_normal_orders.size(); ++i) {
    ordered m;
    m["order"] = rep.socle.minimal_normal_orders[i].get_str();
    m["solvable"] = static_cast<bool>(rep.socle.minimal_normal_solvable[i]);
    mins.push_back(std::move(m));
  }
  socle["minimal_normal_subgroups"] = std::move(mins);
  socle["order"] = rep.socle.socle_order.get_str();
  socle["solvable"] = rep.socle.socle_solvable;
  j["socle"] = std::move(socle);
  j["qian"] = ordered::parse(qian_report_to_json(rep.qian));
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["flags"] = rep.flags;
  return j.dump(2);
}

std::string corpus_summary_to_json(const CorpusSummary& s) {
  ordered j;
  ordered reports = ordered::array();
  for (const TheoremAReport& rep : s.reports)
    reports.push_back(ordered::parse(theorem_a_report_to_json(rep)));
  j["groups"] = std::move(reports);
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["outside_hypothesis"] = s.outside_hypothesis;
  return j.dump(2);
}

std::string monolithic_to_json(const MonolithicScenario& sc) {
  ordered j;
  j["spec"] = sc.spec;
  j["element"] = sc.element_cycles;
  j["n_factors"] = sc.n_factors;
  j["orbit_sizes"] = sc.orbit_sizes;
  j["coset_order_r"] = sc.coset_order_r;
  j["order_of_g_to_r"] = sc.o_g_r;
  j["psl2_3f_factors"] = sc.psl2_3f_factors;
  j["h_used"] = sc.h_used;
  j["lambda_row"] = sc.lambda_row;
  j["lambda_degree"] = sc.lambda_degree;
  j["inertia_order"] = sc.inertia_order.get_str();
  j["extension_row"] = sc.extension_row;
  j["m_over_lambda"] = sc.m_over_lambda.get_str();
  j["required_divisor"] = sc.required_divisor.get_str();
  j["verdict"] = sc.pass ? "pass" : "fail";
  j["flags"] = sc.flags;
  return j.dump(2);
}

std::string lemma_pair_to_json(const LemmaPairResult& r) {
  ordered j;
  j["spec"] = r.spec;
  j["exponent"] = r.exponent;
  j["invariance_filter"] = r.invariance_filter;
  j["verified_level"] = r.verified_level;
  j["verdict"] = r.pass ? "pass" : "fail";
  if (r.pass) {
    ordered p;
    p["alpha_index"] = r.alpha_index;
    p["beta_index"] = r.beta_index;
    p["alpha_degree"] = r.alpha_degree;
    p["beta_degree"] = r.beta_degree;
    p["product"] = r.product.get_str();
    j["pair"] = std::move(p);
  }
  j["candidate_rows"] = r.candidate_rows;
  j["flags"] = r.flags;
  return j.dump(2);
}

std::string exception_report_to_json(const ExceptionReport& r) {
  ordered j;
  j["spec"] = r.spec;
  j["q"] = r.q;
  j["unique_invariant_is_steinberg"] = r.unique_invariant_is_steinberg;
  j["invariant_nonprincipal_rows"] = r.invariant_nonprincipal_rows;
  j["half_degree_rows"] = r.half_degree_rows;
  j["field_fixes_half_degree_pair"] = r.field_fixes_half_degree_pair;
  j["diagonal_swaps_half_degree_pair"] = r.diagonal_swaps_half_degree_pair;
  j["verdict"] = r.pass ? "pass" : "fail";
  return j.dump(2);
}

std::string lie_check_to_json(const LieCheckResult& r) {
  ordered j;
  j["row"] = r.row_id;
  j["q"] = r.q;
  j["characteristic"] = r.characteristic;
  j["order"] = r.order.get_str();
  j["alpha_degree"] = r.alpha.get_str();
  j["beta_degree"] = r.beta.get_str();
  j["p_part"] = r.p_part.get_str();
  j["beta_is_p_part"] = r.beta_is_p_part;
  j["product"] = r.product.get_str();
  j["required"] = r.required.get_str();
  j["arithmetic_pass"] = r.arithmetic_pass;
  if (r.true_exponent_divides) j["true_exponent_divides"] = *r.true_exponent_divides;
  if (r.sylow_exponent_within_bound)
    j["sylow_exponent_within_bound"] = *r.sylow_exponent_within_bound;
  if (r.alpha_among_degrees) j["alpha_among_degrees"] = *r.alpha_among_degrees;
  if (r.order_matches_group) j["order_matches_group"] = *r.order_matches_group;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["notes"] = r.notes;
  return j.dump(2);
}

}  // namespace codegree
