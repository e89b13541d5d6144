#pragma once

/// Batch verification driver: parse a JSON request selecting a family and a
/// set of suites, run them, and assemble a deterministic JSON report.
/// Reports are byte-identical across runs for the same request and seed;
/// anything nondeterministic (wall-clock timing) goes to stderr, never into
/// the report.

#include <set>

#include "json.hpp"
#include "qwreath/ak.hpp"
#include "qwreath/hu.hpp"
#include "qwreath/kms.hpp"

namespace qwreath {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace cli {

using nlohmann::json;

inline const std::set<std::string>& known_suites() {
  static const std::set<std::string> s{"pbw",    "ground", "tau-independence", "diagrams",
                                       "wreath", "specht", "dual",             "hu-central",
                                       "ak-simples", "kms", "order"};
  return s;
}

struct Request {
  std::string family;  // "hu", "ariki-koike", "kms"
  int m = 2;           // hu / ariki-koike base size
  int n = 2;           // kms residue classes
  int d = 2;
  int window = 4;
  bool exhaustive = false;
  int seed = 0;
  std::vector<std::string> suites;  // sorted, validated
};

inline Request parse_request(const json& j) {
  Request r;
  if (!j.is_object()) throw ParseError("request must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    if (key == "family") {
      if (!val.is_string()) throw ParseError("family must be a string");
      r.family = val.get<std::string>();
    } else if (key == "m" || key == "n" || key == "d" || key == "window" || key == "seed") {
      if (!val.is_number_integer()) throw ParseError(key + " must be an integer");
      int x = val.get<int>();
      if (key == "m") r.m = x;
      if (key == "n") r.n = x;
      if (key == "d") r.d = x;
      if (key == "window") r.window = x;
      if (key == "seed") r.seed = x;
    } else if (key == "exhaustive") {
      if (!val.is_boolean()) throw ParseError("exhaustive must be a boolean");
      r.exhaustive = val.get<bool>();
    } else if (key == "suites") {
      if (!val.is_array()) throw ParseError("suites must be an array of strings");
      for (const auto& s : val) {
        if (!s.is_string()) throw ParseError("suites must be an array of strings");
        r.suites.push_back(s.get<std::string>());
      }
    } else {
      throw ParseError("unknown request field: " + key);
    }
  }
  if (r.family != "hu" && r.family != "ariki-koike" && r.family != "kms")
    throw ParseError("family must be one of \"hu\", \"ariki-koike\", \"kms\"");
  if (r.suites.empty()) throw ParseError("at least one suite must be requested");
  for (const auto& s : r.suites)
    if (!known_suites().count(s)) throw ParseError("unknown suite: " + s);
  std::sort(r.suites.begin(), r.suites.end());
  r.suites.erase(std::unique(r.suites.begin(), r.suites.end()), r.suites.end());
  if (r.m < 1 || r.n < 1 || r.d < 1 || r.window < 0) throw ParseError("sizes must be positive");
  return r;
}

namespace detail {

inline json report_json(const ConditionReport& rep) {
  json conditions = json::array();
  for (const auto& c : rep.results) {
    json e{{"label", c.label}, {"pass", c.pass}};
    if (!c.pass) e["witness"] = c.witness;
    conditions.push_back(std::move(e));
  }
  return json{{"pass", rep.all_pass()}, {"conditions", std::move(conditions)}};
}

inline json sparsevec_json(const FiniteAlgebra& B, int e, const SparseVec& x) {
  json out = json::array();
  for (const auto& [i, c] : x) out.push_back(json{{"basis", pw_label(B, e, i)}, {"coeff", c.str()}});
  return out;
}

/// Module list bookkeeping shared by the specht and ak-simples suites.
template <typename Builder>
json module_set_json(const IBPoset& poset, int d, int algebra_dim, Builder&& build) {
  json out;
  json mods = json::array();
  std::vector<ModuleRep> reps;
  int sumsq = 0;
  for (const Multipartition& lam : enumerate_omega(poset, d)) {
    reps.push_back(build(lam));
    sumsq += reps.back().dim() * reps.back().dim();
    mods.push_back(json{{"lambda", lam.str(poset)}, {"dim", reps.back().dim()}});
  }
  bool hom_identity = true;
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      if (hom_space(reps[i], reps[j]).size() != (i == j ? 1u : 0u)) hom_identity = false;
  out["modules"] = std::move(mods);
  out["sum_dim_sq"] = sumsq;
  out["algebra_dim"] = algebra_dim;
  out["hom_identity"] = hom_identity;
  out["pass"] = hom_identity && sumsq == algebra_dim;
  return out;
}

inline json order_json(const IBPoset& poset, int d) {
  json out;
  auto omega = enumerate_omega(poset, d);
  // Sort by the number of elements below: for a total order this lists the chain.
  std::vector<std::pair<int, size_t>> rank;
  for (size_t i = 0; i < omega.size(); ++i) {
    int below = 0;
    for (size_t j = 0; j < omega.size(); ++j)
      if (j != i && dominance_leq(omega[j], omega[i], poset)) ++below;
    rank.push_back({below, i});
  }
  std::sort(rank.begin(), rank.end());
  json chain = json::array();
  for (const auto& [below, i] : rank) chain.push_back(omega[i].str(poset));
  bool total = true;
  json relations = json::array();
  for (size_t i = 0; i < omega.size(); ++i)
    for (size_t j = 0; j < omega.size(); ++j) {
      if (i == j) continue;
      bool leq = dominance_leq(omega[i], omega[j], poset);
      relations.push_back(json{{"a", omega[i].str(poset)}, {"b", omega[j].str(poset)}, {"leq", leq}});
      if (!leq && !dominance_leq(omega[j], omega[i], poset)) total = false;
    }
  out["size"] = omega.size();
  out["total_order"] = total;
  out["chain"] = std::move(chain);  // a linear extension; the chain itself when total
  out["relations"] = std::move(relations);
  out["pass"] = true;
  return out;
}

inline json functor_json(const WreathFunctorReport& fr) {
  return json{{"end_is_k", fr.end_is_k},
              {"identity", fr.identity_ok},
              {"composition", fr.composition_ok},
              {"fully_faithful", fr.fully_faithful},
              {"pass", fr.all()}};
}

inline json kms_json(const KMSTensorReport& rep) {
  json mult = json::object();
  for (const auto& [lam, c] : rep.summand_mult) mult[lam] = c;
  json out{{"n", rep.n},
           {"d", rep.d},
           {"window", rep.window},
           {"pure_tensors_agree", rep.pure_agree},
           {"relations_hold", rep.relations_ok},
           {"summands_closed", rep.summands_closed},
           {"interior_clean", rep.interior_clean},
           {"boundary_terms", rep.boundary.size()},
           {"partition_ok", rep.partition_ok},
           {"summand_multiplicities", std::move(mult)},
           {"pass", rep.ok()}};
  if (!rep.pure_agree) out["pure_witness"] = rep.pure_witness;
  if (!rep.relations_ok) out["relations_witness"] = rep.relations_witness;
  if (!rep.summands_closed) out["closure_witness"] = rep.closure_witness;
  return out;
}

}  // namespace detail

inline json run_suite_hu(const Request& r, const std::string& suite) {
  static std::map<int, std::shared_ptr<HuFamily>> cache;
  auto it = cache.find(r.m);
  if (it == cache.end()) it = cache.emplace(r.m, std::make_shared<HuFamily>(r.m)).first;
  HuFamily& fam = *it->second;
  auto partitions = all_partitions(r.m);

  if (suite == "pbw") return detail::report_json(verify_pbw_conditions(fam.params(std::max(r.d, 3))));
  if (suite == "hu-central") {
    json out;
    out["Zm"] = detail::sparsevec_json(*fam.B().alg, 2, fam.Zm());
    HuCentralReport cr = fam.central_report();
    out["central"] = cr.central;
    bool closed = true;
    if (r.m == 1) {
      RatFunc q = q_param();
      closed = fam.Zm() == SparseVec{{0, (q + RatFunc(1)) * (q + RatFunc(1))}};
    }
    out["closed_form_match"] = closed;
    json fs = json::array();
    for (const Partition& lam : partitions)
      fs.push_back(json{{"lambda", lam.str()},
                        {"f", fam.f(lam, lam).str()},
                        {"sqrt_f", fam.sqrt_f(lam).str()}});
    out["f_scalars"] = std::move(fs);
    out["pass"] = cr.central && closed;
    return out;
  }
  if (suite == "ground") {
    ConditionReport all;
    for (const Partition& lam : partitions) {
      ConditionReport rep = verify_ground(fam.ground(r.d, lam));
      for (auto& c : rep.results) all.add("lambda=" + lam.str() + " " + c.label, c.pass, c.witness);
    }
    return detail::report_json(all);
  }
  if (suite == "tau-independence") {
    bool eq = true;
    for (const Partition& lam : partitions) eq = eq && check_tau_independence(fam.ground(r.d, lam));
    return json{{"equal", eq}, {"pass", eq}};
  }
  if (suite == "diagrams") {
    ConditionReport all;
    for (const Partition& lam : partitions) {
      ConditionReport rep = check_diagrams(fam.ground(r.d, lam), r.exhaustive);
      for (auto& c : rep.results) all.add("lambda=" + lam.str() + " " + c.label, c.pass, c.witness);
    }
    return detail::report_json(all);
  }
  if (suite == "wreath") {
    json out = json::array();
    bool pass = true;
    for (const Partition& lam : partitions) {
      GroundModuleData gm = fam.ground(r.d, lam);
      HeckeLike tH = twisted_hecke(r.d, RatFunc(0), fam.f(lam, lam));
      std::vector<ModuleRep> Ns;
      for (const Partition& nu : all_partitions(r.d)) Ns.push_back(twisted_specht(tH, nu).module);
      WreathFunctorReport fr = wreath_functor_check(gm, fam.wreath_algebra(r.d), tH, Ns);
      json e = detail::functor_json(fr);
      e["lambda"] = lam.str();
      pass = pass && fr.all();
      out.push_back(std::move(e));
    }
    return json{{"checks", std::move(out)}, {"pass", pass}};
  }
  if (suite == "specht")
    return detail::module_set_json(fam.poset(), r.d, fam.wreath_algebra(r.d)->dim(),
                                   [&](const Multipartition& lam) { return hu_specht(fam, r.d, lam); });
  if (suite == "dual") {
    const QWP& A = *fam.ambient(r.d);
    AlgebraMap sharp = hu_sharp_map(fam, r.d);
    WreathMapResult st = build_star(A, hecke_star(fam.B()));
    if (!st.ok()) return json{{"pass", false}, {"error", "star conditions failed"}};
    AlgebraMap star = wreath_map_to_algebra_map(A, fam.wreath_algebra(r.d), *st.map);
    json checks = json::array();
    bool pass = true;
    for (const Multipartition& lam : enumerate_omega(fam.poset(), r.d)) {
      IsoResult iso = hu_dual_specht_check(fam, r.d, lam, sharp, star, r.seed);
      checks.push_back(json{{"lambda", lam.str(fam.poset())}, {"isomorphic", iso.yes()}});
      pass = pass && iso.yes();
    }
    return json{{"checks", std::move(checks)}, {"pass", pass}};
  }
  if (suite == "order") return detail::order_json(fam.poset(), r.d);
  throw ParseError("suite \"" + suite + "\" is not available for family \"hu\"");
}

inline json run_suite_ak(const Request& r, const std::string& suite) {
  static std::map<int, std::shared_ptr<AKFamily>> cache;
  auto it = cache.find(r.m);
  if (it == cache.end()) it = cache.emplace(r.m, std::make_shared<AKFamily>(ak_generic_u(r.m))).first;
  AKFamily& fam = *it->second;
  const RatFunc vv = RatFunc::v() - RatFunc::v(-1);

  if (suite == "pbw") return detail::report_json(verify_pbw_conditions(fam.params(std::max(r.d, 3))));
  if (suite == "ground") {
    ConditionReport all;
    std::vector<std::pair<RatFunc, RatFunc>> twists{
        {RatFunc(0), RatFunc::v()}, {RatFunc(0), -RatFunc::v(-1)}, {RatFunc(1), RatFunc(0)}};
    for (const auto& [s, rr] : twists) {
      ConditionReport rep = verify_ground(fam.ground(r.d, 1, s, rr));
      std::string tag = "(s,r)=(" + s.str() + "," + rr.str() + ") ";
      for (auto& c : rep.results) all.add(tag + c.label, c.pass, c.witness);
    }
    return detail::report_json(all);
  }
  if (suite == "tau-independence") {
    bool eq = check_tau_independence(fam.ground(r.d, 1, RatFunc(1), RatFunc(0)));
    return json{{"equal", eq}, {"pass", eq}};
  }
  if (suite == "diagrams")
    return detail::report_json(check_diagrams(fam.ground(r.d, 1, RatFunc(1), RatFunc(0)), r.exhaustive));
  if (suite == "wreath") {
    GroundModuleData gm = fam.ground(r.d, 1, RatFunc(1), RatFunc(0));
    HeckeLike tH = twisted_hecke(r.d, vv, RatFunc(1));
    std::vector<ModuleRep> Ns;
    for (const Partition& nu : all_partitions(r.d)) Ns.push_back(twisted_specht(tH, nu).module);
    WreathFunctorReport fr = wreath_functor_check(gm, fam.wreath_algebra(r.d), tH, Ns);
    return detail::functor_json(fr);
  }
  if (suite == "ak-simples")
    return detail::module_set_json(fam.poset(), r.d, fam.wreath_algebra(r.d)->dim(),
                                   [&](const Multipartition& lam) { return ak_simple(fam, r.d, lam); });
  if (suite == "order") return detail::order_json(fam.poset(), r.d);
  throw ParseError("suite \"" + suite + "\" is not available for family \"ariki-koike\"");
}

inline json run_suite_kms(const Request& r, const std::string& suite) {
  if (suite == "pbw") return detail::report_json(kms_verify_pbw(r.window));
  if (suite == "ground") return detail::report_json(kms_verify_ground(r.d, r.window));
  if (suite == "tau-independence") {
    bool eq = kms_check_tau_independence(r.d, std::min(r.window, 2));
    return json{{"equal", eq}, {"pass", eq}};
  }
  if (suite == "kms") return detail::kms_json(kms_tensor(r.n, r.d, r.window));
  if (suite == "order") return detail::order_json(IBPoset::total_order(r.n), r.d);
  throw ParseError("suite \"" + suite + "\" is not available for family \"kms\"");
}

/// Run every requested suite and assemble the report.  Suites appear in the
/// report sorted by name; the document is fully determined by the request.
inline json run_request(const json& request) {
  Request r = parse_request(request);
  json suites = json::array();
  bool all = true;
  for (const std::string& s : r.suites) {
    json body;
    if (r.family == "hu")
      body = run_suite_hu(r, s);
    else if (r.family == "ariki-koike")
      body = run_suite_ak(r, s);
    else
      body = run_suite_kms(r, s);
    all = all && body.at("pass").get<bool>();
    json entry{{"suite", s}};
    entry["report"] = std::move(body);
    suites.push_back(std::move(entry));
  }
  json req{{"family", r.family}, {"m", r.m}, {"n", r.n},       {"d", r.d},
           {"window", r.window}, {"seed", r.seed}, {"exhaustive", r.exhaustive}};
  return json{{"request", std::move(req)}, {"suites", std::move(suites)}, {"all_pass", all}};
}

}  // namespace cli
}  // namespace qwreath
