#include "pgw/report.hpp"

#include <algorithm>
#include <sstream>

namespace pgw {

namespace {

Json orders(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json subgroup_json(const Subgroup& H) {
  Json gens = Json::array();
  for (Elem g : H.generators()) gens.push_back(H.ambient().render(g));
  return Json{{"order", H.order()}, {"generators", gens}};
}

}  // namespace

Json to_json(const PcPresentation& pres, const ConsistencyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"test", f.test},
                            {"lhs", render_word(pres, f.lhs)},
                            {"rhs", render_word(pres, f.rhs)}});
  return Json{{"group", pres.name()},
              {"prime", pres.prime()},
              {"rank", pres.rank()},
              {"method", std::string(to_string(r.method))},
              {"consistent", r.consistent},
              {"failures", failures}};
}

Json to_json(const InvariantVector& v) {
  const auto& f = v.flags;
  return Json{{"order", v.order},
              {"class", v.nilpotency_class},
              {"coclass", v.coclass},
              {"center_order", v.center_order},
              {"gamma_orders", orders(v.gamma_orders)},
              {"z_orders", orders(v.z_orders)},
              {"frattini_order", v.frattini_order},
              {"exponent", v.exponent},
              {"min_generators", v.min_generators},
              {"predicates",
               Json{{"abelian", f.abelian},
                    {"elementary_abelian", f.elementary_abelian},
                    {"cyclic", f.cyclic},
                    {"p_abelian", f.p_abelian},
                    {"regular", f.regular},
                    {"gamma2_elementary_abelian", f.gamma2_elementary_abelian},
                    {"cyclic_subgroup_index_p3", f.cyclic_subgroup_index_p3},
                    {"max_cyclic_order", f.max_cyclic_order}}}};
}

Json to_json(const HypothesisReport& r) {
  Json j{{"prime", r.prime},
         {"order", r.order},
         {"class", r.class_n},
         {"gamma_orders", orders(r.gamma_orders)},
         {"z_orders", orders(r.z_orders)},
         {"exp_gamma_n_minus_1", r.exp_gamma_n_minus_1},
         {"gamma_n_order", r.gamma_n_order},
         {"coclass", r.coclass},
         {"center_order", r.center_order},
         {"abelian", r.abelian},
         {"p_abelian", r.p_abelian},
         {"regular", r.regular},
         {"gamma2_elementary_abelian", r.gamma2_elementary_abelian},
         {"z2_mod_z_cyclic", r.z2_mod_z_cyclic},
         {"flags",
          Json{{"penultimate_exponent_p", r.flags.penultimate_exponent_p},
               {"coclass_two", r.flags.coclass_two},
               {"elementary_abelian_derived", r.flags.elementary_abelian_derived},
               {"p_abelian_last_term_p", r.flags.p_abelian_last_term_p},
               {"cyclic_index_p3", r.flags.cyclic_index_p3}}},
         {"cyclic_index_branch", std::string(to_string(r.cyclic_index_branch))}};
  j["irregular_facts_hold"] = r.irregular_facts_hold ? Json(*r.irregular_facts_hold) : Json();
  j["delegation"] = r.delegation ? Json(*r.delegation) : Json();
  return j;
}

Json to_json(const AbstractGroup& G, const WitnessData& w) {
  return Json{{"x", G.render(w.x)},
              {"g", G.render(w.g)},
              {"c", G.render(w.c)},
              {"centralizer", subgroup_json(w.M)}};
}

Json automorphism_json(const Automorphism& f) {
  const auto& G = f.ambient();
  Json images = Json::object();
  const auto imgs = f.generator_images();
  for (std::size_t i = 0; i < imgs.size(); ++i)
    images[G.render(G.generators()[i])] = G.render(imgs[i]);
  return images;
}

Json to_json(const AbstractGroup& G, const VerificationReport& r) {
  Json j{{"order", r.order},
         {"order_is_p", r.order_is_p},
         {"non_inner", r.non_inner},
         {"fixes_frattini", r.fixes_frattini}};
  j["inner_witness"] = r.inner_witness ? Json(G.render(*r.inner_witness)) : Json();
  j["power_identity_holds"] = r.power_identity_holds ? Json(*r.power_identity_holds) : Json();
  j["all_green"] = r.all_green();
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Outcome& o) {
  Json j{{"outcome", std::string(to_string(o.kind))}};
  j["citation"] = o.citation ? Json(*o.citation) : Json();
  j["hypotheses"] = to_json(o.hypotheses);
  if (o.witness) {
    j["witness"] = to_json(o.witness->M.ambient(), *o.witness);
  } else {
    j["witness"] = Json();
  }
  j["beta"] = o.beta ? automorphism_json(*o.beta) : Json();
  j["verification"] =
      o.verification && o.beta ? to_json(o.beta->ambient(), *o.verification) : Json();
  j["oracle_confirmed"] = o.oracle_confirmed ? Json(*o.oracle_confirmed) : Json();
  j["oracle_automorphism"] = o.oracle_automorphism ? automorphism_json(*o.oracle_automorphism) : Json();
  j["notes"] = o.notes;
  return j;
}

Json to_json(const CrossValidationReport& r) {
  Json fields = Json::array();
  for (const auto& f : r.fields)
    fields.push_back(Json{{"field", f.field}, {"pc", f.pc_value}, {"perm", f.perm_value}, {"equal", f.equal}});
  return Json{{"all_equal", r.all_equal}, {"fields", fields}};
}

Json structure_snapshot(const AbstractGroup& G) {
  Json j{{"invariants", to_json(compute_invariants(G))}};
  j["center"] = subgroup_json(center(G));
  j["frattini"] = subgroup_json(frattini(G));
  Json lower = Json::array();
  for (const auto& t : lower_central_series(G).terms) lower.push_back(subgroup_json(t));
  Json upper = Json::array();
  for (const auto& t : upper_central_series(G).terms) upper.push_back(subgroup_json(t));
  j["lower_central_series"] = lower;
  j["upper_central_series"] = upper;
  return j;
}

namespace {

void render_into(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    const std::string key =
        v.is_object() ? it.key() : "[" + std::to_string(std::distance(v.begin(), it)) + "]";
    const bool scalar_array =
        x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& e) { return e.is_primitive(); });
    if (x.is_object() || (x.is_array() && !scalar_array && !x.empty())) {
      out << pad << key << ":\n";
      render_into(out, x, indent + 1);
    } else if (x.is_string() && x.get<std::string>().find('\n') != std::string::npos) {
      out << pad << key << ":\n";
      std::istringstream lines(x.get<std::string>());
      for (std::string line; std::getline(lines, line);) out << pad << "  | " << line << "\n";
    } else if (x.is_string()) {
      out << pad << key << ": " << x.get<std::string>() << "\n";
    } else if (x.is_null()) {
      out << pad << key << ": -\n";
    } else {
      out << pad << key << ": " << x.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_human(const Json& doc) {
  std::ostringstream out;
  render_into(out, doc, 0);
  return out.str();
}

}  // namespace pgw
