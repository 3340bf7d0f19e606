#include "symtc/report.hpp"

namespace symtc {

using nlohmann::json;

json terms_json(const TensorRing& ring, const TensorElement& x, std::size_t limit) {
  json out = json::array();
  for (const auto& [t, c] : x.terms()) {
    if (out.size() >= limit) break;
    out.push_back({{"tensor", ring.str(t)}, {"coeff", c.str()}});
  }
  return out;
}

json to_json(const Certificate& cert) {
  const auto& power = *cert.power;
  const auto& base = *power.base();
  json blocks = json::array();
  for (const auto& b : cert.blocks) {
    blocks.push_back({{"label", b.divisor.label},
                      {"degree", b.divisor.degree},
                      {"exponent", b.exponent},
                      {"weights", b.divisor.weights},
                      {"base_class", terms_json(base, b.divisor.base_class)}});
  }
  return {{"ring", power.name()},
          {"length", cert.length()},
          {"nonzero", cert.nonzero()},
          {"factors", blocks},
          {"product_terms", cert.product.size()},
          {"leading_coefficient", cert.leading_coefficient().str()},
          {"product", terms_json(power, cert.product, 8)}};
}

json to_json(const BoundReport& r) {
  json j{{"invariant", r.invariant},
         {"space", r.space},
         {"lower", r.lower},
         {"upper", r.upper},
         {"exact", r.exact},
         {"lower_reason", r.lower_reason},
         {"upper_reason", r.upper_reason},
         {"citations", r.citations}};
  if (r.m) j["m"] = r.m;
  if (!r.cup_witness.empty()) j["cup_witness"] = r.cup_witness;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  return j;
}

json to_json(const ZclResult& r) {
  return {{"zcl", r.length}, {"kernel_dims", r.kernel_dims}, {"ideal_generators", r.ideal_generators}};
}

json to_json(const AdditivityReport& r) {
  json cat_f = json::array(), tc_f = json::array();
  for (const auto& c : r.cat_factors) cat_f.push_back(to_json(c));
  for (const auto& c : r.tc_factors) tc_f.push_back(to_json(c));
  return {{"factors", r.factors},        {"m", r.m},
          {"cup_product", r.cup_product}, {"cup_sum", r.cup_sum},
          {"cup_additive", r.cup_additive}, {"cat_product", to_json(r.cat_product)},
          {"cat_factors", cat_f},        {"ls_logarithmic", r.ls_logarithmic},
          {"ls_note", r.ls_note},        {"tc_product", to_json(r.tc_product)},
          {"tc_factors", tc_f},          {"tc_logarithmic", r.tc_logarithmic},
          {"tc_note", r.tc_note},        {"szcl_sum", r.szcl_sum},
          {"szcl_lifted", r.szcl_lifted}, {"szcl_additive", r.szcl_additive}};
}

json to_json(const GaneaReport& r) {
  json j{{"space", r.space},         {"k", r.k},
         {"cat_ok", r.cat_ok},       {"cat_note", r.cat_note},
         {"cat_base", r.cat_base},   {"cat_product", r.cat_product}};
  if (r.m) {
    j["m"] = *r.m;
    j["tc_ok"] = r.tc_ok;
    j["tc_note"] = r.tc_note;
    j["tc_base"] = r.tc_base;
    j["tc_sphere"] = r.tc_sphere;
    j["tc_product"] = r.tc_product;
  }
  return j;
}

json to_json(const GenfunReport& r) {
  return {{"space", r.space},         {"horizon", r.horizon},
          {"cat", r.cat},             {"coefficients", r.coefficients},
          {"numerator", r.numerator}, {"numerator_at_one", r.numerator_at_one},
          {"exact", r.exact},         {"matches", r.matches},
          {"note", r.note}};
}

json to_json(const DiagonalPowerReport& r) {
  return {{"n", r.n},
          {"g", r.g},
          {"k", r.k},
          {"ring_vanishes", r.ring_vanishes},
          {"surviving_terms", r.surviving_terms},
          {"lucas_vanishes", r.lucas_vanishes},
          {"identification_predicts_vanishing", r.identification_predicts_vanishing},
          {"routes_agree", r.routes_agree()}};
}

std::string interval(const BoundReport& r) {
  if (r.exact) return std::to_string(r.lower);
  return "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]";
}

}  // namespace symtc
