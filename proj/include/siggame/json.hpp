#pragma once

// ADL adapters between solver records and nlohmann::json. Doubles rely on the
// library's shortest-round-trip rendering, so serialized results re-parse
// losslessly.

#include <json.hpp>

#include "siggame/nash.hpp"
#include "siggame/nonlinear.hpp"
#include "siggame/stackelberg.hpp"
#include "siggame/types.hpp"

namespace siggame {

inline void to_json(nlohmann::json& j, const AffineEncoder& enc) {
  j = nlohmann::json{{"a", enc.a}, {"c", enc.c}};
}

inline void from_json(const nlohmann::json& j, AffineEncoder& enc) {
  j.at("a").get_to(enc.a);
  j.at("c").get_to(enc.c);
}

inline void to_json(nlohmann::json& j, const AffineDecoder& dec) {
  j = nlohmann::json{{"k", dec.k}, {"l", dec.l}};
}

inline void from_json(const nlohmann::json& j, AffineDecoder& dec) {
  j.at("k").get_to(dec.k);
  j.at("l").get_to(dec.l);
}

NLOHMANN_JSON_SERIALIZE_ENUM(EquilibriumKind,
                             {{EquilibriumKind::Informative, "Informative"},
                              {EquilibriumKind::NonInformative, "NonInformative"},
                              {EquilibriumKind::BoundaryInformative,
                               "BoundaryInformative"}})

inline void to_json(nlohmann::json& j, const EquilibriumResult& result) {
  j = nlohmann::json{{"kind", result.kind},
                     {"encoder", result.encoder},
                     {"decoder", result.decoder},
                     {"cost_e", result.cost_e},
                     {"cost_d", result.cost_d}};
}

inline void from_json(const nlohmann::json& j, EquilibriumResult& result) {
  j.at("kind").get_to(result.kind);
  j.at("encoder").get_to(result.encoder);
  j.at("decoder").get_to(result.decoder);
  j.at("cost_e").get_to(result.cost_e);
  j.at("cost_d").get_to(result.cost_d);
}

}  // namespace siggame

namespace siggame::stackelberg {

inline void to_json(nlohmann::json& j, const SoftStackelbergDiagnostics& d) {
  j = nlohmann::json{{"cond_decreasing", d.cond_decreasing},
                     {"cond_concave", d.cond_concave},
                     {"cond_discriminant", d.cond_discriminant},
                     {"discriminant", d.discriminant},
                     {"objective_at_zero", d.objective_at_zero}};
}

inline void from_json(const nlohmann::json& j, SoftStackelbergDiagnostics& d) {
  j.at("cond_decreasing").get_to(d.cond_decreasing);
  j.at("cond_concave").get_to(d.cond_concave);
  j.at("cond_discriminant").get_to(d.cond_discriminant);
  j.at("discriminant").get_to(d.discriminant);
  j.at("objective_at_zero").get_to(d.objective_at_zero);
}

}  // namespace siggame::stackelberg

namespace siggame::nash {

inline void to_json(nlohmann::json& j, const NashHardSolution& s) {
  j = nlohmann::json{{"equilibrium", s.equilibrium},
                     {"kkt_multiplier", s.kkt_multiplier}};
}

inline void from_json(const nlohmann::json& j, NashHardSolution& s) {
  j.at("equilibrium").get_to(s.equilibrium);
  j.at("kkt_multiplier").get_to(s.kkt_multiplier);
}

}  // namespace siggame::nash

namespace siggame::nonlinear {

inline void to_json(nlohmann::json& j, const ComparisonResult& r) {
  j = nlohmann::json{{"affine_cost", r.affine_cost},
                     {"quantizer_cost", r.quantizer_cost},
                     {"quantizer_wins", r.quantizer_wins}};
}

inline void from_json(const nlohmann::json& j, ComparisonResult& r) {
  j.at("affine_cost").get_to(r.affine_cost);
  j.at("quantizer_cost").get_to(r.quantizer_cost);
  j.at("quantizer_wins").get_to(r.quantizer_wins);
}

}  // namespace siggame::nonlinear
