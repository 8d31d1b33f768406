#pragma once

#include <nlohmann/json.hpp>

#include "distortion/cayley.hpp"
#include "distortion/certificates.hpp"
#include "distortion/circle_dyn.hpp"
#include "distortion/ergodic.hpp"
#include "distortion/geometry.hpp"
#include "distortion/spread_annulus.hpp"
#include "distortion/stability_lab.hpp"
#include "distortion/torus_dyn.hpp"

// JSON shapes of every closed-world descriptor. Each *_from_json throws
// InvalidDescriptor on a malformed document; to_json(from_json(j)) is a fixed point.
namespace distortion::serialize {

using nlohmann::json;

json to_json(const circle::CircleLift& f);
circle::CircleLift circle_lift_from_json(const json& j);

json to_json(const annulus::AnnulusLift& f);
annulus::AnnulusLift annulus_lift_from_json(const json& j);

json to_json(const torus::ToralAffine& f);
torus::ToralAffine toral_affine_from_json(const json& j);

json to_json(const Polyline& p);
Polyline polyline_from_json(const json& j);
json to_json(const annulus::AnnulusArc& a);
annulus::AnnulusArc arc_from_json(const json& j);

json to_json(const ergodic::Observable& phi);
ergodic::Observable observable_from_json(const json& j);

json to_json(const stability::NearIdentityMap& g);
stability::NearIdentityMap near_identity_from_json(const json& j);

/// {"complete_radius", "size", "sphere_sizes", "elements": [{"id", "length"}]}; elements
/// are listed in breadth-first order only when include_elements is set.
json to_json(const cayley::Ball& ball, bool include_elements = false);
json to_json(const cayley::DistortionProfile& profile);
json to_json(const cayley::Certificate& c, const cayley::GeneratingSet& gens);

}  // namespace distortion::serialize
