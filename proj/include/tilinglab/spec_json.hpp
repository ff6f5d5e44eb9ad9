// JSON forms of region specs, intrusion-hexagon specs, family specs and
// polynomials. Regions parse from any of the named shapes or from an
// explicit triangle list; region_to_json always emits the explicit form.
#pragma once

#include "tilinglab/regions.hpp"

#include <json.hpp>

namespace tilinglab {

using json = nlohmann::json;

json labels_to_json(const LabelSet& s);
LabelSet labels_from_json(const json& j);

json hspec_to_json(const HSpec& s);
HSpec hspec_from_json(const json& j);

json family_to_json(const FamilySpec& fs);
FamilySpec family_from_json(const json& j);

// Accepted shapes (all label sets doubled):
//   {"family":"A","x":..,"y":..,"z":..,"w":..,"arms":[..],"collapsed":false}
//   {"type":"H"|"H'","m","n","a","b","c","L1","R1","B"}
//   {"type":"hexagon","a","b","c","k"?,"weights"?}
//   {"type":"S","x","y","Z"}     {"type":"S_bar","x","y","W","k","weights"?}
//   {"type":"R_even"|"R_odd","x","y","Z"}
//   {"type":"fern","arms","flipped"?}
//   {"type":"triangles","tris":[[col,pos],..],"barriers":[[col,pos,"h"|"u"|"d"],..],"axis":k,"weights"?}
// "weights" is "standard", "symbolic" or {"X":"p/q","Y":"p/q"}.
Region region_from_json(const json& j);
json region_to_json(const Region& r);

json poly_to_json(const QPoly& p);  // [[e_q,e_X,e_Y,"num/den"],..]
QPoly poly_from_json(const json& j);
json rat_to_json(const QRat& r);    // {"num":[..],"den":[..]}

// Inline JSON text, or @path to read a file. Throws spec_error.
json parse_spec_arg(const std::string& arg);

}  // namespace tilinglab
