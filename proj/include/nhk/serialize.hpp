#pragma once

#include <json.hpp>

#include "nhk/nilhecke.hpp"

namespace nhk {

using Json = nlohmann::json;

// Schemas (also documented in the README):
//   weight / coroot:   [ints]
//   group element:     {"t": [ints], "w": [[ints]]}
//   polynomial:        [[[exponents], "coeff"], ...]   (exponents = x_1..x_r, h)
//   fraction:          {"num": <polynomial>, "den": [[[coroot], k], ...]}
//   skew element:      {"terms": [{"group": <group>, "coeff": <fraction>}]}
//   normal form:       {"terms": [{"index": <group>, "coeff": <polynomial>}]}
//   root datum:        {"type", "rank", "cartan", "positive_roots",
//                       "highest_root", "fundamental_group_order", "convention"}

Json to_json(const RootDatum& d);
Json to_json(const ExtAffine& w);
Json to_json(const SparsePoly& p);
Json to_json(const EvalContext& ctx, const RootFraction& f);
Json to_json(const SkewElement& e);
Json to_json(const NilHeckeElement& u);
Json to_json(const EvalContext& ctx, const MembershipWitness& w);

ExtAffine ext_affine_from_json(const RootDatum& d, const Json& j);
SparsePoly poly_from_json(int nvars, const Json& j);
RootFraction fraction_from_json(const EvalContext& ctx, const Json& j);
SkewElement skew_from_json(const EvalContext& ctx, const Json& j);
NilHeckeElement nilhecke_from_json(const EvalContext& ctx, const Json& j);

}  // namespace nhk
