#pragma once

#include <string>

#include <json.hpp>

#include "chanmaj/channel.hpp"
#include "chanmaj/conditional.hpp"
#include "chanmaj/relative.hpp"

namespace chanmaj {

using json = nlohmann::json;

// File schemas:
//   vector  {"p": [x1,...,xn]}
//   pair    {"p": [...], "q": [...]}
//   joint   {"n": n, "m": m, "w": [row-major n*m]}  (nested rows also accepted)
//   channel {"name": str?, "cols": [[...], ...]}    (columns are output laws)
prob_vector parse_prob_vector(const json& j, const tolerance& tol = {});
dichotomy_pair parse_pair(const json& j, const tolerance& tol = {});
joint_dist parse_joint(const json& j, const tolerance& tol = {});
channel parse_channel(const json& j, const tolerance& tol = {});

json to_json(const prob_vector& p);
json to_json(const dichotomy_pair& pair);
json to_json(const joint_dist& jd);
json to_json(const channel& c);
json to_json(const lorenz_curve& curve);
json to_json(const mat& m);

json load_json_file(const std::string& path);

// 600x600 viewBox, one polyline for the curve plus the two axes.
std::string lorenz_svg(const lorenz_curve& curve);

} // namespace chanmaj
