#include "chanmaj/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chanmaj {

namespace {

vec parse_number_array(const json& j, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + ": expected an array of numbers");
    vec out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw std::invalid_argument(what + ": non-numeric entry");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

prob_vector parse_prob_vector(const json& j, const tolerance& tol) {
    if (!j.contains("p")) throw std::invalid_argument("vector file: missing key \"p\"");
    return prob_vector(parse_number_array(j.at("p"), "\"p\""), tol);
}

dichotomy_pair parse_pair(const json& j, const tolerance& tol) {
    if (!j.contains("p") || !j.contains("q"))
        throw std::invalid_argument("pair file: needs keys \"p\" and \"q\"");
    return dichotomy_pair(prob_vector(parse_number_array(j.at("p"), "\"p\""), tol),
                          prob_vector(parse_number_array(j.at("q"), "\"q\""), tol));
}

joint_dist parse_joint(const json& j, const tolerance& tol) {
    if (!j.contains("n") || !j.contains("m") || !j.contains("w"))
        throw std::invalid_argument("joint file: needs keys \"n\", \"m\", \"w\"");
    const auto n = j.at("n").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    const json& w = j.at("w");
    vec flat;
    if (w.is_array() && !w.empty() && w.front().is_array()) {
        for (const auto& row : w) {
            const vec r = parse_number_array(row, "\"w\" row");
            flat.insert(flat.end(), r.begin(), r.end());
        }
    } else {
        flat = parse_number_array(w, "\"w\"");
    }
    return joint_dist(n, m, flat, tol);
}

channel parse_channel(const json& j, const tolerance& tol) {
    if (!j.contains("cols")) throw std::invalid_argument("channel file: missing key \"cols\"");
    const json& cols = j.at("cols");
    if (!cols.is_array() || cols.empty())
        throw std::invalid_argument("channel file: \"cols\" must be a nonempty array");
    std::vector<prob_vector> columns;
    columns.reserve(cols.size());
    for (std::size_t x = 0; x < cols.size(); ++x) {
        try {
            columns.emplace_back(parse_number_array(cols[x], "column"), tol);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("channel column " + std::to_string(x) + ": " + e.what());
        }
    }
    std::string name;
    if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
    return channel(std::move(columns), std::move(name));
}

json to_json(const prob_vector& p) { return json{{"p", p.entries()}}; }

json to_json(const dichotomy_pair& pair) {
    return json{{"p", pair.p.entries()}, {"q", pair.q.entries()}};
}

json to_json(const joint_dist& jd) {
    json rows = json::array();
    const vec flat = jd.weights_row_major();
    for (std::size_t x = 0; x < jd.x_dim(); ++x) {
        json row = json::array();
        for (std::size_t y = 0; y < jd.y_dim(); ++y) row.push_back(flat[x * jd.y_dim() + y]);
        rows.push_back(std::move(row));
    }
    return json{{"n", jd.x_dim()}, {"m", jd.y_dim()}, {"w", std::move(rows)}};
}

json to_json(const channel& c) {
    json cols = json::array();
    for (const auto& col : c.columns()) cols.push_back(col.entries());
    json out{{"cols", std::move(cols)}};
    if (!c.name().empty()) out["name"] = c.name();
    return out;
}

json to_json(const lorenz_curve& curve) {
    json verts = json::array();
    for (const auto& v : curve.vertices) verts.push_back(json::array({v.a, v.b}));
    return verts;
}

json to_json(const mat& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string lorenz_svg(const lorenz_curve& curve) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\">\n";
    svg << "  <line x1=\"50\" y1=\"550\" x2=\"570\" y2=\"550\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"50\" y1=\"550\" x2=\"50\" y2=\"30\" stroke=\"black\"/>\n";
    svg << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
    bool first = true;
    for (const auto& v : curve.vertices) {
        if (!first) svg << ' ';
        first = false;
        svg << 50.0 + 500.0 * v.a << ',' << 550.0 - 500.0 * v.b;
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

} // namespace chanmaj
