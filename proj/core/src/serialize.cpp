#include "distortion/serialize.hpp"

#include <string>

#include "distortion/errors.hpp"

namespace distortion::serialize {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidDescriptor(std::string("descriptor is missing \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) throw InvalidDescriptor(std::string("\"") + key + "\" must be a number");
    return v.get<double>();
}

int integer(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw InvalidDescriptor(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string type_of(const json& j) {
    const json& t = field(j, "type");
    if (!t.is_string()) throw InvalidDescriptor("\"type\" must be a string");
    return t.get<std::string>();
}

Vec2 vec2(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidDescriptor("points are [x, y] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw InvalidDescriptor(std::string("\"") + key + "\" must be an array");
    return v;
}

std::string status_name(cayley::BfsStatus s) {
    switch (s) {
        case cayley::BfsStatus::found: return "found";
        case cayley::BfsStatus::not_found: return "not_found";
        case cayley::BfsStatus::unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

// ---- circle ----

json to_json(const circle::CircleLift& f) {
    using L = circle::CircleLift;
    return std::visit(overloaded{
                          [](const L::Rotation& r) { return json{{"type", "rotation"}, {"alpha", r.alpha}}; },
                          [](const L::PiecewiseLinear& p) {
                              json pts = json::array();
                              for (const auto& b : p.points) pts.push_back({b.x, b.value});
                              return json{{"type", "piecewise_linear"}, {"breakpoints", pts}};
                          },
                          [](const L::Composition& c) {
                              json maps = json::array();
                              for (const auto& m : c.maps) maps.push_back(to_json(m));
                              return json{{"type", "composition"}, {"maps", maps}};
                          },
                          [](const L::Power& p) {
                              return json{{"type", "power"}, {"map", to_json(*p.base)}, {"exponent", p.exponent}};
                          },
                      },
                      f.descriptor());
}

circle::CircleLift circle_lift_from_json(const json& j) {
    using L = circle::CircleLift;
    const std::string type = type_of(j);
    if (type == "rotation") return L::rotation(number(j, "alpha"));
    if (type == "piecewise_linear") {
        std::vector<circle::Breakpoint> pts;
        for (const auto& b : array_field(j, "breakpoints")) {
            const Vec2 v = vec2(b);
            pts.push_back({v.x, v.y});
        }
        return L::piecewise_linear(std::move(pts));
    }
    if (type == "composition") {
        std::vector<L> maps;
        for (const auto& m : array_field(j, "maps")) maps.push_back(circle_lift_from_json(m));
        return L::composition(std::move(maps));
    }
    if (type == "power") return L::power(circle_lift_from_json(field(j, "map")), integer(j, "exponent"));
    throw InvalidDescriptor("unknown circle lift type '" + type + "'");
}

// ---- annulus ----

json to_json(const annulus::AnnulusLift& f) {
    using L = annulus::AnnulusLift;
    return std::visit(overloaded{
                          [](const L::Twist& t) { return json{{"type", "twist"}, {"t", t.t}}; },
                          [](const L::Shift& s) { return json{{"type", "shift"}, {"s", s.s}}; },
                          [](const L::Composition& c) {
                              json maps = json::array();
                              for (const auto& m : c.maps) maps.push_back(to_json(m));
                              return json{{"type", "composition"}, {"maps", maps}};
                          },
                          [](const L::Power& p) {
                              return json{{"type", "power"}, {"map", to_json(*p.base)}, {"exponent", p.exponent}};
                          },
                      },
                      f.descriptor());
}

annulus::AnnulusLift annulus_lift_from_json(const json& j) {
    using L = annulus::AnnulusLift;
    const std::string type = type_of(j);
    if (type == "twist") return L::twist(number(j, "t"));
    if (type == "shift") return L::shift(number(j, "s"));
    if (type == "composition") {
        std::vector<L> maps;
        for (const auto& m : array_field(j, "maps")) maps.push_back(annulus_lift_from_json(m));
        return L::composition(std::move(maps));
    }
    if (type == "power") return L::power(annulus_lift_from_json(field(j, "map")), integer(j, "exponent"));
    throw InvalidDescriptor("unknown annulus lift type '" + type + "'");
}

// ---- torus ----

json to_json(const torus::ToralAffine& f) {
    const auto& m = f.linear_part();
    json j{{"type", "toral_affine"}, {"matrix", {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}}};
    if (const auto* v = std::get_if<Vec2>(&f.translation_part())) {
        j["translation"] = {v->x, v->y};
    } else {
        j["translation"] = {{"mess_coefficient", std::get<QuadScalar>(f.translation_part()).to_full_string()}};
    }
    return j;
}

torus::ToralAffine toral_affine_from_json(const json& j) {
    if (type_of(j) != "toral_affine") throw InvalidDescriptor("expected a toral_affine descriptor");
    const json& m = array_field(j, "matrix");
    if (m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2) {
        throw InvalidDescriptor("\"matrix\" must be 2x2");
    }
    torus::IntMatrix2 lin;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            if (!m[r][c].is_number_integer()) throw InvalidDescriptor("toral matrices have integer entries");
            lin.entries[static_cast<std::size_t>(r * 2 + c)] = m[r][c].get<long>();
        }
    }
    if (!j.contains("translation")) return torus::ToralAffine::linear(lin);
    const json& t = j.at("translation");
    if (t.is_object()) {
        const json& c = field(t, "mess_coefficient");
        if (!c.is_string()) throw InvalidDescriptor("\"mess_coefficient\" must be a string like 3/2+1/2*sqrt(5)");
        try {
            return torus::ToralAffine(lin, QuadScalar::parse(c.get<std::string>(), 5));
        } catch (const std::invalid_argument& e) {
            throw InvalidDescriptor(e.what());
        }
    }
    return torus::ToralAffine(lin, vec2(t));
}

// ---- curves ----

json to_json(const Polyline& p) {
    json pts = json::array();
    for (const auto& v : p.points()) pts.push_back({v.x, v.y});
    return json{{"points", pts}, {"closed", p.closed()}};
}

Polyline polyline_from_json(const json& j) {
    std::vector<Vec2> pts;
    for (const auto& v : array_field(j, "points")) pts.push_back(vec2(v));
    const bool closed = j.contains("closed") && j.at("closed").is_boolean() && j.at("closed").get<bool>();
    try {
        return Polyline(std::move(pts), closed);
    } catch (const std::invalid_argument& e) {
        throw InvalidDescriptor(e.what());
    }
}

json to_json(const annulus::AnnulusArc& a) { return json{{"points", to_json(a.polyline()).at("points")}}; }

annulus::AnnulusArc arc_from_json(const json& j) {
    std::vector<Vec2> pts;
    for (const auto& v : array_field(j, "points")) pts.push_back(vec2(v));
    try {
        return annulus::AnnulusArc(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw InvalidDescriptor(e.what());
    }
}

// ---- observables ----

json to_json(const ergodic::Observable& phi) {
    using O = ergodic::Observable;
    return std::visit(overloaded{
                          [](const O::Constant& c) { return json{{"type", "constant"}, {"c", c.c}}; },
                          [](const O::TrigPoly& t) {
                              return json{{"type", "trig_poly"}, {"c0", t.c0}, {"cos", t.cos_coeffs}, {"sin", t.sin_coeffs}};
                          },
                          [](const O::CenteredIndicator& i) {
                              return json{{"type", "centered_indicator"}, {"lo", i.lo}, {"hi", i.hi}};
                          },
                          [](const O::Displacement&) { return json{{"type", "displacement"}}; },
                          [](const O::Combination& c) {
                              json terms = json::array();
                              for (const auto& t : c.terms) terms.push_back({{"weight", t.weight}, {"observable", to_json(t.observable)}});
                              return json{{"type", "combination"}, {"terms", terms}};
                          },
                      },
                      phi.descriptor());
}

ergodic::Observable observable_from_json(const json& j) {
    using O = ergodic::Observable;
    const std::string type = type_of(j);
    if (type == "constant") return O::constant(number(j, "c"));
    if (type == "trig_poly") {
        auto coeffs = [&](const char* key) {
            std::vector<double> out;
            if (!j.contains(key)) return out;
            for (const auto& v : array_field(j, key)) {
                if (!v.is_number()) throw InvalidDescriptor("trig coefficients must be numbers");
                out.push_back(v.get<double>());
            }
            return out;
        };
        return O::trig_poly(j.contains("c0") ? number(j, "c0") : 0.0, coeffs("cos"), coeffs("sin"));
    }
    if (type == "centered_indicator") return O::centered_indicator(number(j, "lo"), number(j, "hi"));
    if (type == "displacement") return O::displacement();
    if (type == "combination") {
        std::vector<O::Term> terms;
        for (const auto& t : array_field(j, "terms")) terms.push_back({number(t, "weight"), observable_from_json(field(t, "observable"))});
        return O::combination(std::move(terms));
    }
    throw InvalidDescriptor("unknown observable type '" + type + "'");
}

// ---- near-identity maps ----

json to_json(const stability::NearIdentityMap& g) {
    using M = stability::NearIdentityMap;
    return std::visit(overloaded{
                          [&](const M::Polynomial& p) {
                              json comps = json::array();
                              for (const auto& comp : p.components) {
                                  json terms = json::array();
                                  for (const auto& m : comp) terms.push_back({{"c", m.coefficient}, {"exp", m.exponents}});
                                  comps.push_back(terms);
                              }
                              return json{{"type", "polynomial"}, {"dimension", g.dimension()}, {"components", comps}};
                          },
                          [](const M::Composition& c) {
                              json maps = json::array();
                              for (const auto& m : c.maps) maps.push_back(to_json(m));
                              return json{{"type", "composition"}, {"maps", maps}};
                          },
                          [](const M::Power& p) {
                              return json{{"type", "power"}, {"map", to_json(*p.base)}, {"exponent", p.exponent}};
                          },
                      },
                      g.descriptor());
}

stability::NearIdentityMap near_identity_from_json(const json& j) {
    using M = stability::NearIdentityMap;
    const std::string type = type_of(j);
    if (type == "polynomial") {
        std::vector<std::vector<stability::Monomial>> comps;
        for (const auto& comp : array_field(j, "components")) {
            if (!comp.is_array()) throw InvalidDescriptor("each component is a list of monomials");
            std::vector<stability::Monomial> terms;
            for (const auto& t : comp) {
                const json& e = array_field(t, "exp");
                if (e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
                    throw InvalidDescriptor("\"exp\" must be two integers");
                }
                terms.push_back({number(t, "c"), {e[0].get<int>(), e[1].get<int>()}});
            }
            comps.push_back(std::move(terms));
        }
        return M::polynomial(integer(j, "dimension"), std::move(comps));
    }
    if (type == "composition") {
        std::vector<M> maps;
        for (const auto& m : array_field(j, "maps")) maps.push_back(near_identity_from_json(m));
        return M::composition(std::move(maps));
    }
    if (type == "power") return M::power(near_identity_from_json(field(j, "map")), integer(j, "exponent"));
    throw InvalidDescriptor("unknown near-identity map type '" + type + "'");
}

// ---- Cayley data ----

json to_json(const cayley::Ball& ball, bool include_elements) {
    json j{{"complete_radius", ball.complete_radius()}, {"size", ball.size()}, {"sphere_sizes", ball.sphere_sizes()}};
    if (include_elements) {
        json elems = json::array();
        for (std::size_t i = 0; i < ball.size(); ++i) {
            elems.push_back({{"id", ball.element(i).canonical_id()}, {"length", ball.length_at(i)}});
        }
        j["elements"] = std::move(elems);
    }
    return j;
}

json to_json(const cayley::DistortionProfile& profile) {
    json rows = json::array();
    for (const auto& r : profile.rows) {
        json row{{"n", r.n.get_str()}, {"element", r.element_id}, {"bfs_status", status_name(r.bfs_status)}};
        row["bfs_length"] = r.bfs_length ? json(*r.bfs_length) : json(nullptr);
        row["certificate_length"] = r.certificate_length ? json(*r.certificate_length) : json(nullptr);
        row["certificate_n"] = r.certificate_n ? json(*r.certificate_n) : json(nullptr);
        row["ratio"] = r.ratio ? json(r.ratio->get_str()) : json(nullptr);
        rows.push_back(std::move(row));
    }
    return json{{"max_radius", profile.max_radius},
                {"complete_radius", profile.complete_radius},
                {"ball_size", profile.ball_size},
                {"rows", rows}};
}

json to_json(const cayley::Certificate& c, const cayley::GeneratingSet& gens) {
    return json{{"family", std::string(cayley::family_name(c.family))},
                {"n", c.n},
                {"word", gens.word_to_string(c.word)},
                {"letters", c.word.letters()},
                {"power", c.power.get_str()},
                {"claimed", c.claimed.canonical_id()},
                {"length", c.length}};
}

}  // namespace distortion::serialize
