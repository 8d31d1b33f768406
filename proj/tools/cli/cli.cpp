#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "distortion/errors.hpp"
#include "distortion/numeric.hpp"
#include "distortion/serialize.hpp"

namespace distortion::cli {

namespace {

using nlohmann::json;
namespace ser = distortion::serialize;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Kind { integer, real, text, boolean, descriptor };

struct Param {
    std::string name;  // snake_case config key; the flag is --name with dashes
    Kind kind;
    json fallback;     // null means "absent unless given"
    std::string help;
};

std::string flag_of(const std::string& name) {
    std::string f = "--" + name;
    for (char& c : f) {
        if (c == '_') c = '-';
    }
    return f;
}

json convert_flag(const Param& p, const std::string& text) {
    const auto bad = [&] { return ConfigError(flag_of(p.name) + ": cannot parse '" + text + "'"); };
    switch (p.kind) {
        case Kind::integer: {
            long long v = 0;
            const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || end != text.data() + text.size()) throw bad();
            return v;
        }
        case Kind::real: {
            char* end = nullptr;
            const double v = std::strtod(text.c_str(), &end);
            if (text.empty() || *end != '\0' || !std::isfinite(v)) throw bad();
            return v;
        }
        case Kind::boolean:
            if (text == "true" || text == "1") return true;
            if (text == "false" || text == "0") return false;
            throw bad();
        case Kind::descriptor:
            try {
                return json::parse(text);
            } catch (const json::parse_error&) {
                throw bad();
            }
        case Kind::text:
            return text;
    }
    throw bad();
}

void check_config_value(const Param& p, const json& v) {
    bool ok = false;
    switch (p.kind) {
        case Kind::integer: ok = v.is_number_integer(); break;
        case Kind::real: ok = v.is_number() && std::isfinite(v.get<double>()); break;
        case Kind::boolean: ok = v.is_boolean(); break;
        case Kind::text: ok = v.is_string(); break;
        case Kind::descriptor: ok = v.is_object() || v.is_array() || v.is_null(); break;
    }
    if (!ok) throw ConfigError("config key '" + p.name + "' has the wrong type");
}

/// Resolved parameters of one run. Descriptor entries are replaced by their canonical
/// serialization once parsed, so the echoed config re-parses to the same experiment.
class Params {
public:
    explicit Params(json values) : values_(std::move(values)) {}

    long long integer(const std::string& k) const { return values_.at(k).get<long long>(); }
    double real(const std::string& k) const { return values_.at(k).get<double>(); }
    bool flag(const std::string& k) const { return values_.at(k).get<bool>(); }
    std::string text(const std::string& k) const { return values_.at(k).get<std::string>(); }
    const json& raw(const std::string& k) const { return values_.at(k); }
    bool given(const std::string& k) const { return !values_.at(k).is_null(); }

    long long positive(const std::string& k) const {
        const long long v = integer(k);
        if (v < 1) throw ConfigError(k + " must be >= 1");
        return v;
    }
    double positive_real(const std::string& k) const {
        const double v = real(k);
        if (!(v > 0)) throw ConfigError(k + " must be > 0");
        return v;
    }

    void set(const std::string& k, json v) { values_[k] = std::move(v); }
    const json& all() const { return values_; }

private:
    json values_;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    Table table;
    json summary = json::object();
    int exit_code = kExitOk;
    std::string message;
};

struct Command {
    std::string name;
    std::string help;
    std::vector<Param> params;
    std::function<Outcome(Params&)> body;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string num(double x) { return format_double(x); }
template <class T>
std::string num_int(T x) {
    return std::to_string(x);
}

std::string write_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Descriptor parsing wraps InvalidDescriptor so every malformed input maps to exit 2.
template <class F>
auto descriptor(const char* what, F&& parse) {
    try {
        return parse();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

torus::ToralAffine toral_param(Params& p, const std::string& key) {
    if (!p.given(key)) {
        const auto f = torus::ToralAffine::linear(torus::cat_matrix());
        p.set(key, ser::to_json(f));
        return f;
    }
    auto f = descriptor("map", [&] { return ser::toral_affine_from_json(p.raw(key)); });
    p.set(key, ser::to_json(f));
    return f;
}

// ---- distortion ----

Outcome cmd_distortion(Params& p) {
    const auto family = descriptor("family", [&] { return cayley::parse_family(p.text("family")); });
    const int n_max = static_cast<int>(p.positive("n_max"));
    const int max_radius = static_cast<int>(p.integer("max_radius"));
    if (max_radius < 0) throw ConfigError("max_radius must be >= 0");
    const auto cap = static_cast<std::size_t>(p.positive("cap"));

    const auto group = cayley::family_group(family);
    std::vector<cayley::Certificate> certs;
    std::vector<BigInt> powers;
    int verified = 0;
    for (int n = 1; n <= n_max; ++n) {
        certs.push_back(cayley::certificate_witness(family, n));
        if (cayley::verify_certificate(certs.back())) ++verified;
        powers.push_back(certs.back().power);
    }
    const auto profile = cayley::distortion_profile(group.generators, group.distorted, powers, max_radius, family, cap);

    Outcome out;
    out.table.header = {"n", "power", "element", "certificate_len", "bfs_status", "bfs_len", "ratio"};
    const auto status = [](cayley::BfsStatus s) {
        return s == cayley::BfsStatus::found ? "found" : s == cayley::BfsStatus::not_found ? "not_found" : "unknown";
    };
    for (std::size_t i = 0; i < profile.rows.size(); ++i) {
        const auto& r = profile.rows[i];
        out.table.rows.push_back({num_int(i + 1), r.n.get_str(), r.element_id,
                                  r.certificate_length ? num_int(*r.certificate_length) : "",
                                  status(r.bfs_status), r.bfs_length ? num_int(*r.bfs_length) : "",
                                  r.ratio ? r.ratio->get_str() : ""});
    }
    json witnesses = json::array();
    for (const auto& c : certs) witnesses.push_back(ser::to_json(c, group.generators));
    out.summary = {{"distorted_element", group.distorted_label},
                   {"generators", group.generators.labels()},
                   {"certificates", witnesses},
                   {"certificates_verified", verified},
                   {"profile", ser::to_json(profile)}};
    if (verified != n_max) {
        out.exit_code = kExitCheckFailed;
        out.message = "certificate verification failed";
    } else if (profile.complete_radius < max_radius) {
        out.exit_code = kExitInvalid;
        out.message = "element cap reached: ball complete only to radius " + std::to_string(profile.complete_radius);
    }
    return out;
}

// ---- witte ----

Outcome cmd_witte(Params& p) {
    const long k = static_cast<long>(p.positive("k"));
    const long max_exp = static_cast<long>(p.positive("max_exp"));
    Outcome out;
    out.table.header = {"k", "i", "m", "n", "neighbors_commute", "commutator_matches", "sign", "exponent", "pass"};
    long failures = 0;
    for (int i = 1; i <= 6; ++i) {
        for (long m = 1; m <= max_exp; ++m) {
            for (long n = 1; n <= max_exp; ++n) {
                const auto r = cayley::witte_relation_check(k, i, m, n);
                if (!r.pass()) ++failures;
                out.table.rows.push_back({num_int(k), num_int(i), num_int(m), num_int(n),
                                          r.neighbors_commute ? "true" : "false",
                                          r.commutator_matches ? "true" : "false", num_int(r.sign),
                                          num_int(r.exponent), r.pass() ? "true" : "false"});
            }
        }
    }
    out.summary = {{"checks", out.table.rows.size()}, {"failures", failures}, {"all_pass", failures == 0}};
    if (failures) {
        out.exit_code = kExitCheckFailed;
        out.message = std::to_string(failures) + " relation checks failed";
    }
    return out;
}

// ---- rotation ----

Outcome cmd_rotation(Params& p) {
    circle::CircleLift f = p.given("map")
                               ? descriptor("map", [&] { return ser::circle_lift_from_json(p.raw("map")); })
                               : circle::CircleLift::rotation(p.real("alpha"));
    p.set("map", ser::to_json(f));
    const long iters = static_cast<long>(p.positive("iters"));
    const double x0 = p.real("x0");

    Outcome out;
    out.table.header = {"iterations", "estimate", "error_bound"};
    std::vector<long> checkpoints;
    for (long n = 10; n < iters; n *= 10) checkpoints.push_back(n);
    checkpoints.push_back(iters);
    circle::RotationEstimate last{};
    for (long n : checkpoints) {
        last = circle::rotation_number(f, x0, n);
        out.table.rows.push_back({num_int(n), num(last.estimate), num(last.error_bound)});
    }
    out.summary = {{"estimate", last.estimate}, {"error_bound", last.error_bound}};
    if (p.given("partner")) {
        const auto g = descriptor("partner", [&] { return ser::circle_lift_from_json(p.raw("partner")); });
        p.set("partner", ser::to_json(g));
        out.summary["additivity_residual"] = circle::rotation_additivity_residual(f, g, iters);
    }
    const long grid = static_cast<long>(p.integer("grid"));
    if (grid != 0) {
        if (grid < 2) throw ConfigError("grid must be >= 2 (or 0 to skip the scan)");
        json intervals = json::array();
        for (const auto& iv : circle::fixed_point_scan(f, static_cast<int>(grid))) intervals.push_back({iv.lo, iv.hi});
        out.summary["fixed_point_intervals"] = intervals;
    }
    return out;
}

// ---- calegari ----

Outcome cmd_calegari(Params& p) {
    const double alpha = p.positive_real("alpha");
    const int n_max = static_cast<int>(p.positive("n_max"));
    const auto start = circle::CylinderPoint::make(p.real("x"), p.real("y"), alpha);
    const auto power = [](circle::HeisenbergCoords u, long n) {
        return circle::HeisenbergCoords{u.a * n, u.b * n, u.c * n - u.a * u.b * n * (n - 1) / 2};
    };
    const circle::HeisenbergCoords G{1, 0, 0};
    const circle::HeisenbergCoords H{0, 1, 0};

    Outcome out;
    out.table.header = {"n", "a", "b", "c", "x", "y", "expected_x", "expected_y", "residual"};
    double worst = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        const auto gn = power(G, n);
        const auto hn = power(H, n);
        const auto comm = circle::heisenberg_commutator(gn, hn);
        // [g, h] = g^-1 h^-1 g h acts right to left.
        auto q = circle::calegari_eval(hn, start);
        q = circle::calegari_eval(gn, q);
        q = circle::calegari_eval(circle::heisenberg_inverse(hn), q);
        q = circle::calegari_eval(circle::heisenberg_inverse(gn), q);
        const auto expected = circle::calegari_eval({0, 0, n * n}, start);
        const double residual = circle::cylinder_distance(q, expected);
        worst = std::max(worst, residual);
        out.table.rows.push_back({num_int(n), num_int(comm.a), num_int(comm.b), num_int(comm.c), num(q.x), num(q.y),
                                  num(expected.x), num(expected.y), num(residual)});
    }
    // Center orbit on the x-circle of circumference alpha.
    const long orbit = static_cast<long>(p.positive("orbit"));
    std::vector<double> xs;
    auto q = start;
    for (long i = 0; i < orbit; ++i) {
        xs.push_back(q.x / alpha);
        q = circle::calegari_eval({0, 0, 1}, q);
    }
    out.summary = {{"max_residual", worst}, {"center_orbit_discrepancy", star_discrepancy(xs)}};
    if (worst > 1e-9) {
        out.exit_code = kExitCheckFailed;
        out.message = "commutator action differs from F^(n^2)";
    }
    return out;
}

// ---- egr ----

Outcome cmd_egr(Params& p) {
    const auto f = toral_param(p, "map");
    Polyline tau = p.given("curve")
                       ? descriptor("curve", [&] { return ser::polyline_from_json(p.raw("curve")); })
                       : Polyline::circle({p.real("center_x"), p.real("center_y")}, p.positive_real("radius"),
                                          static_cast<std::size_t>(p.positive("points")));
    if (!tau.closed()) throw ConfigError("curve must be closed");
    const int iters = static_cast<int>(p.integer("iters"));
    if (iters < 2) throw ConfigError("iters must be >= 2");
    const double max_seg = p.positive_real("max_seg");
    const auto cap = static_cast<std::size_t>(p.positive("cap"));

    Outcome out;
    out.table.header = {"n", "length", "log_length", "vertices"};
    const auto& L = f.linear_part();
    const double tr = static_cast<double>(L(0, 0) + L(1, 1));
    const double disc = tr * tr - 4.0 * static_cast<double>(L.determinant());
    const double spectral = disc >= 0 ? (std::abs(tr) + std::sqrt(disc)) / 2 : std::sqrt(std::abs(static_cast<double>(L.determinant())));
    out.summary["log_spectral_radius"] = std::log(spectral);
    try {
        const auto est = torus::curve_iterate_lengths(f, tau, iters, max_seg, cap);
        for (std::size_t n = 0; n < est.lengths.size(); ++n) {
            out.table.rows.push_back({num_int(n), num(est.lengths[n]), num(std::log(est.lengths[n])),
                                      num_int(est.vertex_counts[n])});
        }
        out.summary["slope"] = est.slope;
    } catch (const VertexCapError& e) {
        for (std::size_t n = 0; n < e.partial().size(); ++n) {
            out.table.rows.push_back({num_int(n), num(e.partial()[n]), num(std::log(e.partial()[n])), ""});
        }
        out.summary["slope"] = nullptr;
        out.exit_code = kExitInvalid;
        out.message = e.what();
    }
    return out;
}

// ---- displacement ----

Outcome cmd_displacement(Params& p) {
    const auto f = toral_param(p, "map");
    const Vec2 x1{p.real("x1"), p.real("y1")};
    const Vec2 x2{p.real("x2"), p.real("y2")};
    const int iters = static_cast<int>(p.positive("iters"));
    const auto rates = torus::displacement_rate(f, x1, x2, iters);
    Outcome out;
    out.table.header = {"n", "distance", "rate"};
    for (std::size_t i = 0; i < rates.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        out.table.rows.push_back({num_int(i + 1), num(rates[i] * n), num(rates[i])});
    }
    out.summary = {{"initial_distance", distance(x1, x2)}, {"final_rate", rates.back()}};
    return out;
}

// ---- spread ----

Outcome cmd_spread(Params& p) {
    const auto f = p.given("map") ? descriptor("map", [&] { return ser::annulus_lift_from_json(p.raw("map")); })
                                  : annulus::AnnulusLift::twist(p.real("twist"));
    p.set("map", ser::to_json(f));
    const auto arc = p.given("arc") ? descriptor("arc", [&] { return ser::arc_from_json(p.raw("arc")); })
                                    : annulus::AnnulusArc::vertical(0.5);
    p.set("arc", ser::to_json(arc));
    const int iters = static_cast<int>(p.positive("iters"));
    const double max_seg = p.positive_real("max_seg");
    const auto cap = static_cast<std::size_t>(p.positive("cap"));

    Outcome out;
    out.table.header = {"n", "a", "b", "L", "ratio"};
    try {
        const auto est = annulus::spread_estimate(f, arc, iters, max_seg, cap, p.real("offset"));
        for (std::size_t n = 0; n < est.values.size(); ++n) {
            const auto& v = est.values[n];
            out.table.rows.push_back({num_int(n), num_int(v.a), num_int(v.b), num_int(v.L),
                                      n == 0 ? "" : num(est.ratios[n - 1])});
        }
        out.summary = {{"tail_slope", est.tail_slope}, {"final_ratio", est.ratios.back()}};
    } catch (const VertexCapError& e) {
        for (std::size_t n = 0; n < e.partial().size(); ++n) {
            out.table.rows.push_back({num_int(n + 1), "", "", "", num(e.partial()[n])});
        }
        out.exit_code = kExitInvalid;
        out.message = e.what();
    }
    return out;
}

// ---- ergodic ----

Outcome cmd_ergodic(Params& p) {
    const std::string space = p.text("space");
    ergodic::Dynamics T = circle::CircleLift::identity();
    if (space == "circle") {
        const auto f = p.given("map") ? descriptor("map", [&] { return ser::circle_lift_from_json(p.raw("map")); })
                                      : circle::CircleLift::rotation(p.real("alpha"));
        p.set("map", ser::to_json(f));
        T = f;
    } else if (space == "annulus") {
        const auto f = p.given("map") ? descriptor("map", [&] { return ser::annulus_lift_from_json(p.raw("map")); })
                                      : annulus::AnnulusLift::twist(1.0);
        p.set("map", ser::to_json(f));
        T = f;
    } else {
        throw ConfigError("space must be 'circle' or 'annulus'");
    }
    const auto phi = p.given("observable")
                         ? descriptor("observable", [&] { return ser::observable_from_json(p.raw("observable")); })
                         : ergodic::Observable::cosine();
    p.set("observable", ser::to_json(phi));

    const auto seed = static_cast<std::uint64_t>(p.integer("seed"));
    const auto count = static_cast<std::size_t>(p.positive("points"));
    const long iters = static_cast<long>(p.positive("iters"));
    const double eps = p.positive_real("epsilon");
    std::optional<double> y;
    if (p.given("y")) y = p.real("y");
    const auto sample = ergodic::seeded_sample(seed, count, y);
    const auto stats = ergodic::recurrence_stats(T, phi, sample, eps, iters, static_cast<long>(p.integer("min_count")));

    Outcome out;
    out.table.header = {"seed", "point", "N", "epsilon", "count", "final_sum", "time_average"};
    double worst_average = 0.0;
    for (const auto& r : stats.points) {
        const std::string point = space == "circle" ? num(r.point.x) : num(r.point.x) + " " + num(r.point.y);
        out.table.rows.push_back({num_int(seed), point, num_int(iters), num(eps), num_int(r.count), num(r.final_sum),
                                  num(r.time_average)});
        worst_average = std::max(worst_average, std::abs(r.time_average));
    }
    out.summary = {{"fraction_at_least_min_count", stats.fraction_at_least},
                   {"max_abs_time_average", worst_average}};
    if (const auto m = phi.mean()) out.summary["observable_mean"] = *m;
    if (p.flag("drift")) {
        const auto d = ergodic::drift_positivity_check(T, phi, sample, iters, p.real("threshold"));
        out.summary["drift"] = {{"sample_size", d.sample_size}, {"escaping", d.escaping},
                                {"mean_all", d.mean_all},       {"mean_escaping", d.mean_escaping},
                                {"standard_error", d.standard_error}, {"threshold", d.threshold},
                                {"pass", d.pass}};
    }
    return out;
}

// ---- stability ----

Outcome cmd_stability(Params& p) {
    std::vector<stability::NearIdentityMap> maps;
    if (p.given("maps")) {
        const json& list = p.raw("maps");
        if (!list.is_array() || list.empty()) throw ConfigError("maps must be a non-empty array of descriptors");
        for (const auto& m : list) maps.push_back(descriptor("maps", [&] { return ser::near_identity_from_json(m); }));
    } else {
        maps = stability::polynomial_test_family();
    }
    json echo = json::array();
    for (const auto& m : maps) echo.push_back(ser::to_json(m));
    p.set("maps", echo);
    for (const auto& m : maps) {
        if (m.dimension() != maps.front().dimension()) throw ConfigError("maps must share a dimension");
    }

    const auto seed = static_cast<std::uint64_t>(p.integer("seed"));
    const int samples = static_cast<int>(p.positive("samples"));
    const long n_terms = static_cast<long>(p.positive("n_terms"));
    const stability::Point direction{p.real("direction_x"), p.real("direction_y")};

    double residual = 0.0;
    for (const auto& g : maps) {
        for (const auto& h : maps) residual = std::max(residual, stability::cocycle_identity_residual(g, h, samples, seed));
    }

    Outcome out;
    out.table.header = {"n", "normalizer", "max_defect"};
    std::vector<long> checkpoints;
    for (long n = 10; n < n_terms; n *= 10) checkpoints.push_back(n);
    checkpoints.push_back(n_terms);
    stability::ThetaReport last;
    try {
        for (long n : checkpoints) {
            last = stability::theta_estimate(maps, n, direction);
            out.table.rows.push_back({num_int(n), num(last.normalizer), num(last.max_defect)});
        }
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    json theta = json::array();
    for (const auto& t : last.theta) theta.push_back(t);

    const auto& g = maps.front();
    const auto square = stability::theta_estimate({g, stability::NearIdentityMap::power(g, 2)}, n_terms, direction);
    const double ratio = square.theta[0][0] != 0.0 ? square.theta[1][0] / square.theta[0][0] : 0.0;

    out.summary = {{"cocycle_residual", residual},
                   {"theta", theta},
                   {"max_defect", last.max_defect},
                   {"square_ratio", ratio}};
    if (residual > 1e-12) {
        out.exit_code = kExitCheckFailed;
        out.message = "cocycle identity residual above 1e-12";
    }
    return out;
}

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

std::vector<Command> commands() {
    const json none = nullptr;
    const json cap = static_cast<long long>(cayley::kDefaultElementCap);
    const json vcap = static_cast<long long>(kDefaultVertexCap);
    return {
        {"distortion", "word-length profile of a distorted element against its certificates",
         {{"family", Kind::text, "heisenberg", "heisenberg, sl2, polterovich or mess"},
          {"n_max", Kind::integer, 6, "certificates n = 1..n_max"},
          {"max_radius", Kind::integer, 8, "breadth-first search radius"},
          {"cap", Kind::integer, cap, "element cap for the ball"}},
         cmd_distortion},
        {"witte", "exact checks of the six-generator commutator relations",
         {{"k", Kind::integer, 2, "off-diagonal entry of the generators"},
          {"max_exp", Kind::integer, 3, "exponents m, n = 1..max_exp"}},
         cmd_witte},
        {"rotation", "rotation-number estimates of a circle lift",
         {{"map", Kind::descriptor, none, "circle lift descriptor (JSON); defaults to a rotation by --alpha"},
          {"alpha", Kind::real, 0.381966, "rotation angle when no map is given"},
          {"iters", Kind::integer, 10000, "iterations"},
          {"x0", Kind::real, 0.0, "base point"},
          {"partner", Kind::descriptor, none, "second lift for the additivity residual"},
          {"grid", Kind::integer, 0, "fixed-point scan grid (0 skips the scan)"}},
         cmd_rotation},
        {"calegari", "Heisenberg action on the cylinder: [G^n, H^n] against F^(n^2)",
         {{"alpha", Kind::real, std::numbers::sqrt2, "cylinder circumference"},
          {"x", Kind::real, 0.25, "start x"},
          {"y", Kind::real, 0.5, "start y"},
          {"n_max", Kind::integer, 6, "n = 1..n_max"},
          {"orbit", Kind::integer, 10000, "length of the F-orbit used for the discrepancy"}},
         cmd_calegari},
        {"egr", "log-length growth of an iterated closed curve on the torus",
         {{"map", Kind::descriptor, none, "toral_affine descriptor; defaults to the cat map"},
          {"curve", Kind::descriptor, none, "closed polyline; defaults to a circle"},
          {"center_x", Kind::real, 0.5, "circle center x"},
          {"center_y", Kind::real, 0.5, "circle center y"},
          {"radius", Kind::real, 0.1, "circle radius"},
          {"points", Kind::integer, 64, "circle vertices"},
          {"iters", Kind::integer, 10, "iterates"},
          {"max_seg", Kind::real, torus::kDefaultMaxSegment, "refinement threshold"},
          {"cap", Kind::integer, vcap, "vertex cap"}},
         cmd_egr},
        {"displacement", "distance growth of two lifted orbits",
         {{"map", Kind::descriptor, none, "toral_affine descriptor; defaults to the cat map"},
          {"x1", Kind::real, 0.0, ""},
          {"y1", Kind::real, 0.0, ""},
          {"x2", Kind::real, 0.01, ""},
          {"y2", Kind::real, 0.01 * kGolden, ""},
          {"iters", Kind::integer, 20, "iterates"}},
         cmd_displacement},
        {"spread", "crossing counts of iterated arcs in the annulus",
         {{"map", Kind::descriptor, none, "annulus lift descriptor; defaults to a twist by --twist"},
          {"twist", Kind::real, 2.0, "twist when no map is given"},
          {"arc", Kind::descriptor, none, "arc descriptor; defaults to the vertical arc at x = 0.5"},
          {"iters", Kind::integer, 50, "iterates"},
          {"max_seg", Kind::real, annulus::kDefaultArcSegment, "refinement threshold"},
          {"offset", Kind::real, 0.0, "shift of the crossing lines"},
          {"cap", Kind::integer, vcap, "vertex cap"}},
         cmd_spread},
        {"ergodic", "Birkhoff sums and recurrence counts over a seeded sample",
         {{"space", Kind::text, "circle", "circle or annulus"},
          {"map", Kind::descriptor, none, "lift descriptor; defaults to rotation by --alpha or Twist(1)"},
          {"alpha", Kind::real, kGolden, "rotation angle when no circle map is given"},
          {"observable", Kind::descriptor, none, "observable descriptor; defaults to cos(2 pi x)"},
          {"points", Kind::integer, 100, "sample size"},
          {"iters", Kind::integer, 100000, "Birkhoff sum length N"},
          {"epsilon", Kind::real, 0.01, "recurrence window"},
          {"min_count", Kind::integer, 10, "recurrence count threshold for the summary"},
          {"seed", Kind::integer, 1, "sample seed"},
          {"y", Kind::real, none, "fixed y for annulus samples (uniform when absent)"},
          {"drift", Kind::boolean, false, "also run the drift positivity check"},
          {"threshold", Kind::real, ergodic::kDefaultEscapeThreshold, "escape threshold for the drift check"}},
         cmd_ergodic},
        {"stability", "cocycle identity residual and normalized displacement limits",
         {{"maps", Kind::descriptor, none, "array of near-identity map descriptors"},
          {"n_terms", Kind::integer, 1000, "final index of x_n = direction / n"},
          {"samples", Kind::integer, 1000, "cocycle samples"},
          {"seed", Kind::integer, 1, "cocycle sample seed"},
          {"direction_x", Kind::real, 1.0, ""},
          {"direction_y", Kind::real, 0.0, ""}},
         cmd_stability},
    };
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed config " + path + ": " + e.what());
    }
}

/// Defaults, then flags, then the config file (which wins).
json resolve(const Command& cmd, const std::map<std::string, std::string>& flags, const CLI::App& sub,
             const json& config, std::string& out_stem) {
    json values = json::object();
    for (const auto& prm : cmd.params) {
        values[prm.name] = prm.fallback;
        if (sub.get_option(flag_of(prm.name))->count() > 0) values[prm.name] = convert_flag(prm, flags.at(prm.name));
    }
    if (config.is_null()) return values;
    if (!config.is_object()) throw ConfigError("config must be a JSON object");
    json merged = json::object();
    for (const auto& [key, v] : config.items()) {
        if (key == "command") {
            if (!v.is_string() || v.get<std::string>() != cmd.name) throw ConfigError("config is for another command");
        } else if (key == "output") {
            if (!v.is_string()) throw ConfigError("config key 'output' must be a string");
            out_stem = v.get<std::string>();
        } else if (key == "parameters") {
            if (!v.is_object()) throw ConfigError("config key 'parameters' must be an object");
            for (const auto& [k2, v2] : v.items()) merged[k2] = v2;
        } else {
            merged[key] = v;
        }
    }
    for (const auto& [key, v] : merged.items()) {
        const auto it = std::find_if(cmd.params.begin(), cmd.params.end(), [&](const Param& q) { return q.name == key; });
        if (it == cmd.params.end()) throw ConfigError("unknown config key '" + key + "' for " + cmd.name);
        check_config_value(*it, v);
        values[key] = v;
    }
    return values;
}

std::filesystem::path output_stem(const std::string& command, const std::string& requested) {
    if (!requested.empty()) return requested;
    const char* dir = std::getenv(kOutDirEnv);
    return std::filesystem::path(dir && *dir ? dir : ".") / command;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto cmds = commands();
    CLI::App app{"Experiments on distorted elements of groups and their dynamics"};
    app.require_subcommand(1);
    std::map<std::string, std::map<std::string, std::string>> flags;
    std::map<std::string, std::string> config_path, out_arg;
    std::vector<CLI::App*> subs;
    for (const auto& c : cmds) {
        auto* sub = app.add_subcommand(c.name, c.help);
        for (const auto& prm : c.params) {
            std::string help = prm.help;
            if (!prm.fallback.is_null()) help += (help.empty() ? "default " : " (default ") + prm.fallback.dump() + (help.empty() ? "" : ")");
            sub->add_option(flag_of(prm.name), flags[c.name][prm.name], help);
        }
        sub->add_option("--config", config_path[c.name], "JSON config; its values override flags");
        sub->add_option("--out", out_arg[c.name], "output stem for <stem>.csv and <stem>.json");
        subs.push_back(sub);
    }

    std::vector<const char*> argv{"distortion-lab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        const Command& cmd = cmds[i];
        try {
            std::string stem_arg = out_arg[cmd.name];
            json config = nullptr;
            if (!config_path[cmd.name].empty()) config = load_config(config_path[cmd.name]);
            Params params(resolve(cmd, flags[cmd.name], *subs[i], config, stem_arg));
            Outcome result = cmd.body(params);

            const auto stem = output_stem(cmd.name, stem_arg);
            if (stem.has_parent_path()) std::filesystem::create_directories(stem.parent_path());
            const std::string csv_path = stem.string() + ".csv";
            const std::string json_path = stem.string() + ".json";
            std::ofstream(csv_path, std::ios::binary) << write_csv(result.table);
            const json doc{{"command", cmd.name},
                           {"config", {{"command", cmd.name}, {"parameters", params.all()}}},
                           {"csv", csv_path},
                           {"columns", result.table.header},
                           {"summary", result.summary},
                           {"exit_code", result.exit_code},
                           {"timestamp", utc_timestamp()}};
            std::ofstream(json_path, std::ios::binary) << doc.dump(2) << '\n';
            out << cmd.name << ": wrote " << csv_path << " and " << json_path << '\n';
            if (!result.message.empty()) err << cmd.name << ": " << result.message << '\n';
            return result.exit_code;
        } catch (const ConfigError& e) {
            err << cmd.name << ": " << e.what() << '\n';
            return kExitInvalid;
        } catch (const cayley::CapacityError& e) {
            err << cmd.name << ": " << e.what() << '\n';
            return kExitInvalid;
        } catch (const std::invalid_argument& e) {
            err << cmd.name << ": " << e.what() << '\n';
            return kExitInvalid;
        } catch (const std::filesystem::filesystem_error& e) {
            err << cmd.name << ": " << e.what() << '\n';
            return kExitInvalid;
        }
    }
    return kExitInvalid;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace distortion::cli
