// Command-line front end: JSON in, JSON out, plus an OBJ export of the
// boundary surface of the region under the polyhedron.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "newton/errors.hpp"
#include "newton/monotonicity.hpp"
#include "newton/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace newton;

namespace {

constexpr int kExitMalformed = 1;
constexpr int kExitNotConvenient = 2;
constexpr int kExitPointInside = 3;
constexpr int kExitPropertyFailure = 4;

struct InputDocument {
    SupportSet support;
    std::optional<LatticePoint> point;
    std::vector<LatticePoint> points;
};

LatticePoint parse_point_json(const json& j, int dim) {
    if (!j.is_array() || int(j.size()) != dim) throw NotLatticeError("point arity mismatch");
    LatticePoint p = LatticePoint::of_dim(dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[std::size_t(i)].is_number_integer()) throw NotLatticeError("non-integer coordinate");
        long long v = j[std::size_t(i)].get<long long>();
        if (v < 0) throw NotLatticeError();
        p[i] = Int(v);
    }
    return p;
}

InputDocument read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json j = json::parse(in);
    if (!j.contains("support") || !j["support"].is_array() || j["support"].empty())
        throw std::runtime_error("input needs a nonempty \"support\" array");
    const int dim = int(j["support"][0].size());
    if (dim < 1 || dim > 3) throw std::runtime_error("support points must have 1 to 3 coordinates");
    InputDocument doc;
    std::vector<LatticePoint> pts;
    for (const json& entry : j["support"]) pts.push_back(parse_point_json(entry, dim));
    doc.support = make_support(dim, std::move(pts));
    if (j.contains("point")) doc.point = parse_point_json(j["point"], dim);
    if (j.contains("points"))
        for (const json& entry : j["points"]) doc.points.push_back(parse_point_json(entry, dim));
    return doc;
}

LatticePoint parse_point_flag(const std::string& text, int dim) {
    std::vector<long long> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(std::stoll(item));
    if (int(coords.size()) != dim) throw NotLatticeError("point arity mismatch");
    LatticePoint p = LatticePoint::of_dim(dim);
    for (int i = 0; i < dim; ++i) {
        if (coords[std::size_t(i)] < 0) throw NotLatticeError();
        p[i] = Int(coords[std::size_t(i)]);
    }
    return p;
}

std::vector<LatticePoint> parse_points_flag(const std::string& text, int dim) {
    std::vector<LatticePoint> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_point_flag(item, dim));
    return out;
}

json int_json(const Int& v) {
    // Newton numbers at desk scale fit int64; fall back to a string otherwise.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

json point_json(const LatticePoint& p) {
    json a = json::array();
    for (int i = 0; i < p.dim; ++i) a.push_back(int_json(p[i]));
    return a;
}

json support_json(const SupportSet& s) {
    json a = json::array();
    for (const LatticePoint& p : s.points) a.push_back(point_json(p));
    return a;
}

std::string plane_name(int axis) {
    static const char* names[3] = {"x=0", "y=0", "z=0"};
    return names[axis];
}

void require_3d(const SupportSet& s) {
    if (s.dim != 3) throw std::runtime_error("this command needs 3-coordinate support points");
}

int cmd_nu(const std::string& input) {
    InputDocument doc = read_input(input);
    Volumes vol = volumes(doc.support);
    json out;
    out["nu"] = int_json(newton_number(doc.support));
    out["convenient"] = true;
    for (int i = vol.dim; i >= 0; --i)
        out["v" + std::to_string(i)] = to_fraction_string(vol.v[std::size_t(i)]);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_classify(const std::string& input, const std::string& point_text) {
    InputDocument doc = read_input(input);
    require_3d(doc.support);
    LatticePoint p =
        point_text.empty() ? doc.point.value() : parse_point_flag(point_text, doc.support.dim);
    NewtonPolyhedron poly = build_polyhedron(doc.support);
    if (!poly.convenient) throw NotConvenientError();
    Classification cls = classify(poly, p);
    Int nu_before = newton_number(doc.support);
    json out;
    if (cls.equal) {
        out["relation"] = "equal";
        out["plane"] = plane_name(cls.witness->plane_axis);
        out["apex"] = point_json(cls.witness->apex);
        out["nu"] = int_json(nu_before);
    } else {
        out["relation"] = "strict";
        out["nu_before"] = int_json(nu_before);
        out["nu_after"] = int_json(newton_number(add_point(doc.support, p)));
        json reasons = json::array();
        if (cls.interior_point) {
            reasons.push_back({{"kind", "interior_point"}});
        } else {
            for (const PlaneReason& r : cls.reasons) {
                json entry;
                entry["plane"] = plane_name(r.axis);
                if (r.multi_apex) {
                    entry["kind"] = "multi_apex";
                    entry["count"] = r.off_count;
                } else {
                    entry["kind"] = "tall_pyramid";
                    entry["height"] = int_json(r.height);
                }
                reasons.push_back(entry);
            }
        }
        out["reasons"] = reasons;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_add(const std::string& input, const std::string& points_text) {
    InputDocument doc = read_input(input);
    std::vector<LatticePoint> pts =
        points_text.empty() ? doc.points : parse_points_flag(points_text, doc.support.dim);
    NuDropResult res = nu_drop(doc.support, pts);
    json out;
    out["support"] = support_json(res.final_support);
    json steps = json::array();
    for (const Int& s : res.steps) steps.push_back(int_json(s));
    out["steps"] = steps;
    out["total"] = int_json(res.total);
    out["skipped"] = res.skipped;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_enumerate_equal(const std::string& input) {
    InputDocument doc = read_input(input);
    require_3d(doc.support);
    json out;
    out["nu"] = int_json(newton_number(doc.support));
    json list = json::array();
    for (const EqualWitness& w : enumerate_equal(doc.support)) {
        json entry;
        entry["point"] = point_json(w.point);
        entry["plane"] = plane_name(w.plane_axis);
        entry["apex"] = point_json(w.apex);
        list.push_back(entry);
    }
    out["points"] = list;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_check(std::uint64_t seed, int iters, int max_intercept, int extra) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.max_intercept = max_intercept;
    cfg.extra_points = extra;
    CrossCheckReport report = cross_check(cfg, iters);
    json out;
    out["seed"] = report.base_seed;
    out["iterations"] = report.iterations;
    out["max_intercept"] = max_intercept;
    out["extra"] = extra;
    out["supports_checked"] = report.supports_checked;
    out["points_checked"] = report.points_checked;
    out["equal_cases"] = report.equal_cases;
    out["strict_cases"] = report.strict_cases;
    out["failures"] = report.failures;
    std::cout << out.dump(2) << "\n";
    return report.ok() ? 0 : kExitPropertyFailure;
}

// Boundary of the region under the polyhedron: the compact facets plus the
// three coordinate-plane restrictions. Rationals become decimals only here.
int cmd_mesh(const std::string& input, const std::string& out_path) {
    InputDocument doc = read_input(input);
    require_3d(doc.support);
    NewtonPolyhedron poly = build_polyhedron(doc.support);
    if (!poly.convenient) throw NotConvenientError();
    GammaMinusRegion region = gamma_minus(poly);

    std::vector<RatPoint> verts;
    auto vertex_id = [&](const RatPoint& p) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == p) return int(i);
        verts.push_back(p);
        return int(verts.size()) - 1;
    };
    std::vector<std::array<int, 3>> faces;
    auto emit = [&](const RatPoint& a, const RatPoint& b, const RatPoint& c, const Vec3& outward) {
        RatVec3 u, v;
        for (int t = 0; t < 3; ++t) {
            u[std::size_t(t)] = b.c[std::size_t(t)] - a.c[std::size_t(t)];
            v[std::size_t(t)] = c.c[std::size_t(t)] - a.c[std::size_t(t)];
        }
        RatVec3 n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        Rat s = n[0] * Rat(outward[0]) + n[1] * Rat(outward[1]) + n[2] * Rat(outward[2]);
        if (s < 0)
            faces.push_back({vertex_id(a), vertex_id(c), vertex_id(b)});
        else
            faces.push_back({vertex_id(a), vertex_id(b), vertex_id(c)});
    };

    if (region.v0 == 1) {
        for (const Facet& f : poly.compact_facets) {
            std::vector<RatPoint> cycle;
            for (int vi : f.vertices)
                cycle.push_back(RatPoint::from_lattice(poly.support.points[std::size_t(vi)]));
            for (std::size_t i = 1; i + 1 < cycle.size(); ++i)
                emit(cycle[0], cycle[i], cycle[i + 1], f.plane.normal);
        }
        for (const auto& pr : region.planes) {
            const int omitted = 3 - pr.axis_a - pr.axis_b;
            Vec3 outward{};
            outward[std::size_t(omitted)] = -1;
            std::vector<RatPoint> cycle;
            for (const RatPoint& p2 : pr.gamma_minus_cycle) {
                RatPoint p;
                p[pr.axis_a] = p2.c[0];
                p[pr.axis_b] = p2.c[1];
                cycle.push_back(p);
            }
            // The region is star-shaped from the origin, which is the first
            // cycle vertex, so a fan from it triangulates the polygon.
            for (std::size_t i = 1; i + 1 < cycle.size(); ++i)
                emit(cycle[0], cycle[i], cycle[i + 1], outward);
        }
    }

    std::ofstream obj(out_path);
    if (!obj) throw std::runtime_error("cannot open output file: " + out_path);
    obj << "# gamma-minus boundary surface\n";
    obj.precision(17);
    for (const RatPoint& v : verts)
        obj << "v " << to_double(v.c[0]) << " " << to_double(v.c[1]) << " " << to_double(v.c[2])
            << "\n";
    for (const auto& f : faces) obj << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
    obj.close();

    json out;
    out["out"] = out_path;
    out["vertices"] = verts.size();
    out["faces"] = faces.size();
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton numbers of convenient Newton polyhedra in R^3"};
    app.require_subcommand(1);

    std::string input, point_text, points_text, out_path;
    std::uint64_t seed = 42;
    int iters = 100, max_intercept = 12, extra = 6;

    auto* nu = app.add_subcommand("nu", "Newton number and volumes");
    nu->add_option("--input", input, "input JSON file")->required();

    auto* cls = app.add_subcommand("classify", "equal/strict verdict for a point under the polyhedron");
    cls->add_option("--input", input)->required();
    cls->add_option("--point", point_text, "x,y,z");

    auto* add = app.add_subcommand("add", "add points and report stepwise drops");
    add->add_option("--input", input)->required();
    add->add_option("--points", points_text, "x,y,z;x,y,z;...");

    auto* enumeq = app.add_subcommand("enumerate-equal", "all points preserving the Newton number");
    enumeq->add_option("--input", input)->required();

    auto* check = app.add_subcommand("check", "randomized cross-check against the slab oracle");
    check->add_option("--seed", seed);
    check->add_option("--iters", iters);
    check->add_option("--max-intercept", max_intercept);
    check->add_option("--extra", extra);

    auto* mesh = app.add_subcommand("mesh", "export the boundary surface as OBJ");
    mesh->add_option("--input", input)->required();
    mesh->add_option("--out", out_path, "output .obj path")->required();

    try {
        app.parse(argc, argv);
        if (nu->parsed()) return cmd_nu(input);
        if (cls->parsed()) return cmd_classify(input, point_text);
        if (add->parsed()) return cmd_add(input, points_text);
        if (enumeq->parsed()) return cmd_enumerate_equal(input);
        if (check->parsed()) return cmd_check(seed, iters, max_intercept, extra);
        if (mesh->parsed()) return cmd_mesh(input, out_path);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    } catch (const NotConvenientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConvenient;
    } catch (const PointInPolyhedronError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPointInside;
    } catch (const PropertyCheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}
