#include "heun/path.hpp"

#include "heun/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace heun {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

double wrap_angle(double a)
{
    a = std::fmod(a, 2.0 * pi);
    if (a < 0.0) a += 2.0 * pi;
    return a;
}

} // namespace

Complex point_at(const PathPiece& piece, double t)
{
    return std::visit(overloaded{[t](const LineSegment& s) { return s.a + t * (s.b - s.a); },
                                 [t](const CircularArc& c) {
                                     return c.center + c.radius * unit(c.theta0 + c.sweep * t);
                                 }},
                      piece);
}

Complex tangent_at(const PathPiece& piece, double t)
{
    return std::visit(overloaded{[](const LineSegment& s) { return s.b - s.a; },
                                 [t](const CircularArc& c) {
                                     return Complex{0.0, c.sweep * c.radius} *
                                            unit(c.theta0 + c.sweep * t);
                                 }},
                      piece);
}

double length(const PathPiece& piece)
{
    return std::visit(overloaded{[](const LineSegment& s) { return std::abs(s.b - s.a); },
                                 [](const CircularArc& c) { return std::abs(c.sweep) * c.radius; }},
                      piece);
}

double distance_to(const PathPiece& piece, Complex p)
{
    return std::visit(
        overloaded{[p](const LineSegment& s) {
                       const Complex d = s.b - s.a;
                       const double n = std::norm(d);
                       double t = n > 0.0 ? ((p - s.a) * std::conj(d)).real() / n : 0.0;
                       t = std::clamp(t, 0.0, 1.0);
                       return std::abs(p - (s.a + t * d));
                   },
                   [p](const CircularArc& c) {
                       const Complex rel = p - c.center;
                       const double endpoints =
                           std::min(std::abs(p - (c.center + c.radius * unit(c.theta0))),
                                    std::abs(p - (c.center + c.radius * unit(c.theta0 + c.sweep))));
                       if (std::abs(c.sweep) >= 2.0 * pi || std::abs(rel) == 0.0)
                           return std::abs(std::abs(rel) - c.radius);
                       // Is the direction of p inside the swept angular range?
                       const double lo = c.sweep >= 0.0 ? c.theta0 : c.theta0 + c.sweep;
                       const double off = wrap_angle(std::arg(rel) - lo);
                       if (off <= std::abs(c.sweep)) return std::abs(std::abs(rel) - c.radius);
                       return endpoints;
                   }},
        piece);
}

ComplexPath ComplexPath::polyline(std::vector<Complex> points)
{
    require(points.size() >= 2, "polyline needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            require(points[i] != points[j] || (i == 0 && j + 1 == points.size()),
                    "polyline points must be pairwise distinct");
    ComplexPath p;
    p.kind_ = PathKind::polyline;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) p.pieces_.push_back(LineSegment{points[i], points[i + 1]});
    p.points_ = std::move(points);
    return p;
}

ComplexPath ComplexPath::circle(Complex center, double radius, int turns, Orientation orientation,
                                double start_angle)
{
    require(radius > 0.0 && std::isfinite(radius), "circle radius must be positive");
    require(turns != 0, "circle needs a non-zero number of turns");
    ComplexPath p;
    p.kind_ = PathKind::circle;
    const double dir = orientation == Orientation::ccw ? 1.0 : -1.0;
    const int n = std::abs(turns);
    const double sgn = turns > 0 ? dir : -dir;
    for (int i = 0; i < n; ++i) p.pieces_.push_back(CircularArc{center, radius, start_angle, sgn * 2.0 * pi});
    p.center_ = center;
    p.radius_ = radius;
    p.turns_ = turns;
    p.orientation_ = orientation;
    p.start_angle_ = start_angle;
    return p;
}

ComplexPath ComplexPath::arc(Complex center, double radius, double theta0, double sweep)
{
    require(radius > 0.0 && std::isfinite(radius), "arc radius must be positive");
    ComplexPath p;
    p.kind_ = PathKind::composite;
    p.pieces_.push_back(CircularArc{center, radius, theta0, sweep});
    p.center_ = center;
    p.radius_ = radius;
    p.start_angle_ = theta0;
    p.turns_ = 0;
    p.children_ = {};
    p.points_ = {};
    return p;
}

ComplexPath ComplexPath::composite(const std::vector<ComplexPath>& parts)
{
    require(!parts.empty(), "composite path needs at least one part");
    ComplexPath p;
    p.kind_ = PathKind::composite;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            const double tol = 1e-12 * std::max(1.0, std::abs(parts[i].start()));
            require(std::abs(parts[i - 1].end() - parts[i].start()) <= tol,
                    "composite path pieces must chain end-to-start");
        }
        p.pieces_.insert(p.pieces_.end(), parts[i].pieces_.begin(), parts[i].pieces_.end());
    }
    p.children_ = parts;
    return p;
}

ComplexPath ComplexPath::from_pieces(std::vector<PathPiece> pieces)
{
    require(!pieces.empty(), "path needs at least one piece");
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const Complex a = point_at(pieces[i - 1], 1.0);
        const Complex b = point_at(pieces[i], 0.0);
        require(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)),
                "path pieces must chain end-to-start");
    }
    if (pieces.size() == 1 && std::holds_alternative<LineSegment>(pieces.front())) {
        const auto& l = std::get<LineSegment>(pieces.front());
        return polyline({l.a, l.b});
    }
    ComplexPath p;
    p.kind_ = PathKind::composite;
    p.pieces_ = std::move(pieces);
    return p;
}

ComplexPath ComplexPath::tail(std::size_t first) const
{
    require(first < pieces_.size(), "path tail index out of range");
    return from_pieces(std::vector<PathPiece>(pieces_.begin() + static_cast<std::ptrdiff_t>(first), pieces_.end()));
}

Complex ComplexPath::start() const { return point_at(pieces_.front(), 0.0); }
Complex ComplexPath::end() const { return point_at(pieces_.back(), 1.0); }

bool ComplexPath::is_closed(double tol) const
{
    return std::abs(end() - start()) <= tol * std::max(1.0, scale());
}

double ComplexPath::distance_to(Complex p) const
{
    double d = std::numeric_limits<double>::infinity();
    for (const auto& piece : pieces_) d = std::min(d, heun::distance_to(piece, p));
    return d;
}

double ComplexPath::scale() const
{
    double s = 0.0;
    for (const auto& piece : pieces_) {
        std::visit(overloaded{[&](const LineSegment& l) {
                                  s = std::max({s, std::abs(l.a - start()), std::abs(l.b - start())});
                              },
                              [&](const CircularArc& c) { s = std::max(s, 2.0 * c.radius); }},
                   piece);
    }
    return s;
}

namespace {

using json = nlohmann::ordered_json;

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from(const json& j)
{
    if (j.is_array()) {
        require(j.size() == 2, "complex value as array needs two entries");
        return {j[0].get<double>(), j[1].get<double>()};
    }
    if (j.is_number()) return {j.get<double>(), 0.0};
    return {j.at("re").get<double>(), j.value("im", 0.0)};
}

ComplexPath path_from(const json& j)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "polyline") {
        std::vector<Complex> pts;
        for (const auto& e : j.at("points")) pts.push_back(complex_from(e));
        return ComplexPath::polyline(std::move(pts));
    }
    if (kind == "circle") {
        const auto orient = j.value("orientation", std::string("ccw"));
        require(orient == "ccw" || orient == "cw", "orientation must be ccw or cw");
        return ComplexPath::circle(complex_from(j.at("center")), j.at("radius").get<double>(),
                                   j.value("turns", 1),
                                   orient == "ccw" ? Orientation::ccw : Orientation::cw,
                                   j.value("start_angle", 0.0));
    }
    if (kind == "arc") {
        return ComplexPath::arc(complex_from(j.at("center")), j.at("radius").get<double>(),
                                j.at("theta0").get<double>(), j.at("sweep").get<double>());
    }
    if (kind == "composite") {
        std::vector<ComplexPath> parts;
        for (const auto& e : j.at("pieces")) parts.push_back(path_from(e));
        return ComplexPath::composite(parts);
    }
    throw PreconditionError("unknown path kind '" + kind + "'");
}

} // namespace

std::string ComplexPath::to_json() const
{
    json j;
    switch (kind_) {
    case PathKind::polyline: {
        j["kind"] = "polyline";
        json pts = json::array();
        for (auto z : points_) pts.push_back(complex_json(z));
        j["points"] = pts;
        break;
    }
    case PathKind::circle:
        j["kind"] = "circle";
        j["center"] = complex_json(center_);
        j["radius"] = radius_;
        j["turns"] = turns_;
        j["orientation"] = orientation_ == Orientation::ccw ? "ccw" : "cw";
        j["start_angle"] = start_angle_;
        break;
    case PathKind::composite:
        if (!children_.empty()) {
            j["kind"] = "composite";
            json parts = json::array();
            for (const auto& c : children_) parts.push_back(json::parse(c.to_json()));
            j["pieces"] = parts;
            break;
        }
        if (pieces_.size() == 1 && std::holds_alternative<CircularArc>(pieces_.front())) {
            const auto& c = std::get<CircularArc>(pieces_.front());
            j["kind"] = "arc";
            j["center"] = complex_json(c.center);
            j["radius"] = c.radius;
            j["theta0"] = c.theta0;
            j["sweep"] = c.sweep;
            break;
        }
        {
            j["kind"] = "composite";
            json parts = json::array();
            for (const auto& piece : pieces_) parts.push_back(json::parse(from_pieces({piece}).to_json()));
            j["pieces"] = parts;
        }
        break;
    }
    return j.dump();
}

ComplexPath ComplexPath::from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("path JSON: ") + e.what());
    }
    try {
        return path_from(j);
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("path JSON: ") + e.what());
    }
}

ComplexPath loop_around(Complex base, Complex point, double radius, Orientation orientation)
{
    require(std::abs(base - point) > radius, "loop base point must lie outside the circle");
    const double phi = std::arg(base - point);
    const Complex entry = point + radius * unit(phi);
    return ComplexPath::composite({ComplexPath::polyline({base, entry}),
                                   ComplexPath::circle(point, radius, 1, orientation, phi),
                                   ComplexPath::polyline({entry, base})});
}

} // namespace heun
