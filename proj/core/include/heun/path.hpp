#pragma once

#include "heun/complex.hpp"

#include <string>
#include <variant>
#include <vector>

namespace heun {

struct LineSegment {
    Complex a;
    Complex b;
};

// center + radius e^{i(theta0 + sweep t)}, t in [0, 1]; sweep is signed.
struct CircularArc {
    Complex center;
    double radius;
    double theta0;
    double sweep;
};

using PathPiece = std::variant<LineSegment, CircularArc>;

Complex point_at(const PathPiece& piece, double t);
Complex tangent_at(const PathPiece& piece, double t);  // dz/dt
double length(const PathPiece& piece);
double distance_to(const PathPiece& piece, Complex p);

enum class PathKind { polyline, circle, composite };
enum class Orientation { ccw, cw };

class ComplexPath {
public:
    static ComplexPath polyline(std::vector<Complex> points);
    static ComplexPath circle(Complex center, double radius, int turns = 1,
                              Orientation orientation = Orientation::ccw, double start_angle = 0.0);
    static ComplexPath arc(Complex center, double radius, double theta0, double sweep);
    // Pieces must chain end-to-start.
    static ComplexPath composite(const std::vector<ComplexPath>& parts);
    static ComplexPath from_pieces(std::vector<PathPiece> pieces);

    PathKind kind() const { return kind_; }
    const std::vector<PathPiece>& pieces() const { return pieces_; }
    Complex start() const;
    Complex end() const;
    bool is_closed(double tol = 1e-12) const;
    // Path made of pieces [first, end).
    ComplexPath tail(std::size_t first) const;
    double distance_to(Complex p) const;
    // Largest distance of the path from its start point; the radius scale for margins.
    double scale() const;

    std::string to_json() const;
    static ComplexPath from_json(const std::string& text);

private:
    PathKind kind_ = PathKind::polyline;
    std::vector<PathPiece> pieces_;
    std::vector<ComplexPath> children_;
    std::vector<Complex> points_;
    Complex center_{};
    double radius_ = 0.0;
    int turns_ = 0;
    Orientation orientation_ = Orientation::ccw;
    double start_angle_ = 0.0;
};

// Segment from base to the circle around point, one turn, and back.
ComplexPath loop_around(Complex base, Complex point, double radius,
                        Orientation orientation = Orientation::ccw);

} // namespace heun
