#pragma once

#include <variant>

#include "trimetric/complex_point.hpp"

namespace trimetric {

// Canonical disk automorphism z -> (z + a) / (1 + a z) with 0 <= a < 1.
// Every disk automorphism reduces to this form between two rotations, and
// rotations are isometries for every metric in this library.
struct MoebiusMap {
    double a = 0.0;
};

// Validates 0 <= a < 1.
MoebiusMap make_moebius(double a);

struct LineCurve {
    Complex point;           // a point on the line
    Complex unit_direction;  // unit modulus
};

struct CircleCurve {
    Complex center;
    double radius;  // > 0
};

// A line-or-circle, as produced by mapping a line through a Moebius map.
struct GeneralizedCircle {
    std::variant<LineCurve, CircleCurve> shape;

    bool is_line() const { return std::holds_alternative<LineCurve>(shape); }
    bool is_circle() const { return std::holds_alternative<CircleCurve>(shape); }
    const LineCurve& line() const { return std::get<LineCurve>(shape); }
    const CircleCurve& circle() const { return std::get<CircleCurve>(shape); }
};

enum class TangencyKind { Internal, External, Line };

const char* tangency_name(TangencyKind k);

// w = (z + a) / (1 + a z); maps the unit disk onto itself and fixes +-1.
Complex mobius_apply(const MoebiusMap& m, Complex z);

// Inverse map z = (w - a) / (1 - a w).
Complex mobius_inverse(const MoebiusMap& m, Complex w);

// Argument of the boundary preimage: theta with e^{i theta} = f^{-1}(e^{i phi}),
// returned in [0, 2*pi).  Satisfies
//   cos(theta) = ((1 + a^2) cos(phi) - 2a) / (1 + a^2 - 2a cos(phi)).
double theta_from_phi(const MoebiusMap& m, double phi);

struct SupportingLinePreimage {
    GeneralizedCircle curve;
    double theta;  // tangency angle of the preimage with the unit circle
};

// Preimage under f of the supporting line of the unit disk at e^{i phi}.
// The preimage is tangent to the unit circle at e^{i theta} and, for a > 0,
// passes through the pole preimage -1/a.  It degenerates to a straight line
// exactly when cos(phi) = a (within 1e-12); for a = 0 it is the supporting
// line itself.
SupportingLinePreimage preimage_of_supporting_line(const MoebiusMap& m, double phi);

// Case split on the preimage of the supporting line at e^{i phi}:
// internal tangency iff cos(phi) > a, external iff cos(phi) < a,
// straight line at equality (tolerance 1e-12 on cos(phi) - a).
TangencyKind classify_tangency(const MoebiusMap& m, double phi);

// Radius of the internally tangent preimage circle,
//   R = (1 + 2a cos(theta) + a^2) / (2a (a + cos(theta))),
// defined for a in (0,1) and cos(theta) > -a.  Always R >= (1 + 1/a)/2,
// with equality only at theta = 0.
double circle_radius_R(const MoebiusMap& m, double theta);

// Reduction of the general automorphism e^{i rotation}(z - center)/(1 - conj(center) z)
// to the canonical map:  g = rot(post_rotation) o f_a o rot(pre_rotation)
// with a = |center|.
struct CanonicalReduction {
    MoebiusMap map;
    double pre_rotation;
    double post_rotation;
};

CanonicalReduction reduce_to_canonical(Complex center, double rotation);

}  // namespace trimetric
