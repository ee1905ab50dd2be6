#pragma once

#include "wigkit/vec3.hpp"

namespace wigkit {

/**
Spherical triangle given by its three unit vertices. Construction requires
pairwise non-(anti)parallel vertices (|vi.vj| < 1 - 1e-10) and a non-vanishing
triple product (|v1.(v2 x v3)| > 1e-12).
*/
class SphericalTriangle {
public:
    SphericalTriangle(const UnitVec3& v1, const UnitVec3& v2, const UnitVec3& v3);

    const UnitVec3& v1() const { return v1_; }
    const UnitVec3& v2() const { return v2_; }
    const UnitVec3& v3() const { return v3_; }

    /** Signed orientation, the triple product v1.(v2 x v3). */
    double orientation() const;

private:
    UnitVec3 v1_, v2_, v3_;
};

/**
Polar triangle: vertices are the normalized cross products taken around the
triangle with the right-handed convention, (v1 x v2, v2 x v3, v3 x v1).
Applying it twice recovers the original vertex set for positively oriented
triangles (and the antipodal set for negatively oriented ones).
*/
SphericalTriangle polar_triangle(const SphericalTriangle& t);

/**
Spherical excess from the rotation axes (the polar vertices):
sum over pairs of (pi - arccos(ni.nj)) minus pi, using the supplement
relation between a triangle's angles and its polar triangle's sides.
All three axes flipping together leaves the value unchanged.
*/
double excess_from_axes(const UnitVec3& n1, const UnitVec3& n2, const UnitVec3& n3);

/** Spherical excess as the interior-angle sum minus pi (angles from vertex tangents). */
double excess_from_angle_sum(const SphericalTriangle& t);

/**
Spherical excess from the side arc lengths a, b, c (each in (0, pi), triangle
inequalities required):

  E = 4 atan sqrt( tan(s/2) tan((s-a)/2) tan((s-b)/2) tan((s-c)/2) ),
  s = (a + b + c)/2.

Sides are arc lengths arccos(v.v'), not dot products. Throws InvalidSides when
the inequalities fail or a tangent argument is negative beyond -1e-12.
*/
double lhuilier_excess(double a, double b, double c);

} // namespace wigkit
