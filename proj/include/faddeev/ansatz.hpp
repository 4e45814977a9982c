#pragma once

#include <array>
#include <string>
#include <variant>

#include "faddeev/fields.hpp"

namespace faddeev {

enum class AnsatzKind { Constant, Equator, Tube, Hopfion, Ballmap };

const char *toString(AnsatzKind kind);
/// Parses "constant", "equator", "tube", "hopfion" or "ballmap"; throws InvalidArgument.
AnsatzKind parseAnsatzKind(const std::string &name);

struct AnsatzSpec {
	AnsatzKind kind = AnsatzKind::Constant;
	/// Hopf charge for hopfion, degree for ballmap, twists for tube.
	int charge = 1;
	/// 1-based axis for tube and equator.
	int axis = 1;
	/// Support radius as a fraction of l, in (0, 0.45].
	double radius = 0.4;
};

/// Radial profile pi (1 - S(t)) with the cubic smoothstep S; pi at t = 0, 0 for t >= 1, f' = 0 at both ends.
double profile(double t);

/// Pointwise sphere-valued ansatz at physical coordinates x in [0, l)^3.
Imag sphereAt(const AnsatzSpec &spec, double l, const std::array<double, 3> &x);
/// Pointwise group-valued ansatz (ballmap only).
Quaternion groupAt(const AnsatzSpec &spec, double l, const std::array<double, 3> &x);

/// Samples the ansatz on the grid; ballmap yields a GroupField, the others a SphereField.
std::variant<SphereField, GroupField> generate(const AnsatzSpec &spec, const Grid &grid);
SphereField generateSphere(const AnsatzSpec &spec, const Grid &grid);
GroupField generateGroup(const AnsatzSpec &spec, const Grid &grid);

/// lambda(x) = exp(i 2 pi sum_k w_k x_k / l).
GroupField s1Winding(const Grid &grid, const std::array<int, 3> &windings);

} // namespace faddeev
