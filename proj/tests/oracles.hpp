#pragma once

// Independent combinatorial oracles for topological invariants of lattice fields.
// They share no code with the invariants module beyond the field containers.

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "faddeev/fields.hpp"

namespace oracle {

using faddeev::Grid;
using faddeev::Imag;
using faddeev::Quaternion;
using Vec = std::array<double, 3>;

/// Signed count of preimages of the regular value y under the piecewise-linear interpolation
/// of u on the Kuhn triangulation (6 tetrahedra per cube). nullopt if y is not regular enough.
std::optional<int> groupDegree(const faddeev::GroupField &u, const Quaternion &y);

/// Signed preimage count of z in the slice {x_axis = index}, two triangles per square.
std::optional<int> sliceDegree(const faddeev::SphereField &psi, int axis, int index, const Imag &z);

/// Oriented closed polygons (unwrapped physical coordinates) forming the PL preimage of z.
std::optional<std::vector<std::vector<Vec>>> preimage(const faddeev::SphereField &psi, const Imag &z);

/// Linking number of two oriented closed polygons, exact solid-angle summation.
double linking(const std::vector<Vec> &a, const std::vector<Vec> &b);

/// Hopf invariant as the linking number of the preimages of two regular values.
std::optional<double> hopfByLinking(const faddeev::SphereField &psi, const Imag &za, const Imag &zb);

/// Gauss double integral by the midpoint rule on a fine polygon; used to pin the sign of linking().
double gaussIntegral(const std::vector<Vec> &a, const std::vector<Vec> &b);

/// Smooth random fields built from a few low Fourier modes.
Imag randomImag(std::mt19937_64 &rng, double scale);
faddeev::GroupField smoothGroup(const Grid &g, std::mt19937_64 &rng, double amplitude = 1.0);
faddeev::SphereField smoothSphere(const Grid &g, std::mt19937_64 &rng, double amplitude = 1.0);

} // namespace oracle
