#pragma once

#include <array>
#include <optional>

#include "faddeev/fields.hpp"

namespace faddeev {

/// Rounding threshold for reported integer invariants.
inline constexpr double kIntegralTolerance = 0.1;

struct Fluxes {
	std::array<int, 3> p{};
	std::array<double, 3> raw{};
};

/// Raw primary-obstruction fluxes through the mid slices {x_k = l/2}.
std::array<double, 3> rawFluxes(const SphereField &psi);

/// Rounded fluxes; throws NonIntegralFlux if any raw value is more than 0.1 from an integer.
Fluxes fluxes(const SphereField &psi);

/**
 * Hopf charge Q = integral of alpha ^ d alpha with d alpha = psi^* omega, delta alpha = 0.
 * Requires vanishing fluxes; throws NonExactForm otherwise.
 */
double hopfCharge(const SphereField &psi, const SolveAlphaOptions &opts = {});

/// -(1/12 pi^2) integral Re(a ^ a ^ a), using Re(a^a^a) = 3 Re(a_1 [a_2, a_3]) = -6 det(a_1, a_2, a_3).
double degreeIntegral(const Connection &a);

/// Degree of u: T^3 -> S^3 from the cubic integral of a = u* du.
double degree(const GroupField &u);

/// cs(a) = (1/4 pi^2) integral Re(a ^ da + (2/3) a ^ a ^ a), with spectral da.
double chernSimons(const Connection &a);

/// gcd(|p_1|, |p_2|, |p_3|); 0 for the zero vector.
int modulus(const std::array<int, 3> &p);

struct HomotopyRecord {
	std::array<int, 3> fluxes{};
	std::array<double, 3> rawFluxes{};
	int m = 0;
	double degree = 0.0;
	/// round(degree) mod 2m, or round(degree) itself when m = 0
	long degreeClass = 0;
	std::optional<double> hopfCharge;
};

/// Homotopy data of psi = u phi u*, relative to the reference phi.
HomotopyRecord homotopyRecord(const SphereField &phi, const GroupField &u);

} // namespace faddeev
