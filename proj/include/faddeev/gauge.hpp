#pragma once

#include <array>

#include "faddeev/fields.hpp"

namespace faddeev {

/// Transport around the three coordinate loops through the base site.
struct Holonomy {
	std::array<UnitQuaternion, 3> loops;
	/// max |H_k - 1|
	double maxDefect() const;
};
Holonomy holonomy(const Connection &a);

struct DevelopOptions {
	double holonomyTolerance = 1e-6;
	double flatnessTolerance = 1e-6; ///< on the largest plaquette defect |P - 1|
};

/**
 * Integrates a flat connection with trivial holonomy to u with u* du = a and u(0) = 1,
 * transporting along a spanning tree of lattice edges (x-line, then y-lines, then z-lines).
 * Throws NontrivialHolonomy or NotFlat.
 */
GroupField develop(const Connection &a, const DevelopOptions &opts = {});

/// Site-wise q(phi(x), lambda(x)).
GroupField qField(const SphereField &phi, const GroupField &lambda);

/**
 * a^g = g* a g + g* dg with g = q(phi, lambda), applied edge by edge:
 * A'(x) = log(g(x)* exp(h A(x)) g(x + e)) / h. lambda must take values in S^1.
 */
Connection gaugeTransform(const Connection &a, const SphereField &phi, const GroupField &lambda);

struct HodgeParts {
	RealForm<1> exact;
	RealForm<1> coexact;
	/// Periods l * mean(omega_k) of the harmonic part.
	std::array<double, 3> harmonic;
};
HodgeParts hodgeParts(const RealForm<1> &omega);

struct GaugeFixOptions {
	double tolerance = 1e-10;        ///< target for |delta <a', phi>| and the removed exact part
	int maxIterations = 50;
	double tieEpsilon = 1e-9;        ///< coefficients this close below an integer round up
};

struct GaugeFixReport {
	/// Harmonic coefficients of <a', phi>, normalized so that one winding shifts them by one.
	std::array<double, 3> harmonic{};
	/// Windings of lambda applied along each axis.
	std::array<int, 3> windings{};
	double removedExactNorm = 0.0;
	double codifferentialResidual = 0.0;
	int iterations = 0;
	bool tieBroken = false;
};

struct GaugeFixResult {
	Connection connection;
	GroupField lambda;
	GaugeFixReport report;
};

/**
 * Coulomb-type gauge fixing of the longitudinal part: finds lambda: M -> S^1 such that
 * <a', phi> is coclosed with harmonic coefficients in [0, 1), where a' = a^{q(phi, lambda)}.
 * lambda(0) = 1, so the developed map u keeps psi = u phi u*. Idempotent.
 */
GaugeFixResult fixGauge(const Connection &a, const SphereField &phi, const GaugeFixOptions &opts = {});

} // namespace faddeev
