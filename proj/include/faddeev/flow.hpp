#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "faddeev/fields.hpp"

namespace faddeev {

enum class FlowMode { MapClass, HopfClass, FluxOnly };

const char *toString(FlowMode mode);
FlowMode parseFlowMode(const std::string &name);

struct FlowConfig {
	FlowMode mode = FlowMode::MapClass;
	int maxIters = 500;
	double gradTol = 1e-6;
	double step0 = 1e-2;
	double backtrack = 0.5;
	int monitorEvery = 1;
	double chargeDriftTol = 0.05;

	/// Throws InvalidArgument on out-of-range values.
	void validate() const;
};

struct TraceRow {
	int iteration = 0;
	Energy energy;
	double gradNorm = 0.0;
	std::array<double, 3> fluxes{};
	std::optional<double> hopf;
	/// E / |Q|^{3/4}, defined when the Hopf charge is nonzero
	std::optional<double> vkRatio;
};
using FlowTrace = std::vector<TraceRow>;

/**
 * L^2 gradient of the discrete stencil energy, projected onto the tangent spaces of S^2:
 * (dE/dpsi(x)) / h^3 with the component along psi(x) removed.
 */
std::vector<Imag> gradEnergy(const SphereField &psi);

/// sqrt(sum |G|^2 h^3).
double gradNorm(const Grid &grid, const std::vector<Imag> &grad);

struct StepResult {
	SphereField field;
	double stepUsed = 0.0;
	bool accepted = false;
	Energy energy;
};

/// One projected descent step psi' = normalize(psi - s G) with backtracking until E does not increase.
StepResult relaxStep(const SphereField &psi, const FlowConfig &cfg, double step);

struct FlowResult {
	SphereField field;
	FlowTrace trace;
	int iterations = 0;
	bool converged = false;
};

/**
 * Projected gradient descent with class guards. Trace rows are produced on iteration 0,
 * every monitorEvery accepted steps, and at the end; onRow sees each row as it is made.
 * Throws FluxChange when the rounded fluxes move and, in hopf-class mode, ChargeDrift when
 * the Hopf charge leaves chargeDriftTol of its initial value.
 */
FlowResult minimize(const SphereField &psi0, const FlowConfig &cfg,
                    const std::function<void(const TraceRow &)> &onRow = {});

} // namespace faddeev
