#include "faddeev/flow.hpp"

#include <cmath>

#include "faddeev/invariants.hpp"

namespace faddeev {

namespace {

// Backtracking gives up once the trial step falls this far below the requested one.
constexpr double kStepUnderflow = 1e-14;

SphereField descend(const SphereField &psi, const std::vector<Imag> &grad, double step)
{
	std::vector<Imag> out(psi.grid().sites());
	for (std::size_t s = 0; s < out.size(); ++s) {
		const Imag v = psi[s] - step * grad[s];
		out[s] = v / norm(v);
	}
	return SphereField(psi.grid(), std::move(out));
}

StepResult lineSearch(const SphereField &psi, const Energy &e0, const std::vector<Imag> &grad, const FlowConfig &cfg,
                      double step)
{
	for (double s = step; s >= kStepUnderflow * step; s *= cfg.backtrack) {
		SphereField trial = descend(psi, grad, s);
		const Energy e = energy(trial);
		if (e.total <= e0.total)
			return {std::move(trial), s, true, e};
	}
	return {psi, 0.0, false, e0};
}

bool zero(const std::array<int, 3> &p) { return p == std::array<int, 3>{0, 0, 0}; }

} // namespace

const char *toString(FlowMode mode)
{
	switch (mode) {
	case FlowMode::MapClass: return "map-class";
	case FlowMode::HopfClass: return "hopf-class";
	case FlowMode::FluxOnly: return "flux-only";
	}
	return "?";
}

FlowMode parseFlowMode(const std::string &name)
{
	for (FlowMode m : {FlowMode::MapClass, FlowMode::HopfClass, FlowMode::FluxOnly})
		if (name == toString(m))
			return m;
	throw Error(ErrorKind::InvalidArgument, "unknown flow mode '" + name + "'");
}

void FlowConfig::validate() const
{
	if (maxIters < 0)
		throw Error(ErrorKind::InvalidArgument, "maxIters must be nonnegative");
	if (!(gradTol > 0.0) || !(step0 > 0.0) || !(chargeDriftTol > 0.0))
		throw Error(ErrorKind::InvalidArgument, "gradTol, step0 and chargeDriftTol must be positive");
	if (!(backtrack > 0.0 && backtrack < 1.0))
		throw Error(ErrorKind::InvalidArgument, "backtrack must lie in (0, 1)");
	if (monitorEvery < 1)
		throw Error(ErrorKind::InvalidArgument, "monitorEvery must be positive");
}

std::vector<Imag> gradEnergy(const SphereField &psi)
{
	const Grid &g = psi.grid();
	const std::size_t n = g.sites();
	const double inv = 1.0 / g.h();

	// Derivatives of each site's density with respect to its forward and backward differences.
	std::array<std::vector<Imag>, 3> gf, gb;
	for (int mu = 0; mu < 3; ++mu) {
		gf[mu].assign(n, Imag{});
		gb[mu].assign(n, Imag{});
	}
	for (std::size_t s = 0; s < n; ++s) {
		std::array<Imag, 3> fwd, bwd;
		for (int mu = 0; mu < 3; ++mu) {
			fwd[mu] = inv * (psi[g.neighbor(s, mu, +1)] - psi[s]);
			bwd[mu] = inv * (psi[s] - psi[g.neighbor(s, mu, -1)]);
			gf[mu][s] = 2.0 * fwd[mu];
		}
		for (int mu = 0; mu < 3; ++mu)
			for (int nu = mu + 1; nu < 3; ++nu)
				for (int i = 0; i < 2; ++i)
					for (int j = 0; j < 2; ++j) {
						const Imag &a = i == 0 ? fwd[mu] : bwd[mu];
						const Imag &b = j == 0 ? fwd[nu] : bwd[nu];
						const double ab = dot(a, b);
						// d|a x b|^2 / da = 2 (a |b|^2 - (a.b) b), weighted by 1/4
						const Imag da = 0.5 * (dot(b, b) * a - ab * b);
						const Imag db = 0.5 * (dot(a, a) * b - ab * a);
						(i == 0 ? gf : gb)[mu][s] += da;
						(j == 0 ? gf : gb)[nu][s] += db;
					}
	}

	// D+ psi(x) moves with psi(x + e) and against psi(x); D- psi(x) with psi(x) and against psi(x - e).
	std::vector<Imag> grad(n);
	for (std::size_t s = 0; s < n; ++s) {
		Imag acc;
		for (int mu = 0; mu < 3; ++mu) {
			acc += gf[mu][g.neighbor(s, mu, -1)] - gf[mu][s];
			acc += gb[mu][s] - gb[mu][g.neighbor(s, mu, +1)];
		}
		acc *= inv;
		grad[s] = acc - dot(acc, psi[s]) * psi[s];
	}
	return grad;
}

double gradNorm(const Grid &grid, const std::vector<Imag> &grad)
{
	std::vector<double> t(grad.size());
	for (std::size_t s = 0; s < grad.size(); ++s)
		t[s] = dot(grad[s], grad[s]);
	return std::sqrt(pairwiseSum(t) * grid.cellVolume());
}

StepResult relaxStep(const SphereField &psi, const FlowConfig &cfg, double step)
{
	if (!(step > 0.0))
		throw Error(ErrorKind::InvalidArgument, "step must be positive");
	if (!(cfg.backtrack > 0.0 && cfg.backtrack < 1.0))
		throw Error(ErrorKind::InvalidArgument, "backtrack must lie in (0, 1)");
	return lineSearch(psi, energy(psi), gradEnergy(psi), cfg, step);
}

FlowResult minimize(const SphereField &psi0, const FlowConfig &cfg, const std::function<void(const TraceRow &)> &onRow)
{
	cfg.validate();
	const bool fluxGuard = cfg.mode != FlowMode::HopfClass;
	const Fluxes start = fluxes(psi0);
	if (cfg.mode == FlowMode::HopfClass && !zero(start.p))
		throw Error(ErrorKind::InvalidArgument, "hopf-class flow needs vanishing fluxes");
	const bool chargeGuard = cfg.mode != FlowMode::FluxOnly && zero(start.p);
	const double q0 = zero(start.p) ? std::round(hopfCharge(psi0)) : 0.0;

	FlowResult res{psi0, {}, 0, false};
	Energy e = energy(psi0);
	std::vector<Imag> grad = gradEnergy(psi0);
	double gn = gradNorm(psi0.grid(), grad);

	auto monitor = [&](int iteration) {
		TraceRow row;
		row.iteration = iteration;
		row.energy = e;
		row.gradNorm = gn;
		row.fluxes = rawFluxes(res.field);

		std::array<int, 3> p{};
		bool integral = true;
		for (int k = 0; k < 3; ++k) {
			const double r = std::round(row.fluxes[k]);
			integral = integral && std::abs(row.fluxes[k] - r) <= kIntegralTolerance;
			p[k] = static_cast<int>(r);
		}
		if (integral && zero(p)) {
			try {
				row.hopf = hopfCharge(res.field);
			} catch (const Error &) {
			}
		}
		if (row.hopf && std::round(*row.hopf) != 0.0)
			row.vkRatio = e.total / std::pow(std::abs(*row.hopf), 0.75);
		res.trace.push_back(row);
		if (onRow)
			onRow(row);

		if (fluxGuard && (!integral || p != start.p))
			throw Error(ErrorKind::FluxChange, "rounded fluxes left their initial values at iteration " +
			                                       std::to_string(iteration));
		if (chargeGuard && (!row.hopf || std::abs(*row.hopf - q0) > cfg.chargeDriftTol))
			throw Error(ErrorKind::ChargeDrift, "Hopf charge drifted from " + std::to_string(q0) + " at iteration " +
			                                        std::to_string(iteration));
	};

	monitor(0);
	double step = cfg.step0;
	int lastRow = 0;
	for (int it = 1; it <= cfg.maxIters && gn > cfg.gradTol; ++it) {
		StepResult r = lineSearch(res.field, e, grad, cfg, step);
		if (!r.accepted)
			break;
		res.field = std::move(r.field);
		e = r.energy;
		step = std::min(cfg.step0, r.stepUsed / cfg.backtrack);
		grad = gradEnergy(res.field);
		gn = gradNorm(res.field.grid(), grad);
		res.iterations = it;
		if (it % cfg.monitorEvery == 0) {
			monitor(it);
			lastRow = it;
		}
	}
	if (lastRow != res.iterations)
		monitor(res.iterations);
	res.converged = gn <= cfg.gradTol;
	return res;
}

} // namespace faddeev
