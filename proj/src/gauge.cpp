#include "faddeev/gauge.hpp"

#include <cmath>
#include <string>

namespace faddeev {

namespace {

double defect(const UnitQuaternion &q) { return (q.value() - Quaternion(1.0, 0.0, 0.0, 0.0)).norm(); }

UnitQuaternion renormalized(const Quaternion &q) { return UnitQuaternion::fromTrusted((1.0 / q.norm()) * q); }

} // namespace

double Holonomy::maxDefect() const
{
	double worst = 0.0;
	for (const auto &h : loops)
		worst = std::max(worst, defect(h));
	return worst;
}

Holonomy holonomy(const Connection &a)
{
	const Grid &g = a.grid();
	Holonomy out;
	for (int mu = 0; mu < 3; ++mu) {
		UnitQuaternion acc;
		std::size_t s = 0;
		for (int step = 0; step < g.n(); ++step) {
			acc = acc * a.transport(mu, s);
			s = g.neighbor(s, mu, +1);
		}
		out.loops[mu] = renormalized(acc.value());
	}
	return out;
}

GroupField develop(const Connection &a, const DevelopOptions &opts)
{
	const Holonomy hol = holonomy(a);
	if (hol.maxDefect() > opts.holonomyTolerance)
		throw Error(ErrorKind::NontrivialHolonomy,
		            "holonomy differs from 1 by " + std::to_string(hol.maxDefect()));
	const double flat = maxPlaquetteDefect(a);
	if (flat > opts.flatnessTolerance)
		throw Error(ErrorKind::NotFlat, "plaquette defect " + std::to_string(flat));

	const Grid &g = a.grid();
	const int n = g.n();
	std::vector<Quaternion> u(g.sites());
	u[0] = Quaternion(1.0, 0.0, 0.0, 0.0);
	auto extend = [&](std::size_t from, int mu) {
		const std::size_t to = g.neighbor(from, mu, +1);
		u[to] = renormalized(mul(u[from], a.transport(mu, from).value())).value();
	};
	for (int x = 0; x + 1 < n; ++x)
		extend(g.index(x, 0, 0), 0);
	for (int y = 0; y + 1 < n; ++y)
		for (int x = 0; x < n; ++x)
			extend(g.index(x, y, 0), 1);
	for (int z = 0; z + 1 < n; ++z)
		for (int y = 0; y < n; ++y)
			for (int x = 0; x < n; ++x)
				extend(g.index(x, y, z), 2);
	return GroupField(g, std::move(u));
}

GroupField qField(const SphereField &phi, const GroupField &lambda)
{
	requireSameGrid(phi.grid(), lambda.grid(), "qField");
	std::vector<Quaternion> v(phi.grid().sites());
	for (std::size_t s = 0; s < v.size(); ++s)
		v[s] = qmap(phi[s], lambda[s]).value();
	return GroupField(phi.grid(), std::move(v));
}

Connection gaugeTransform(const Connection &a, const SphereField &phi, const GroupField &lambda)
{
	requireSameGrid(a.grid(), phi.grid(), "gaugeTransform");
	requireSameGrid(a.grid(), lambda.grid(), "gaugeTransform");
	const Grid &g = a.grid();
	std::vector<UnitQuaternion> gauge(g.sites());
	for (std::size_t s = 0; s < g.sites(); ++s)
		gauge[s] = qmap(phi[s], lambda[s]);

	Connection out(g);
	const double inv = 1.0 / g.h();
	for (int mu = 0; mu < 3; ++mu)
		for (std::size_t s = 0; s < g.sites(); ++s) {
			const Quaternion step =
			    mul(mul(gauge[s].inverse().value(), a.transport(mu, s).value()), gauge[g.neighbor(s, mu, +1)].value());
			if (step.w <= 0.0)
				throw Error(ErrorKind::UnresolvableField, "gauge-transformed edge transport leaves the log chart");
			out.edge(mu)[s] = inv * logUnit(step);
		}
	return out;
}

HodgeParts hodgeParts(const RealForm<1> &omega)
{
	HodgeSplit split = hodgeSplit(omega);
	HodgeParts out{std::move(split.exact), std::move(split.coexact), {}};
	for (int c = 0; c < 3; ++c)
		out.harmonic[c] = omega.grid().l() * split.mean[c];
	return out;
}

GaugeFixResult fixGauge(const Connection &a, const SphereField &phi, const GaugeFixOptions &opts)
{
	requireSameGrid(a.grid(), phi.grid(), "fixGauge");
	const Grid &g = a.grid();
	const double l = g.l();

	GaugeFixResult res{a, GroupField::constant(g, Quaternion(1.0, 0.0, 0.0, 0.0)), {}};
	std::vector<double> total(g.sites(), 0.0);

	auto longitudinal = [&](const Connection &c) { return decompose(c, phi).longitudinal; };
	auto coefficients = [&](const RealForm<1> &f) {
		std::array<double, 3> h{};
		for (int c = 0; c < 3; ++c)
			h[c] = l * pairwiseSum(f[c]) / static_cast<double>(g.sites()) / (2.0 * M_PI);
		return h;
	};

	RealForm<1> f = longitudinal(a);
	res.report.removedExactNorm = normL2(hodgeSplit(f).exact);

	for (int it = 0;; ++it) {
		const std::array<double, 3> h = coefficients(f);
		std::array<int, 3> dw{};
		for (int c = 0; c < 3; ++c) {
			dw[c] = -static_cast<int>(std::floor(h[c] + opts.tieEpsilon));
			if (std::floor(h[c] + opts.tieEpsilon) != std::floor(h[c]))
				res.report.tieBroken = true;
		}
		const double resid = normL2(codiff(f));
		res.report.harmonic = h;
		res.report.codifferentialResidual = resid;
		res.report.iterations = it;
		if ((resid <= opts.tolerance && dw == std::array<int, 3>{0, 0, 0}) || it >= opts.maxIterations)
			break;

		const RealForm<0> theta = centralPotential(f);
		std::vector<Quaternion> lam(g.sites());
		for (std::size_t s = 0; s < g.sites(); ++s) {
			const auto c = g.coords(s);
			double t = theta[0][s];
			for (int k = 0; k < 3; ++k)
				t += 2.0 * M_PI * dw[k] * c[k] / g.n();
			total[s] += t;
			lam[s] = circle(t).value();
		}
		for (int k = 0; k < 3; ++k)
			res.report.windings[k] += dw[k];
		res.connection = gaugeTransform(res.connection, phi, GroupField(g, std::move(lam)));
		f = longitudinal(res.connection);
	}

	for (double &c : res.report.harmonic)
		if (c < 0.0 && res.report.tieBroken)
			c = 0.0;
	std::vector<Quaternion> lam(g.sites());
	for (std::size_t s = 0; s < g.sites(); ++s)
		lam[s] = circle(total[s]).value();
	res.lambda = GroupField(g, std::move(lam));
	return res;
}

} // namespace faddeev
