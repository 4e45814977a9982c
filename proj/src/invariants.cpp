#include "faddeev/invariants.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace faddeev {

std::array<double, 3> rawFluxes(const SphereField &psi)
{
	const RealForm<2> f = pullbackArea(psi);
	const int mid = psi.grid().n() / 2;
	return {sliceFlux(f, 0, mid), sliceFlux(f, 1, mid), sliceFlux(f, 2, mid)};
}

Fluxes fluxes(const SphereField &psi)
{
	Fluxes out;
	out.raw = rawFluxes(psi);
	for (int k = 0; k < 3; ++k) {
		const double r = std::round(out.raw[k]);
		if (std::abs(out.raw[k] - r) > kIntegralTolerance)
			throw Error(ErrorKind::NonIntegralFlux, "flux " + std::to_string(out.raw[k]) + " through slice " +
			                                            std::to_string(k + 1) + " is not near an integer");
		out.p[k] = static_cast<int>(r);
	}
	return out;
}

double hopfCharge(const SphereField &psi, const SolveAlphaOptions &opts)
{
	const Fluxes fl = fluxes(psi);
	if (fl.p != std::array<int, 3>{0, 0, 0})
		throw Error(ErrorKind::NonExactForm, "nonzero fluxes");
	const RealForm<1> alpha = solveAlpha(pullbackArea(psi), opts);
	return integrate(wedge(alpha, d(alpha)));
}

double degreeIntegral(const Connection &a)
{
	const Grid &g = a.grid();
	std::vector<double> det(g.sites());
	for (std::size_t s = 0; s < g.sites(); ++s)
		det[s] = dot(a.at(0, s), cross(a.at(1, s), a.at(2, s)));
	// -(1/12 pi^2) * (-6) = 1 / (2 pi^2)
	return integrate(g, det) / (2.0 * M_PI * M_PI);
}

double degree(const GroupField &u) { return degreeIntegral(connectionOf(u)); }

double chernSimons(const Connection &a)
{
	const Grid &g = a.grid();
	const QuatForm<1> ac = a.collocated();

	// da per imaginary component
	std::array<RealForm<2>, 3> da{RealForm<2>(g), RealForm<2>(g), RealForm<2>(g)};
	for (int q = 0; q < 3; ++q) {
		RealForm<1> comp(g);
		for (int mu = 0; mu < 3; ++mu)
			for (std::size_t s = 0; s < g.sites(); ++s)
				comp[mu][s] = ac[mu][s][q];
		da[q] = d(comp);
	}

	std::vector<double> density(g.sites());
	for (std::size_t s = 0; s < g.sites(); ++s) {
		double ada = 0.0;
		for (int c = 0; c < 3; ++c) {
			const Imag dac{da[0][c][s], da[1][c][s], da[2][c][s]};
			ada -= dot(ac[c][s], dac); // Re(pq) = -p.q for imaginary p, q
		}
		const double aaa = -6.0 * dot(ac[0][s], cross(ac[1][s], ac[2][s]));
		density[s] = ada + (2.0 / 3.0) * aaa;
	}
	return integrate(g, density) / (4.0 * M_PI * M_PI);
}

int modulus(const std::array<int, 3> &p)
{
	return std::gcd(std::gcd(std::abs(p[0]), std::abs(p[1])), std::abs(p[2]));
}

HomotopyRecord homotopyRecord(const SphereField &phi, const GroupField &u)
{
	requireSameGrid(phi.grid(), u.grid(), "homotopyRecord");
	const SphereField psi = conjugateField(u, phi);
	const Fluxes fl = fluxes(psi);

	HomotopyRecord rec;
	rec.fluxes = fl.p;
	rec.rawFluxes = fl.raw;
	rec.m = modulus(fl.p);
	rec.degree = degree(u);
	const double rounded = std::round(rec.degree);
	if (std::abs(rec.degree - rounded) > kIntegralTolerance)
		throw Error(ErrorKind::NonIntegralDegree, "degree " + std::to_string(rec.degree) + " is not near an integer");
	const long k = static_cast<long>(rounded);
	if (rec.m > 0) {
		const long period = 2L * rec.m;
		rec.degreeClass = ((k % period) + period) % period;
	} else {
		rec.degreeClass = k;
	}
	if (fl.p == std::array<int, 3>{0, 0, 0})
		rec.hopfCharge = hopfCharge(psi);
	return rec;
}

} // namespace faddeev
