#include "faddeev/fields.hpp"

#include <string>

namespace faddeev {

namespace {

constexpr double kFourPi = 4.0 * M_PI;

std::array<std::vector<Imag>, 3> centralFrame(const SphereField &f)
{
	const Grid &g = f.grid();
	return {diff(g, f.values(), 0), diff(g, f.values(), 1), diff(g, f.values(), 2)};
}

Energy integrateDensities(const Grid &g, const std::vector<double> &quad, const std::vector<double> &quart)
{
	Energy e;
	e.e2 = integrate(g, quad);
	e.e4 = integrate(g, quart);
	e.total = e.e2 + e.e4;
	return e;
}

Quaternion plaquette(const Connection &a, int mu, int nu, std::size_t s)
{
	const Grid &g = a.grid();
	const UnitQuaternion p = a.transport(mu, s) * a.transport(nu, g.neighbor(s, mu, +1)) *
	                         a.transport(mu, g.neighbor(s, nu, +1)).inverse() * a.transport(nu, s).inverse();
	return p.value();
}

} // namespace

SphereField::SphereField(const Grid &grid, std::vector<Imag> values) : grid_(grid), values_(std::move(values))
{
	if (values_.size() != grid.sites())
		throw Error(ErrorKind::GridMismatch, "sphere field has " + std::to_string(values_.size()) + " values for " +
		                                         std::to_string(grid.sites()) + " sites");
	for (Imag &v : values_)
		v = unitImag(v);
}

SphereField SphereField::constant(const Grid &grid, const Imag &value)
{
	return SphereField(grid, std::vector<Imag>(grid.sites(), value));
}

GroupField::GroupField(const Grid &grid, std::vector<Quaternion> values) : grid_(grid), values_(std::move(values))
{
	if (values_.size() != grid.sites())
		throw Error(ErrorKind::GridMismatch, "group field has " + std::to_string(values_.size()) + " values for " +
		                                         std::to_string(grid.sites()) + " sites");
	for (Quaternion &q : values_)
		q = UnitQuaternion(q).value();
}

GroupField GroupField::constant(const Grid &grid, const Quaternion &value)
{
	return GroupField(grid, std::vector<Quaternion>(grid.sites(), value));
}

Connection::Connection(const Grid &grid) : grid_(grid)
{
	for (auto &e : edges_)
		e.assign(grid.sites(), Imag{});
}

Connection::Connection(const Grid &grid, std::array<std::vector<Imag>, 3> edges)
    : grid_(grid), edges_(std::move(edges))
{
	for (const auto &e : edges_)
		if (e.size() != grid.sites())
			throw Error(ErrorKind::GridMismatch, "connection component size does not match grid");
}

QuatForm<1> Connection::collocated() const
{
	QuatForm<1> out(grid_);
	for (int mu = 0; mu < 3; ++mu)
		for (std::size_t s = 0; s < grid_.sites(); ++s)
			out[mu][s] = at(mu, s);
	return out;
}

SphereField conjugateField(const GroupField &u, const SphereField &phi)
{
	requireSameGrid(u.grid(), phi.grid(), "conjugateField");
	std::vector<Imag> out(phi.grid().sites());
	for (std::size_t s = 0; s < out.size(); ++s) {
		const Imag v = conjugateBy(u[s], phi[s]);
		out[s] = v / norm(v);
	}
	return SphereField(phi.grid(), std::move(out));
}

double triangleArea(const Imag &a, const Imag &b, const Imag &c)
{
	return 2.0 * std::atan2(dot(a, cross(b, c)), 1.0 + dot(a, b) + dot(b, c) + dot(c, a));
}

RealForm<2> pullbackArea(const SphereField &psi)
{
	const Grid &g = psi.grid();
	const double scale = 1.0 / (kFourPi * g.h() * g.h());
	RealForm<2> f(g);
	std::vector<double> plaq(g.sites());
	for (int c = 0; c < 3; ++c) {
		const int mu = (c + 1) % 3, nu = (c + 2) % 3;
		for (std::size_t s = 0; s < g.sites(); ++s) {
			const std::size_t b = g.neighbor(s, mu, +1), d = g.neighbor(s, nu, +1), bd = g.neighbor(b, nu, +1);
			plaq[s] = scale * (triangleArea(psi[s], psi[b], psi[bd]) + triangleArea(psi[s], psi[bd], psi[d]));
		}
		// plaquette values sit at x + (e_mu + e_nu) h / 2
		std::array<double, 3> back{};
		back[mu] = back[nu] = -0.5;
		f[c] = spectralShift(g, plaq, back);
	}
	return f;
}

Energy energy(const SphereField &psi)
{
	const Grid &g = psi.grid();
	const double inv = 1.0 / g.h();
	std::vector<double> quad(g.sites()), quart(g.sites());
	for (std::size_t s = 0; s < g.sites(); ++s) {
		std::array<Imag, 3> fwd, bwd;
		for (int mu = 0; mu < 3; ++mu) {
			fwd[mu] = inv * (psi[g.neighbor(s, mu, +1)] - psi[s]);
			bwd[mu] = inv * (psi[s] - psi[g.neighbor(s, mu, -1)]);
		}
		const auto e = stencilDensity(fwd, bwd);
		quad[s] = e[0];
		quart[s] = e[1];
	}
	return integrateDensities(g, quad, quart);
}

Connection connectionOf(const GroupField &u)
{
	const Grid &g = u.grid();
	Connection a(g);
	const double inv = 1.0 / g.h();
	for (int mu = 0; mu < 3; ++mu)
		for (std::size_t s = 0; s < g.sites(); ++s) {
			const Quaternion step = mul(u[s].conj(), u[g.neighbor(s, mu, +1)]);
			if (step.w <= 0.0) {
				const auto c = g.coords(s);
				throw Error(ErrorKind::UnresolvableField,
				            "neighbouring group values at (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
				                std::to_string(c[2]) + ") along axis " + std::to_string(mu + 1) +
				                " are 90 degrees or more apart; refine the grid");
			}
			a.edge(mu)[s] = inv * logUnit(step);
		}
	return a;
}

QuatForm<1> covariantDerivative(const Connection &a, const SphereField &phi)
{
	requireSameGrid(a.grid(), phi.grid(), "covariantDerivative");
	const Grid &g = phi.grid();
	const auto dphi = centralFrame(phi);
	QuatForm<1> out(g);
	for (int mu = 0; mu < 3; ++mu)
		for (std::size_t s = 0; s < g.sites(); ++s)
			out[mu][s] = dphi[mu][s] + bracket(a.at(mu, s), phi[s]);
	return out;
}

Energy energyConn(const SphereField &phi, const Connection &a)
{
	const Grid &g = phi.grid();
	const QuatForm<1> dphi = covariantDerivative(a, phi);
	std::vector<double> quad(g.sites()), quart(g.sites());
	for (std::size_t s = 0; s < g.sites(); ++s) {
		const auto e = energyDensity({dphi[0][s], dphi[1][s], dphi[2][s]});
		quad[s] = e[0];
		quart[s] = e[1];
	}
	return integrateDensities(g, quad, quart);
}

Decomposition decompose(const Connection &a, const SphereField &phi)
{
	requireSameGrid(a.grid(), phi.grid(), "decompose");
	const Grid &g = phi.grid();
	Decomposition out{RealForm<1>(g), QuatForm<1>(g)};
	for (int mu = 0; mu < 3; ++mu)
		for (std::size_t s = 0; s < g.sites(); ++s) {
			const Imag am = a.at(mu, s);
			out.longitudinal[mu][s] = dot(am, phi[s]);
			// phi [a, phi] / 2 = phi x (a x phi) for unit phi
			out.tangential[mu][s] = cross(phi[s], cross(am, phi[s]));
		}
	return out;
}

double maxPlaquetteDefect(const Connection &a)
{
	const Grid &g = a.grid();
	double worst = 0.0;
	for (int c = 0; c < 3; ++c) {
		const int mu = (c + 1) % 3, nu = (c + 2) % 3;
		for (std::size_t s = 0; s < g.sites(); ++s)
			worst = std::max(worst, (plaquette(a, mu, nu, s) - Quaternion(1.0, 0.0, 0.0, 0.0)).norm());
	}
	return worst;
}

FlatnessResiduals flatnessResiduals(const Connection &a, const SphereField &phi)
{
	requireSameGrid(a.grid(), phi.grid(), "flatnessResiduals");
	const Grid &g = phi.grid();
	const std::size_t n = g.sites();
	const double h2 = g.h() * g.h();

	const Decomposition dec = decompose(a, phi);
	const auto dphi = centralFrame(phi);
	std::array<std::array<std::vector<double>, 3>, 3> dlong;
	std::array<std::array<std::vector<Imag>, 3>, 3> dtang;
	for (int mu = 0; mu < 3; ++mu)
		for (int nu = 0; nu < 3; ++nu) {
			if (mu == nu)
				continue;
			dlong[mu][nu] = diff(g, dec.longitudinal[nu], mu);
			dtang[mu][nu] = diff(g, dec.tangential[nu], mu);
		}

	std::vector<double> full(n * 3), eq1(n * 3), eq2(n * 3);
	for (std::size_t s = 0; s < n; ++s) {
		const Imag &p = phi[s];
		std::array<Imag, 3> comm{}, dcov{};
		for (int mu = 0; mu < 3; ++mu) {
			comm[mu] = bracket(a.at(mu, s), p);
			dcov[mu] = dphi[mu][s] + comm[mu];
		}
		for (int c = 0; c < 3; ++c) {
			const int mu = (c + 1) % 3, nu = (c + 2) % 3;
			const Imag logp = logUnit(plaquette(a, mu, nu, s));
			full[3 * s + c] = dot(logp, logp) / (h2 * h2);

			// (1/4)([d_mu phi, c_nu] - [d_nu phi, c_mu]); equals (1/4)(d phi ^ c + c ^ d phi)
			const Imag x = 0.25 * (bracket(dphi[mu][s], comm[nu]) - bracket(dphi[nu][s], comm[mu]));
			const double fl = dlong[mu][nu][s] - dlong[nu][mu][s];
			// Re(phi X) = -<phi, X>; (1/4) phi (c ^ c) has real part -<phi, c_mu x c_nu>/2
			const double r1 = fl + dot(p, x) + 0.5 * dot(p, cross(comm[mu], comm[nu]));
			eq1[3 * s + c] = r1 * r1;

			const double fmu = dec.longitudinal[mu][s], fnu = dec.longitudinal[nu][s];
			const Imag r2 = dtang[mu][nu][s] - dtang[nu][mu][s] - (fmu * dcov[nu] - fnu * dcov[mu]) - x;
			eq2[3 * s + c] = dot(r2, r2);
		}
	}
	const double vol = g.cellVolume();
	return {std::sqrt(pairwiseSum(full) * vol), std::sqrt(pairwiseSum(eq1) * vol), std::sqrt(pairwiseSum(eq2) * vol)};
}

} // namespace faddeev
