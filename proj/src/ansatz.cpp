#include "faddeev/ansatz.hpp"

#include <cmath>
#include <complex>

namespace faddeev {

namespace {

constexpr double kMaxRadius = 0.45;
constexpr double kMinCells = 8.0;

double smoothstep(double t)
{
	if (t <= 0.0)
		return 0.0;
	if (t >= 1.0)
		return 1.0;
	return t * t * (3.0 - 2.0 * t);
}

bool hasSupport(AnsatzKind k) { return k == AnsatzKind::Tube || k == AnsatzKind::Hopfion || k == AnsatzKind::Ballmap; }

void validate(const AnsatzSpec &spec, const Grid *grid)
{
	if (spec.axis < 1 || spec.axis > 3)
		throw Error(ErrorKind::InvalidArgument, "axis must be 1, 2 or 3");
	if (!hasSupport(spec.kind))
		return;
	if (!(spec.radius > 0.0 && spec.radius <= kMaxRadius))
		throw Error(ErrorKind::InvalidArgument, "radius must lie in (0, 0.45]");
	if (grid && spec.radius * grid->n() < kMinCells)
		throw Error(ErrorKind::UnderResolved, "support radius spans " + std::to_string(spec.radius * grid->n()) +
		                                          " cells; at least 8 are needed");
}

/// Rational map z -> z^Q (conjugated for Q < 0) read through stereographic projection from -k.
Imag rationalMap(const Imag &n, int q)
{
	using C = std::complex<double>;
	if (q == 0)
		return kI;
	const int m = std::abs(q);
	// Upper hemisphere: w = z^Q with z = (n1 + i n2) / (1 + n3).
	// Lower hemisphere: v = 1/w = zeta^Q with zeta = (n1 - i n2) / (1 - n3), avoiding the pole.
	if (n.z >= 0.0) {
		C z(n.x, n.y);
		z /= 1.0 + n.z;
		if (q < 0)
			z = std::conj(z);
		const C w = std::pow(z, m);
		const double a = std::norm(w);
		return Imag{2.0 * w.real(), 2.0 * w.imag(), 1.0 - a} / (1.0 + a);
	}
	C zeta(n.x, -n.y);
	zeta /= 1.0 - n.z;
	if (q < 0)
		zeta = std::conj(zeta);
	const C v = std::pow(zeta, m);
	const double a = std::norm(v);
	return Imag{2.0 * v.real(), -2.0 * v.imag(), a - 1.0} / (1.0 + a);
}

} // namespace

const char *toString(AnsatzKind kind)
{
	switch (kind) {
	case AnsatzKind::Constant: return "constant";
	case AnsatzKind::Equator: return "equator";
	case AnsatzKind::Tube: return "tube";
	case AnsatzKind::Hopfion: return "hopfion";
	case AnsatzKind::Ballmap: return "ballmap";
	}
	return "?";
}

AnsatzKind parseAnsatzKind(const std::string &name)
{
	for (AnsatzKind k : {AnsatzKind::Constant, AnsatzKind::Equator, AnsatzKind::Tube, AnsatzKind::Hopfion,
	                     AnsatzKind::Ballmap})
		if (name == toString(k))
			return k;
	throw Error(ErrorKind::InvalidArgument, "unknown ansatz '" + name + "'");
}

double profile(double t) { return M_PI * (1.0 - smoothstep(t)); }

Quaternion groupAt(const AnsatzSpec &spec, double l, const std::array<double, 3> &x)
{
	if (spec.kind != AnsatzKind::Ballmap)
		throw Error(ErrorKind::InvalidArgument, "only ballmap is group valued");
	validate(spec, nullptr);
	const Imag r{x[0] - 0.5 * l, x[1] - 0.5 * l, x[2] - 0.5 * l};
	const double rho = norm(r);
	const double big = spec.radius * l;
	if (rho >= big)
		return Quaternion(1.0, 0.0, 0.0, 0.0);
	const double f = profile(rho / big);
	const Imag dir = rho > 0.0 ? rationalMap(r / rho, spec.charge) : kK;
	// cos f - sin f n: the minus sign makes the degree +Q
	const Imag v = -std::sin(f) * dir;
	return Quaternion(std::cos(f), v.x, v.y, v.z);
}

Imag sphereAt(const AnsatzSpec &spec, double l, const std::array<double, 3> &x)
{
	validate(spec, nullptr);
	const int a = spec.axis - 1;
	switch (spec.kind) {
	case AnsatzKind::Constant:
		return kI;
	case AnsatzKind::Equator: {
		const double t = 2.0 * M_PI * x[a] / l;
		return std::cos(t) * kJ + std::sin(t) * kK;
	}
	case AnsatzKind::Tube: {
		const int b = (a + 1) % 3, c = (a + 2) % 3;
		const double xb = x[b] - 0.5 * l, xc = x[c] - 0.5 * l;
		const double rho = std::hypot(xb, xc);
		const double big = spec.radius * l;
		if (rho >= big)
			return kI;
		const double g = profile(rho / big);
		// -theta orients the disk so the flux through the transverse slice is +1
		const double chi = -std::atan2(xc, xb) + 2.0 * M_PI * spec.charge * x[a] / l;
		return std::cos(g) * kI + std::sin(g) * (std::cos(chi) * kJ + std::sin(chi) * kK);
	}
	case AnsatzKind::Hopfion: {
		AnsatzSpec ball = spec;
		ball.kind = AnsatzKind::Ballmap;
		// u i u* has Hopf charge -deg u
		ball.charge = -spec.charge;
		return conjugateBy(groupAt(ball, l, x), kI);
	}
	case AnsatzKind::Ballmap:
		break;
	}
	throw Error(ErrorKind::InvalidArgument, "ballmap is group valued");
}

std::variant<SphereField, GroupField> generate(const AnsatzSpec &spec, const Grid &grid)
{
	if (spec.kind == AnsatzKind::Ballmap)
		return generateGroup(spec, grid);
	return generateSphere(spec, grid);
}

SphereField generateSphere(const AnsatzSpec &spec, const Grid &grid)
{
	validate(spec, &grid);
	std::vector<Imag> v(grid.sites());
	for (std::size_t s = 0; s < v.size(); ++s) {
		const auto c = grid.coords(s);
		const Imag z = sphereAt(spec, grid.l(), {c[0] * grid.h(), c[1] * grid.h(), c[2] * grid.h()});
		v[s] = z / norm(z);
	}
	return SphereField(grid, std::move(v));
}

GroupField generateGroup(const AnsatzSpec &spec, const Grid &grid)
{
	validate(spec, &grid);
	std::vector<Quaternion> v(grid.sites());
	for (std::size_t s = 0; s < v.size(); ++s) {
		const auto c = grid.coords(s);
		const Quaternion q = groupAt(spec, grid.l(), {c[0] * grid.h(), c[1] * grid.h(), c[2] * grid.h()});
		v[s] = (1.0 / q.norm()) * q;
	}
	return GroupField(grid, std::move(v));
}

GroupField s1Winding(const Grid &grid, const std::array<int, 3> &windings)
{
	std::vector<Quaternion> v(grid.sites());
	for (std::size_t s = 0; s < v.size(); ++s) {
		const auto c = grid.coords(s);
		double t = 0.0;
		for (int k = 0; k < 3; ++k)
			t += 2.0 * M_PI * windings[k] * c[k] / grid.n();
		v[s] = circle(t).value();
	}
	return GroupField(grid, std::move(v));
}

} // namespace faddeev
