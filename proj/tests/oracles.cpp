#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace oracle {

namespace {

using faddeev::dot;
using faddeev::cross;

constexpr double kEdge = 1e-12;

Vec sub(const Vec &a, const Vec &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec add(const Vec &a, const Vec &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec scale(double s, const Vec &a) { return {s * a[0], s * a[1], s * a[2]}; }
double vdot(const Vec &a, const Vec &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec vcross(const Vec &a, const Vec &b)
{
	return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double det3(const Vec &a, const Vec &b, const Vec &c) { return vdot(a, vcross(b, c)); }

const std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

int permSign(const std::array<int, 3> &p)
{
	const Vec e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
	return det3(e[p[0]], e[p[1]], e[p[2]]) > 0 ? 1 : -1;
}

/// Kuhn tetrahedron of the cube at corner c for permutation p: integer offsets of its 4 vertices.
std::array<std::array<int, 3>, 4> kuhn(const std::array<int, 3> &p)
{
	std::array<std::array<int, 3>, 4> v{};
	for (int i = 1; i < 4; ++i) {
		v[i] = v[i - 1];
		v[i][p[i - 1]] += 1;
	}
	return v;
}

/// Barycentric coordinates of the origin in the planar triangle (a, b, c); nullopt if outside or degenerate.
std::optional<std::array<double, 3>> originIn(const std::array<double, 2> &a, const std::array<double, 2> &b,
                                              const std::array<double, 2> &c, bool &degenerate)
{
	for (int k = 0; k < 2; ++k)
		if (std::min({a[k], b[k], c[k]}) > kEdge || std::max({a[k], b[k], c[k]}) < -kEdge)
			return std::nullopt;
	const double d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
	if (std::abs(d) < kEdge) {
		degenerate = true;
		return std::nullopt;
	}
	const double l1 = ((-a[0]) * (c[1] - a[1]) - (-a[1]) * (c[0] - a[0])) / d;
	const double l2 = ((b[0] - a[0]) * (-a[1]) - (b[1] - a[1]) * (-a[0])) / d;
	const double l0 = 1.0 - l1 - l2;
	const double m = std::min({l0, l1, l2});
	if (std::abs(m) < kEdge)
		degenerate = true;
	if (m <= 0.0)
		return std::nullopt;
	return std::array<double, 3>{l0, l1, l2};
}

/// Tangent chart at z with e1 x e2 = z.
struct SphereChart {
	Imag z, e1, e2;
	explicit SphereChart(const Imag &zz) : z(zz / faddeev::norm(zz))
	{
		const Imag t = std::abs(z.x) < 0.9 ? faddeev::kI : faddeev::kJ;
		e1 = cross(t, z);
		e1 = e1 / faddeev::norm(e1);
		e2 = cross(z, e1);
	}
	bool valid(const Imag &v) const { return dot(v, z) > 0.0; }
	std::array<double, 2> operator()(const Imag &v) const { return {dot(v, e1), dot(v, e2)}; }
};

} // namespace

std::optional<int> groupDegree(const faddeev::GroupField &u, const Quaternion &y)
{
	const Grid &g = u.grid();
	const int n = g.n();
	const Quaternion yn = (1.0 / y.norm()) * y;
	// chart basis y i, y j, y k: positively oriented together with y
	const Quaternion basis[3] = {faddeev::mul(yn, Quaternion(0, 1, 0, 0)), faddeev::mul(yn, Quaternion(0, 0, 1, 0)),
	                             faddeev::mul(yn, Quaternion(0, 0, 0, 1))};
	auto chart = [&](const Quaternion &v) {
		return Vec{faddeev::dot(v, basis[0]), faddeev::dot(v, basis[1]), faddeev::dot(v, basis[2])};
	};

	int count = 0;
	for (int z = 0; z < n; ++z)
		for (int yy = 0; yy < n; ++yy)
			for (int x = 0; x < n; ++x)
				for (const auto &p : kPerms) {
					const auto off = kuhn(p);
					std::array<Vec, 4> P;
					bool near = true;
					for (int i = 0; i < 4; ++i) {
						const Quaternion &v = u[g.index(x + off[i][0], yy + off[i][1], z + off[i][2])];
						near = near && faddeev::dot(v, yn) > 0.0;
						P[i] = chart(v);
					}
					if (!near)
						continue;
					const Vec a = sub(P[1], P[0]), b = sub(P[2], P[0]), c = sub(P[3], P[0]);
					const double d = det3(a, b, c);
					if (std::abs(d) < kEdge)
						continue;
					// solve a l1 + b l2 + c l3 = -P0
					const Vec r = scale(-1.0, P[0]);
					const double l1 = det3(r, b, c) / d, l2 = det3(a, r, c) / d, l3 = det3(a, b, r) / d;
					const double l0 = 1.0 - l1 - l2 - l3;
					const double m = std::min({l0, l1, l2, l3});
					if (std::abs(m) < kEdge)
						return std::nullopt;
					if (m > 0.0)
						count += (d > 0 ? 1 : -1) * permSign(p);
				}
	return count;
}

std::optional<int> sliceDegree(const faddeev::SphereField &psi, int axis, int index, const Imag &zval)
{
	const Grid &g = psi.grid();
	const int n = g.n();
	const SphereChart chart(zval);
	const int mu = (axis + 1) % 3, nu = (axis + 2) % 3;
	auto site = [&](int a, int b) {
		std::array<int, 3> c{};
		c[axis] = index;
		c[mu] = a;
		c[nu] = b;
		return psi[g.index(c[0], c[1], c[2])];
	};
	int count = 0;
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			const Imag v00 = site(a, b), v10 = site(a + 1, b), v11 = site(a + 1, b + 1), v01 = site(a, b + 1);
			for (const auto &tri : {std::array<Imag, 3>{v00, v10, v11}, std::array<Imag, 3>{v00, v11, v01}}) {
				if (!chart.valid(tri[0]) || !chart.valid(tri[1]) || !chart.valid(tri[2]))
					continue;
				const auto p0 = chart(tri[0]), p1 = chart(tri[1]), p2 = chart(tri[2]);
				bool degenerate = false;
				const auto in = originIn(p0, p1, p2, degenerate);
				if (degenerate)
					return std::nullopt;
				if (in) {
					const double d = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0]);
					count += d > 0 ? 1 : -1;
				}
			}
		}
	return count;
}

std::optional<std::vector<std::vector<Vec>>> preimage(const faddeev::SphereField &psi, const Imag &zval)
{
	const Grid &g = psi.grid();
	const int n = g.n();
	const double h = g.h();
	const SphereChart chart(zval);

	using Face = std::array<std::size_t, 3>;
	struct Crossing {
		Vec point;
	};
	std::map<Face, std::optional<Crossing>> faces;
	// oriented segments keyed by their starting face
	std::map<Face, Face> next;
	std::map<Face, Vec> points;

	for (int z = 0; z < n; ++z)
		for (int y = 0; y < n; ++y)
			for (int x = 0; x < n; ++x)
				for (const auto &p : kPerms) {
					const auto off = kuhn(p);
					std::array<std::size_t, 4> id;
					std::array<Vec, 4> X;
					std::array<Imag, 4> V;
					bool valid = true;
					for (int i = 0; i < 4; ++i) {
						id[i] = g.index(x + off[i][0], y + off[i][1], z + off[i][2]);
						X[i] = {h * (x + off[i][0]), h * (y + off[i][1]), h * (z + off[i][2])};
						V[i] = psi[id[i]];
						valid = valid && chart.valid(V[i]);
					}
					if (!valid)
						continue;

					std::vector<std::pair<Face, Vec>> hits;
					for (int skip = 0; skip < 4; ++skip) {
						std::array<int, 3> loc{};
						for (int i = 0, k = 0; i < 4; ++i)
							if (i != skip)
								loc[k++] = i;
						// sorted vertex order makes the crossing identical from both sides
						std::sort(loc.begin(), loc.end(), [&](int a, int b) { return id[a] < id[b]; });
						const Face key{id[loc[0]], id[loc[1]], id[loc[2]]};
						bool degenerate = false;
						const auto in = originIn(chart(V[loc[0]]), chart(V[loc[1]]), chart(V[loc[2]]), degenerate);
						if (degenerate)
							return std::nullopt;
						if (in) {
							Vec pt{0, 0, 0};
							for (int k = 0; k < 3; ++k)
								pt = add(pt, scale((*in)[k], X[loc[k]]));
							hits.push_back({key, pt});
						}
					}
					if (hits.empty())
						continue;
					if (hits.size() != 2)
						return std::nullopt;

					// affine chart map on the tetrahedron; orient along grad f1 x grad f2
					const Vec a = sub(X[1], X[0]), b = sub(X[2], X[0]), c = sub(X[3], X[0]);
					const double vol = det3(a, b, c);
					const auto q0 = chart(V[0]), q1 = chart(V[1]), q2 = chart(V[2]), q3 = chart(V[3]);
					Vec grad[2];
					for (int r = 0; r < 2; ++r) {
						const Vec df{q1[r] - q0[r], q2[r] - q0[r], q3[r] - q0[r]};
						// grad = M^{-T} df with M = [a b c] as rows
						grad[r] = scale(1.0 / vol, add(add(scale(df[0], vcross(b, c)), scale(df[1], vcross(c, a))),
						                               scale(df[2], vcross(a, b))));
					}
					const Vec t = vcross(grad[0], grad[1]);
					auto [f0, p0] = hits[0];
					auto [f1, p1] = hits[1];
					if (vdot(sub(p1, p0), t) < 0) {
						std::swap(f0, f1);
						std::swap(p0, p1);
					}
					if (next.count(f0))
						return std::nullopt;
					next[f0] = f1;
					points.emplace(f0, p0);
					points.emplace(f1, p1);
				}

	std::vector<std::vector<Vec>> loops;
	std::map<Face, bool> used;
	for (const auto &[start, _] : next) {
		if (used[start])
			continue;
		std::vector<Vec> loop;
		Face f = start;
		while (!used[f]) {
			used[f] = true;
			loop.push_back(points.at(f));
			const auto it = next.find(f);
			if (it == next.end())
				return std::nullopt;
			f = it->second;
		}
		if (f != start)
			return std::nullopt;
		// loops must not wrap around the torus
		for (std::size_t i = 0; i < loop.size(); ++i) {
			const Vec d = sub(loop[(i + 1) % loop.size()], loop[i]);
			if (std::sqrt(vdot(d, d)) > 2.0 * h)
				return std::nullopt;
		}
		loops.push_back(std::move(loop));
	}
	return loops;
}

double linking(const std::vector<Vec> &a, const std::vector<Vec> &b)
{
	double total = 0.0;
	auto unit = [](const Vec &v) {
		const double l = std::sqrt(vdot(v, v));
		return scale(1.0 / l, v);
	};
	auto clampAsin = [](double x) { return std::asin(std::clamp(x, -1.0, 1.0)); };
	for (std::size_t i = 0; i < a.size(); ++i) {
		const Vec &p1 = a[i], &p2 = a[(i + 1) % a.size()];
		for (std::size_t j = 0; j < b.size(); ++j) {
			const Vec &p3 = b[j], &p4 = b[(j + 1) % b.size()];
			const Vec r13 = sub(p3, p1), r14 = sub(p4, p1), r23 = sub(p3, p2), r24 = sub(p4, p2);
			const Vec n1 = unit(vcross(r13, r14)), n2 = unit(vcross(r14, r24)), n3 = unit(vcross(r24, r23)),
			          n4 = unit(vcross(r23, r13));
			const double omega = clampAsin(vdot(n1, n2)) + clampAsin(vdot(n2, n3)) + clampAsin(vdot(n3, n4)) +
			                     clampAsin(vdot(n4, n1));
			const double s = vdot(vcross(sub(p4, p3), sub(p2, p1)), r13);
			total += s > 0 ? omega : -omega;
		}
	}
	return total / (4.0 * M_PI);
}

std::optional<double> hopfByLinking(const faddeev::SphereField &psi, const Imag &za, const Imag &zb)
{
	const auto a = preimage(psi, za);
	const auto b = preimage(psi, zb);
	if (!a || !b)
		return std::nullopt;
	double lk = 0.0;
	for (const auto &la : *a)
		for (const auto &lb : *b)
			lk += linking(la, lb);
	return lk;
}

double gaussIntegral(const std::vector<Vec> &a, const std::vector<Vec> &b)
{
	double total = 0.0;
	for (std::size_t i = 0; i < a.size(); ++i) {
		const Vec da = sub(a[(i + 1) % a.size()], a[i]);
		const Vec ma = add(a[i], scale(0.5, da));
		for (std::size_t j = 0; j < b.size(); ++j) {
			const Vec db = sub(b[(j + 1) % b.size()], b[j]);
			const Vec mb = add(b[j], scale(0.5, db));
			const Vec r = sub(ma, mb);
			const double d = std::sqrt(vdot(r, r));
			total += vdot(r, vcross(da, db)) / (d * d * d);
		}
	}
	return total / (4.0 * M_PI);
}

Imag randomImag(std::mt19937_64 &rng, double s)
{
	std::normal_distribution<double> N(0.0, 1.0);
	return Imag{s * N(rng), s * N(rng), s * N(rng)};
}

namespace {

struct Mode {
	std::array<int, 3> k;
	double phase;
	Imag amp;
};

std::vector<Mode> drawModes(std::mt19937_64 &rng, double amplitude)
{
	std::uniform_int_distribution<int> K(-1, 1);
	std::uniform_real_distribution<double> P(0.0, 2.0 * M_PI);
	std::vector<Mode> modes(4);
	for (auto &m : modes) {
		do
			m.k = {K(rng), K(rng), K(rng)};
		while (m.k == std::array<int, 3>{0, 0, 0});
		m.phase = P(rng);
		m.amp = randomImag(rng, 0.5 * amplitude);
	}
	return modes;
}

} // namespace

faddeev::GroupField smoothGroup(const Grid &g, std::mt19937_64 &rng, double amplitude)
{
	const auto modes = drawModes(rng, amplitude);
	const Imag base = randomImag(rng, 1.0);
	std::vector<Quaternion> v(g.sites());
	for (std::size_t s = 0; s < v.size(); ++s) {
		const auto c = g.coords(s);
		Imag gen = base;
		for (const auto &m : modes) {
			const double arg = 2.0 * M_PI * (m.k[0] * c[0] + m.k[1] * c[1] + m.k[2] * c[2]) / g.n() + m.phase;
			gen += std::sin(arg) * m.amp;
		}
		v[s] = faddeev::expImag(gen).value();
	}
	return faddeev::GroupField(g, std::move(v));
}

faddeev::SphereField smoothSphere(const Grid &g, std::mt19937_64 &rng, double amplitude)
{
	const faddeev::GroupField w = smoothGroup(g, rng, amplitude);
	return faddeev::conjugateField(w, faddeev::SphereField::constant(g, faddeev::kI));
}

} // namespace oracle
