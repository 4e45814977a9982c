#include "faddeev/lattice.hpp"

#include <cmath>
#include <string>

namespace faddeev {

Grid::Grid(int n, double l) : n_(n), l_(l)
{
	if (n < 4)
		throw Error(ErrorKind::InvalidArgument, "grid needs n >= 4, got " + std::to_string(n));
	if (!(l > 0.0) || !std::isfinite(l))
		throw Error(ErrorKind::InvalidArgument, "grid period must be positive");
	h_ = l / n;
	sites_ = static_cast<std::size_t>(n) * n * n;
	strides_ = {1, static_cast<std::size_t>(n), static_cast<std::size_t>(n) * n};
}

void requireSameGrid(const Grid &a, const Grid &b, const char *what)
{
	if (!(a == b))
		throw Error(ErrorKind::GridMismatch, std::string(what) + ": fields live on different grids");
}

double pairwiseSum(std::span<const double> values)
{
	constexpr std::size_t kBlock = 64;
	if (values.size() <= kBlock) {
		double s = 0.0;
		for (double v : values)
			s += v;
		return s;
	}
	const std::size_t half = values.size() / 2;
	return pairwiseSum(values.first(half)) + pairwiseSum(values.subspan(half));
}

namespace {

template <typename T>
std::vector<T> centralDiff(const Grid &grid, std::span<const T> f, int axis)
{
	if (axis < 0 || axis > 2)
		throw Error(ErrorKind::InvalidArgument, "axis must be 0, 1 or 2");
	if (f.size() != grid.sites())
		throw Error(ErrorKind::GridMismatch, "diff: array size does not match grid");
	const double inv = 1.0 / (2.0 * grid.h());
	std::vector<T> out(f.size());
	for (std::size_t s = 0; s < f.size(); ++s) {
		T v = f[grid.neighbor(s, axis, +1)];
		v -= f[grid.neighbor(s, axis, -1)];
		v *= inv;
		out[s] = v;
	}
	return out;
}

} // namespace

std::vector<double> diff(const Grid &grid, std::span<const double> f, int axis)
{
	return centralDiff(grid, f, axis);
}

std::vector<Imag> diff(const Grid &grid, std::span<const Imag> f, int axis)
{
	return centralDiff(grid, f, axis);
}

double integrate(const Grid &grid, std::span<const double> f)
{
	if (f.size() != grid.sites())
		throw Error(ErrorKind::GridMismatch, "integrate: array size does not match grid");
	return pairwiseSum(f) * grid.cellVolume();
}

double integrate(const RealForm<3> &top) { return integrate(top.grid(), top[0]); }

RealForm<3> wedge(const RealForm<1> &a, const RealForm<2> &f)
{
	requireSameGrid(a.grid(), f.grid(), "wedge");
	RealForm<3> out(a.grid());
	for (std::size_t s = 0; s < a.grid().sites(); ++s)
		out[0][s] = a[0][s] * f[0][s] + a[1][s] * f[1][s] + a[2][s] * f[2][s];
	return out;
}

double sliceFlux(const RealForm<2> &f, int axis, int index)
{
	const Grid &g = f.grid();
	if (axis < 0 || axis > 2)
		throw Error(ErrorKind::InvalidArgument, "axis must be 0, 1 or 2");
	if (index < 0 || index >= g.n())
		throw Error(ErrorKind::InvalidArgument, "slice index out of range");
	const int n = g.n();
	std::vector<double> terms(static_cast<std::size_t>(n) * n);
	std::size_t t = 0;
	for (int b = 0; b < n; ++b)
		for (int a = 0; a < n; ++a) {
			std::array<int, 3> c{};
			c[axis] = index;
			c[(axis + 1) % 3] = a;
			c[(axis + 2) % 3] = b;
			terms[t++] = f[axis][g.index(c[0], c[1], c[2])];
		}
	return pairwiseSum(terms) * g.h() * g.h();
}

std::array<double, 3> meanFlux(const RealForm<2> &f)
{
	const Grid &g = f.grid();
	std::array<double, 3> out{};
	for (int c = 0; c < 3; ++c)
		out[c] = pairwiseSum(f[c]) / static_cast<double>(g.sites()) * g.l() * g.l();
	return out;
}

} // namespace faddeev
