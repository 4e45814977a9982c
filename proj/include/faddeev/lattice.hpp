#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "faddeev/error.hpp"
#include "faddeev/quat.hpp"

namespace faddeev {

/**
 * Periodic cubic lattice on the flat torus [0, l)^3 with n sites per axis.
 * Sites are stored x-fastest: index = (z n + y) n + x; site (x, y, z) sits at h (x, y, z).
 */
class Grid {
public:
	Grid(int n, double l);

	int n() const { return n_; }
	double l() const { return l_; }
	double h() const { return h_; }
	std::size_t sites() const { return sites_; }
	double cellVolume() const { return h_ * h_ * h_; }

	std::size_t index(int x, int y, int z) const
	{
		return (static_cast<std::size_t>(wrap(z)) * n_ + wrap(y)) * n_ + wrap(x);
	}
	std::array<int, 3> coords(std::size_t site) const
	{
		return {static_cast<int>(site % n_), static_cast<int>((site / n_) % n_),
		        static_cast<int>(site / (static_cast<std::size_t>(n_) * n_))};
	}
	/// Site reached by one step (+1 or -1) along axis 0, 1 or 2, with periodic wraparound.
	std::size_t neighbor(std::size_t site, int axis, int step) const
	{
		const std::size_t stride = strides_[axis];
		const int c = static_cast<int>((site / stride) % n_);
		if (step > 0)
			return c == n_ - 1 ? site - (n_ - 1) * stride : site + stride;
		return c == 0 ? site + (n_ - 1) * stride : site - stride;
	}
	int wrap(int i) const { return ((i % n_) + n_) % n_; }

	bool operator==(const Grid &o) const { return n_ == o.n_ && l_ == o.l_; }

private:
	int n_;
	double l_;
	double h_;
	std::size_t sites_;
	std::array<std::size_t, 3> strides_;
};

/// Throws GridMismatch unless both grids are identical.
void requireSameGrid(const Grid &a, const Grid &b, const char *what);

/**
 * Real-valued k-form on the lattice, collocated at sites. 1-forms store the dx^c
 * coefficients; 2-forms store the dx^{c+1} ^ dx^{c+2} coefficient (indices mod 3)
 * in component c, so component c is the flux density through planes normal to axis c.
 */
template <int K>
class RealForm {
	static_assert(K >= 0 && K <= 3);

public:
	static constexpr int kComponents = (K == 0 || K == 3) ? 1 : 3;

	explicit RealForm(const Grid &grid) : grid_(grid)
	{
		for (auto &c : comp_)
			c.assign(grid.sites(), 0.0);
	}

	const Grid &grid() const { return grid_; }
	std::vector<double> &operator[](int c) { return comp_[c]; }
	const std::vector<double> &operator[](int c) const { return comp_[c]; }

	RealForm &operator+=(const RealForm &o)
	{
		for (int c = 0; c < kComponents; ++c)
			for (std::size_t s = 0; s < comp_[c].size(); ++s)
				comp_[c][s] += o.comp_[c][s];
		return *this;
	}
	RealForm &operator-=(const RealForm &o)
	{
		for (int c = 0; c < kComponents; ++c)
			for (std::size_t s = 0; s < comp_[c].size(); ++s)
				comp_[c][s] -= o.comp_[c][s];
		return *this;
	}
	RealForm &operator*=(double f)
	{
		for (auto &c : comp_)
			for (auto &v : c)
				v *= f;
		return *this;
	}

private:
	Grid grid_;
	std::array<std::vector<double>, kComponents> comp_;
};

template <int K>
RealForm<K> operator+(RealForm<K> a, const RealForm<K> &b) { return a += b; }
template <int K>
RealForm<K> operator-(RealForm<K> a, const RealForm<K> &b) { return a -= b; }

/// Imaginary-quaternion-valued k-form, same layout as RealForm.
template <int K>
class QuatForm {
	static_assert(K >= 0 && K <= 3);

public:
	static constexpr int kComponents = (K == 0 || K == 3) ? 1 : 3;

	explicit QuatForm(const Grid &grid) : grid_(grid)
	{
		for (auto &c : comp_)
			c.assign(grid.sites(), Imag{});
	}

	const Grid &grid() const { return grid_; }
	std::vector<Imag> &operator[](int c) { return comp_[c]; }
	const std::vector<Imag> &operator[](int c) const { return comp_[c]; }

private:
	Grid grid_;
	std::array<std::vector<Imag>, kComponents> comp_;
};

using ScalarField = RealForm<0>;

/// Fixed-order pairwise summation.
double pairwiseSum(std::span<const double> values);

/// Central difference (f(x + h e) - f(x - h e)) / 2h along axis 0..2, periodic.
std::vector<double> diff(const Grid &grid, std::span<const double> f, int axis);
std::vector<Imag> diff(const Grid &grid, std::span<const Imag> f, int axis);

/// Quadrature sum f h^3.
double integrate(const Grid &grid, std::span<const double> f);
double integrate(const RealForm<3> &top);

/// L^2 pairing sum_c sum_x a_c b_c h^3.
template <int K>
double inner(const RealForm<K> &a, const RealForm<K> &b)
{
	requireSameGrid(a.grid(), b.grid(), "inner");
	std::vector<double> terms(a.grid().sites() * RealForm<K>::kComponents);
	std::size_t t = 0;
	for (int c = 0; c < RealForm<K>::kComponents; ++c)
		for (std::size_t s = 0; s < a.grid().sites(); ++s)
			terms[t++] = a[c][s] * b[c][s];
	return pairwiseSum(terms) * a.grid().cellVolume();
}

template <int K>
double normL2(const RealForm<K> &a)
{
	return std::sqrt(inner(a, a));
}

template <int K>
double normL2(const QuatForm<K> &a)
{
	std::vector<double> terms;
	terms.reserve(a.grid().sites() * QuatForm<K>::kComponents);
	for (int c = 0; c < QuatForm<K>::kComponents; ++c)
		for (const Imag &v : a[c])
			terms.push_back(dot(v, v));
	return std::sqrt(pairwiseSum(terms) * a.grid().cellVolume());
}

/// Pointwise wedge of a 1-form with a 2-form: sum_c a_c F_c dx^1 ^ dx^2 ^ dx^3.
RealForm<3> wedge(const RealForm<1> &a, const RealForm<2> &f);

/// Flux of a 2-form through the coordinate 2-torus {x_axis = index h}: sum of F_axis h^2.
double sliceFlux(const RealForm<2> &f, int axis, int index);

/// Per-axis flux averaged over all slices, l^2 mean(F_axis).
std::array<double, 3> meanFlux(const RealForm<2> &f);

// Spectral (Fourier multiplier) exterior calculus. Derivative multipliers i k use the
// integer wavenumbers in (-n/2, n/2]; the Nyquist mode is dropped so real forms stay real.

/// Spectral partial derivative of a scalar array along axis.
std::vector<double> spectralDiff(const Grid &grid, std::span<const double> f, int axis);

/// Band-limited translate f(x + delta h), delta in cell units per axis.
std::vector<double> spectralShift(const Grid &grid, std::span<const double> f, const std::array<double, 3> &delta);

RealForm<1> d(const RealForm<0> &f);
RealForm<2> d(const RealForm<1> &a);
RealForm<3> d(const RealForm<2> &f);
RealForm<0> codiff(const RealForm<1> &a);
RealForm<1> codiff(const RealForm<2> &f);
RealForm<2> codiff(const RealForm<3> &g);

/// Relative failure of closedness |dF| / |grad F| measured spectrally; 0 for closed F.
double closednessDefect(const RealForm<2> &f);

struct SolveAlphaOptions {
	double maxFlux = 0.5;
	double maxClosednessDefect = 0.1;
};

/**
 * The coclosed 1-form alpha = delta Laplacian^{-1} F with zero harmonic part, so that
 * d alpha equals the closed, flux-free part of F. Throws NonExactForm when F carries a
 * flux beyond opts.maxFlux or is not closed to opts.maxClosednessDefect.
 */
RealForm<1> solveAlpha(const RealForm<2> &f, const SolveAlphaOptions &opts = {});

/// Spectral Hodge splitting of a 1-form: omega = exact + coexact + mean.
struct HodgeSplit {
	RealForm<1> exact;
	RealForm<1> coexact;
	std::array<double, 3> mean;
	RealForm<0> potential; ///< theta with d theta = exact and theta(0) = 0
};
HodgeSplit hodgeSplit(const RealForm<1> &omega);

/**
 * theta with theta(0) = 0 such that omega + D theta is spectrally coclosed, where D is the
 * central difference. Used to remove exact parts through lattice gauge transformations.
 */
RealForm<0> centralPotential(const RealForm<1> &omega);

} // namespace faddeev
