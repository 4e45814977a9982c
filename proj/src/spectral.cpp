#include <complex>
#include <map>
#include <mutex>

#include <fftw3.h>

#include "faddeev/lattice.hpp"

namespace faddeev {

namespace {

using Complex = std::complex<double>;
using Spectrum = std::vector<Complex>;
constexpr Complex kI1{0.0, 1.0};

struct Plans {
	fftw_plan forward;
	fftw_plan backward;
};

// Plan creation is not thread safe in FFTW; execution with the new-array interface is.
Plans plansFor(int n)
{
	static std::mutex mutex;
	static std::map<int, Plans> cache;
	std::lock_guard<std::mutex> lock(mutex);
	auto it = cache.find(n);
	if (it != cache.end())
		return it->second;
	const std::size_t size = static_cast<std::size_t>(n) * n * n;
	auto *a = static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * size));
	auto *b = static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * size));
	const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
	Plans p{fftw_plan_dft_3d(n, n, n, a, b, FFTW_FORWARD, flags),
	        fftw_plan_dft_3d(n, n, n, a, b, FFTW_BACKWARD, flags)};
	fftw_free(a);
	fftw_free(b);
	cache.emplace(n, p);
	return p;
}

Spectrum forward(const Grid &g, std::span<const double> f)
{
	Spectrum in(f.begin(), f.end());
	Spectrum out(in.size());
	fftw_execute_dft(plansFor(g.n()).forward, reinterpret_cast<fftw_complex *>(in.data()),
	                 reinterpret_cast<fftw_complex *>(out.data()));
	return out;
}

std::vector<double> backward(const Grid &g, Spectrum in)
{
	Spectrum out(in.size());
	fftw_execute_dft(plansFor(g.n()).backward, reinterpret_cast<fftw_complex *>(in.data()),
	                 reinterpret_cast<fftw_complex *>(out.data()));
	std::vector<double> r(out.size());
	const double scale = 1.0 / static_cast<double>(out.size());
	for (std::size_t s = 0; s < out.size(); ++s)
		r[s] = out[s].real() * scale;
	return r;
}

/// Angular wavenumbers per index along one axis, Nyquist dropped.
std::vector<double> wavenumbers(const Grid &g)
{
	const int n = g.n();
	std::vector<double> k(n);
	for (int m = 0; m < n; ++m) {
		const int mm = m <= n / 2 ? m : m - n;
		k[m] = (n % 2 == 0 && m == n / 2) ? 0.0 : 2.0 * M_PI * mm / g.l();
	}
	return k;
}

template <typename F>
void forEachMode(const Grid &g, F &&fn)
{
	const auto k = wavenumbers(g);
	const int n = g.n();
	std::size_t s = 0;
	for (int z = 0; z < n; ++z)
		for (int y = 0; y < n; ++y)
			for (int x = 0; x < n; ++x, ++s)
				fn(s, std::array<double, 3>{k[x], k[y], k[z]});
}

double norm2(const std::array<double, 3> &k) { return k[0] * k[0] + k[1] * k[1] + k[2] * k[2]; }

template <int K>
std::array<Spectrum, RealForm<K>::kComponents> transform(const RealForm<K> &f)
{
	std::array<Spectrum, RealForm<K>::kComponents> out;
	for (int c = 0; c < RealForm<K>::kComponents; ++c)
		out[c] = forward(f.grid(), f[c]);
	return out;
}

/// i k x A for a 3-component spectrum.
std::array<Spectrum, 3> curlHat(const Grid &g, const std::array<Spectrum, 3> &a)
{
	std::array<Spectrum, 3> out;
	for (auto &c : out)
		c.assign(g.sites(), Complex{});
	forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) {
		for (int c = 0; c < 3; ++c) {
			const int p = (c + 1) % 3, q = (c + 2) % 3;
			out[c][s] = kI1 * (k[p] * a[q][s] - k[q] * a[p][s]);
		}
	});
	return out;
}

} // namespace

std::vector<double> spectralDiff(const Grid &grid, std::span<const double> f, int axis)
{
	if (axis < 0 || axis > 2)
		throw Error(ErrorKind::InvalidArgument, "axis must be 0, 1 or 2");
	Spectrum hat = forward(grid, f);
	forEachMode(grid, [&](std::size_t s, const std::array<double, 3> &k) { hat[s] *= kI1 * k[axis]; });
	return backward(grid, std::move(hat));
}

std::vector<double> spectralShift(const Grid &grid, std::span<const double> f, const std::array<double, 3> &delta)
{
	Spectrum hat = forward(grid, f);
	const double h = grid.h();
	forEachMode(grid, [&](std::size_t s, const std::array<double, 3> &k) {
		hat[s] *= std::polar(1.0, h * (k[0] * delta[0] + k[1] * delta[1] + k[2] * delta[2]));
	});
	return backward(grid, std::move(hat));
}

RealForm<1> d(const RealForm<0> &f)
{
	const Grid &g = f.grid();
	const Spectrum hat = forward(g, f[0]);
	RealForm<1> out(g);
	for (int c = 0; c < 3; ++c) {
		Spectrum t(g.sites());
		forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) { t[s] = kI1 * k[c] * hat[s]; });
		out[c] = backward(g, std::move(t));
	}
	return out;
}

RealForm<2> d(const RealForm<1> &a)
{
	const Grid &g = a.grid();
	auto curl = curlHat(g, transform(a));
	RealForm<2> out(g);
	for (int c = 0; c < 3; ++c)
		out[c] = backward(g, std::move(curl[c]));
	return out;
}

RealForm<3> d(const RealForm<2> &f)
{
	const Grid &g = f.grid();
	const auto hat = transform(f);
	Spectrum t(g.sites());
	forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) {
		t[s] = kI1 * (k[0] * hat[0][s] + k[1] * hat[1][s] + k[2] * hat[2][s]);
	});
	RealForm<3> out(g);
	out[0] = backward(g, std::move(t));
	return out;
}

RealForm<0> codiff(const RealForm<1> &a)
{
	const Grid &g = a.grid();
	const auto hat = transform(a);
	Spectrum t(g.sites());
	forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) {
		t[s] = -kI1 * (k[0] * hat[0][s] + k[1] * hat[1][s] + k[2] * hat[2][s]);
	});
	RealForm<0> out(g);
	out[0] = backward(g, std::move(t));
	return out;
}

RealForm<1> codiff(const RealForm<2> &f)
{
	const Grid &g = f.grid();
	auto curl = curlHat(g, transform(f));
	RealForm<1> out(g);
	for (int c = 0; c < 3; ++c)
		out[c] = backward(g, std::move(curl[c]));
	return out;
}

RealForm<2> codiff(const RealForm<3> &top)
{
	const Grid &g = top.grid();
	const Spectrum hat = forward(g, top[0]);
	RealForm<2> out(g);
	for (int c = 0; c < 3; ++c) {
		Spectrum t(g.sites());
		forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) { t[s] = -kI1 * k[c] * hat[s]; });
		out[c] = backward(g, std::move(t));
	}
	return out;
}

double closednessDefect(const RealForm<2> &f)
{
	const Grid &g = f.grid();
	const auto hat = transform(f);
	std::vector<double> num(g.sites()), den(g.sites());
	forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) {
		num[s] = std::norm(k[0] * hat[0][s] + k[1] * hat[1][s] + k[2] * hat[2][s]);
		den[s] = norm2(k) * (std::norm(hat[0][s]) + std::norm(hat[1][s]) + std::norm(hat[2][s]));
	});
	const double d2 = pairwiseSum(den);
	return d2 > 0.0 ? std::sqrt(pairwiseSum(num) / d2) : 0.0;
}

RealForm<1> solveAlpha(const RealForm<2> &f, const SolveAlphaOptions &opts)
{
	const Grid &g = f.grid();
	const auto flux = meanFlux(f);
	for (int c = 0; c < 3; ++c)
		if (std::abs(flux[c]) > opts.maxFlux)
			throw Error(ErrorKind::NonExactForm, "2-form has flux " + std::to_string(flux[c]) + " along axis " +
			                                         std::to_string(c + 1));
	const double defect = closednessDefect(f);
	if (defect > opts.maxClosednessDefect)
		throw Error(ErrorKind::NonExactForm, "2-form is not closed (defect " + std::to_string(defect) + ")");

	auto curl = curlHat(g, transform(f));
	forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) {
		const double k2 = norm2(k);
		for (int c = 0; c < 3; ++c)
			curl[c][s] = k2 > 0.0 ? curl[c][s] / k2 : Complex{};
	});
	RealForm<1> alpha(g);
	for (int c = 0; c < 3; ++c)
		alpha[c] = backward(g, std::move(curl[c]));
	return alpha;
}

HodgeSplit hodgeSplit(const RealForm<1> &omega)
{
	const Grid &g = omega.grid();
	const auto hat = transform(omega);
	std::array<Spectrum, 3> exact;
	for (auto &c : exact)
		c.assign(g.sites(), Complex{});
	Spectrum theta(g.sites());
	forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) {
		const double k2 = norm2(k);
		if (k2 == 0.0)
			return;
		const Complex kw = k[0] * hat[0][s] + k[1] * hat[1][s] + k[2] * hat[2][s];
		for (int c = 0; c < 3; ++c)
			exact[c][s] = k[c] * kw / k2;
		theta[s] = -kI1 * kw / k2;
	});

	HodgeSplit out{RealForm<1>(g), RealForm<1>(g), {}, RealForm<0>(g)};
	for (int c = 0; c < 3; ++c) {
		out.mean[c] = pairwiseSum(omega[c]) / static_cast<double>(g.sites());
		out.exact[c] = backward(g, std::move(exact[c]));
		for (std::size_t s = 0; s < g.sites(); ++s)
			out.coexact[c][s] = omega[c][s] - out.exact[c][s] - out.mean[c];
	}
	out.potential[0] = backward(g, std::move(theta));
	const double base = out.potential[0][0];
	for (double &v : out.potential[0])
		v -= base;
	return out;
}

RealForm<0> centralPotential(const RealForm<1> &omega)
{
	const Grid &g = omega.grid();
	const auto hat = transform(omega);
	Spectrum theta(g.sites());
	const double h = g.h();
	forEachMode(g, [&](std::size_t s, const std::array<double, 3> &k) {
		double kk = 0.0;
		for (int c = 0; c < 3; ++c)
			kk += k[c] * std::sin(k[c] * h) / h;
		if (kk <= 0.0)
			return;
		theta[s] = kI1 * (k[0] * hat[0][s] + k[1] * hat[1][s] + k[2] * hat[2][s]) / kk;
	});
	RealForm<0> out(g);
	out[0] = backward(g, std::move(theta));
	const double base = out[0][0];
	for (double &v : out[0])
		v -= base;
	return out;
}

} // namespace faddeev
