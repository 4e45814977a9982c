#pragma once

#include <array>
#include <span>
#include <vector>

#include "faddeev/lattice.hpp"
#include "faddeev/quat.hpp"

namespace faddeev {

/// Map M -> S^2 sampled at lattice sites; values are unit imaginary quaternions.
class SphereField {
public:
	/// Values within 1e-9 of unit length are renormalized, others rejected.
	SphereField(const Grid &grid, std::vector<Imag> values);
	static SphereField constant(const Grid &grid, const Imag &value);

	const Grid &grid() const { return grid_; }
	std::span<const Imag> values() const { return values_; }
	const Imag &operator[](std::size_t site) const { return values_[site]; }

private:
	Grid grid_;
	std::vector<Imag> values_;
};

/// Map M -> Sp(1) sampled at lattice sites.
class GroupField {
public:
	GroupField(const Grid &grid, std::vector<Quaternion> values);
	static GroupField constant(const Grid &grid, const Quaternion &value);

	const Grid &grid() const { return grid_; }
	std::span<const Quaternion> values() const { return values_; }
	const Quaternion &operator[](std::size_t site) const { return values_[site]; }

private:
	Grid grid_;
	std::vector<Quaternion> values_;
};

/**
 * sp(1)-valued 1-form stored on lattice edges: edge(mu)[x] is the generator of the
 * transport exp(h A) along the edge x -> x + h e_mu. Pointwise formulas use the
 * collocated value at(mu, x) = (A_mu(x) + A_mu(x - e_mu)) / 2.
 */
class Connection {
public:
	explicit Connection(const Grid &grid);
	Connection(const Grid &grid, std::array<std::vector<Imag>, 3> edges);

	const Grid &grid() const { return grid_; }
	std::vector<Imag> &edge(int mu) { return edges_[mu]; }
	const std::vector<Imag> &edge(int mu) const { return edges_[mu]; }

	Imag at(int mu, std::size_t site) const
	{
		return 0.5 * (edges_[mu][site] + edges_[mu][grid_.neighbor(site, mu, -1)]);
	}
	/// Edge transport exp(h A_mu(x)).
	UnitQuaternion transport(int mu, std::size_t site) const { return expImag(grid_.h() * edges_[mu][site]); }
	QuatForm<1> collocated() const;

private:
	Grid grid_;
	std::array<std::vector<Imag>, 3> edges_;
};

struct Energy {
	double e2 = 0.0;
	double e4 = 0.0;
	double total = 0.0;
};

/// psi(x) = u(x) phi(x) u(x)*.
SphereField conjugateField(const GroupField &u, const SphereField &phi);

/// Signed area of the geodesic triangle (a, b, c) on the unit sphere.
double triangleArea(const Imag &a, const Imag &b, const Imag &c);

/**
 * psi^* omega for omega = -(1/8 pi) Re(z dz ^ dz), the area form of total mass 1.
 * Each plaquette carries the signed area of its geodesic quadrilateral image / 4 pi h^2,
 * so slice sums are exactly the integer mapping degrees of the slices; the plaquette
 * values are translated spectrally from the plaquette centres to the sites.
 */
RealForm<2> pullbackArea(const SphereField &psi);

/**
 * Discrete Faddeev energy on the nearest-neighbour stencil with forward and backward
 * differences D+ and D-:
 * e2 = sum_x sum_mu |D+_mu psi|^2 h^3,
 * e4 = sum_x sum_{mu<nu} (1/4) sum_{s,t = +,-} |D^s_mu psi x D^t_nu psi|^2 h^3.
 * Averaging the four pairings keeps the quartic term second-order accurate.
 */
Energy energy(const SphereField &psi);

/// Per-site energy density terms for a frame of three derivative vectors.
inline std::array<double, 2> energyDensity(const std::array<Imag, 3> &dpsi)
{
	const double quad = dot(dpsi[0], dpsi[0]) + dot(dpsi[1], dpsi[1]) + dot(dpsi[2], dpsi[2]);
	const Imag c01 = cross(dpsi[0], dpsi[1]), c12 = cross(dpsi[1], dpsi[2]), c20 = cross(dpsi[2], dpsi[0]);
	return {quad, dot(c01, c01) + dot(c12, c12) + dot(c20, c20)};
}

/// Per-site stencil density from forward and backward differences.
inline std::array<double, 2> stencilDensity(const std::array<Imag, 3> &fwd, const std::array<Imag, 3> &bwd)
{
	const double quad = dot(fwd[0], fwd[0]) + dot(fwd[1], fwd[1]) + dot(fwd[2], fwd[2]);
	double quart = 0.0;
	for (int mu = 0; mu < 3; ++mu)
		for (int nu = mu + 1; nu < 3; ++nu)
			for (const Imag &a : {fwd[mu], bwd[mu]})
				for (const Imag &b : {fwd[nu], bwd[nu]}) {
					const Imag c = cross(a, b);
					quart += 0.25 * dot(c, c);
				}
	return {quad, quart};
}

/**
 * Connection a = u* du via edge logarithms A_mu(x) = log(u(x)* u(x + e_mu)) / h.
 * Throws UnresolvableField when some neighbours satisfy <u(x), u(x + e_mu)> <= 0.
 */
Connection connectionOf(const GroupField &u);

/// D_a phi = d phi + [a, phi], central differences and collocated a.
QuatForm<1> covariantDerivative(const Connection &a, const SphereField &phi);

/// E_phi[a]: the energy density with d psi replaced by D_a phi, central differences and collocated a.
Energy energyConn(const SphereField &phi, const Connection &a);

struct Decomposition {
	RealForm<1> longitudinal; ///< <a, phi>
	QuatForm<1> tangential;   ///< phi [a, phi] / 2
};
Decomposition decompose(const Connection &a, const SphereField &phi);

struct FlatnessResiduals {
	double full = 0.0; ///< L^2 norm of the plaquette curvature log(P)/h^2
	double eq1 = 0.0;  ///< phi-component of da + a ^ a in decomposed form
	double eq2 = 0.0;  ///< tangential equation d(phi[a,phi]/2) = <a,phi> ^ D_a phi + (d phi ^ [a,phi] + [a,phi] ^ d phi)/4
};
FlatnessResiduals flatnessResiduals(const Connection &a, const SphereField &phi);

/// Largest |P - 1| over all elementary plaquettes P = U_mu(x) U_nu(x+mu) U_mu(x+nu)* U_nu(x)*.
double maxPlaquetteDefect(const Connection &a);

} // namespace faddeev
