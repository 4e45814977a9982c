#pragma once

#include <cmath>

#include "faddeev/error.hpp"

namespace faddeev {

/** Purely imaginary quaternion x i + y j + z k; elements of sp(1) and of S^2 when unit. */
struct Imag {
	double x = 0.0, y = 0.0, z = 0.0;

	constexpr Imag() = default;
	constexpr Imag(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

	constexpr double operator[](int c) const { return c == 0 ? x : (c == 1 ? y : z); }
	double &operator[](int c) { return c == 0 ? x : (c == 1 ? y : z); }

	constexpr Imag &operator+=(const Imag &o) { x += o.x; y += o.y; z += o.z; return *this; }
	constexpr Imag &operator-=(const Imag &o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
	constexpr Imag &operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

constexpr Imag operator+(Imag a, const Imag &b) { return a += b; }
constexpr Imag operator-(Imag a, const Imag &b) { return a -= b; }
constexpr Imag operator-(const Imag &a) { return {-a.x, -a.y, -a.z}; }
constexpr Imag operator*(double s, Imag a) { return a *= s; }
constexpr Imag operator*(Imag a, double s) { return a *= s; }
constexpr Imag operator/(Imag a, double s) { return a *= (1.0 / s); }

constexpr double dot(const Imag &a, const Imag &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Imag cross(const Imag &a, const Imag &b)
{
	return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Imag &a) { return std::sqrt(dot(a, a)); }
/// [p, q] = pq - qp = 2 p x q
constexpr Imag bracket(const Imag &a, const Imag &b) { return 2.0 * cross(a, b); }

struct Quaternion {
	double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

	constexpr Quaternion() = default;
	constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
	constexpr explicit Quaternion(const Imag &v) : w(0.0), x(v.x), y(v.y), z(v.z) {}

	constexpr Imag imag() const { return {x, y, z}; }
	constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
	constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
	double norm() const { return std::sqrt(norm2()); }

	constexpr Quaternion &operator+=(const Quaternion &o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
	constexpr Quaternion &operator-=(const Quaternion &o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }
	constexpr Quaternion &operator*=(double s) { w *= s; x *= s; y *= s; z *= s; return *this; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion &b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion &b) { return a -= b; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion mul(const Quaternion &p, const Quaternion &q)
{
	return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
	        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
	        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
	        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}
constexpr Quaternion operator*(const Quaternion &p, const Quaternion &q) { return mul(p, q); }

/// <p, q> = (p* q + q* p) / 2, the Euclidean dot product on R^4.
constexpr double dot(const Quaternion &p, const Quaternion &q)
{
	return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

/** Element of Sp(1). Construction renormalizes inputs within 1e-9 of the unit sphere and rejects the rest. */
class UnitQuaternion {
public:
	static constexpr double kTolerance = 1e-9;

	constexpr UnitQuaternion() : q_(1.0, 0.0, 0.0, 0.0) {}
	explicit UnitQuaternion(const Quaternion &q);
	UnitQuaternion(double w, double x, double y, double z) : UnitQuaternion(Quaternion(w, x, y, z)) {}

	constexpr const Quaternion &value() const { return q_; }
	constexpr operator const Quaternion &() const { return q_; }
	constexpr double w() const { return q_.w; }
	constexpr double x() const { return q_.x; }
	constexpr double y() const { return q_.y; }
	constexpr double z() const { return q_.z; }

	UnitQuaternion inverse() const { return fromTrusted(q_.conj()); }

	/// Skips the tolerance check; the caller guarantees |q| = 1 up to rounding.
	static UnitQuaternion fromTrusted(const Quaternion &q)
	{
		UnitQuaternion u;
		u.q_ = q;
		return u;
	}

private:
	Quaternion q_;
};

inline UnitQuaternion operator*(const UnitQuaternion &p, const UnitQuaternion &q)
{
	return UnitQuaternion::fromTrusted(mul(p.value(), q.value()));
}

/// Renormalizes a unit imaginary quaternion, rejecting |v| - 1 beyond 1e-9.
Imag unitImag(const Imag &v);

/// e^{v} for imaginary v.
UnitQuaternion expImag(const Imag &v);
/// Principal logarithm: the imaginary v with |v| <= pi and e^{v} = q.
Imag logUnit(const Quaternion &q);

/// u v u*
Imag conjugateBy(const Quaternion &u, const Imag &v);

/// Hopf fibration h(q) = q i q*.
Imag hopf(const Quaternion &q);

enum class LiftChart { Near, Far };

/**
 * A unit quaternion q with q i q* = z. The Near chart (1 - z i)/|1 - z i| is singular
 * only at z = -i; the Far chart (1 + z i) j/|1 + z i| only at z = +i.
 */
UnitQuaternion hopfLift(const Imag &z, LiftChart chart);
/// Chart selected by <z, i> > -1/2.
UnitQuaternion hopfLift(const Imag &z);

/**
 * Gauge map q(z, lambda) = q lambda q* with z = q i q*, for lambda in S^1.
 * Since q (cos t + i sin t) q* = cos t + z sin t the value never depends on the lift.
 */
UnitQuaternion qmap(const Imag &z, const Quaternion &lambda);

/// e^{i t} as an element of S^1.
inline UnitQuaternion circle(double t) { return UnitQuaternion::fromTrusted({std::cos(t), std::sin(t), 0.0, 0.0}); }

inline constexpr Imag kI{1.0, 0.0, 0.0};
inline constexpr Imag kJ{0.0, 1.0, 0.0};
inline constexpr Imag kK{0.0, 0.0, 1.0};

} // namespace faddeev
