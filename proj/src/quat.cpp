#include "faddeev/quat.hpp"

#include <string>

namespace faddeev {

namespace {

// Already-normalized values are kept bit for bit so that repeated loads are stable.
constexpr double kExactSlack = 4e-16;

} // namespace

const char *toString(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	case ErrorKind::GridMismatch: return "GridMismatch";
	case ErrorKind::NonExactForm: return "NonExactForm";
	case ErrorKind::UnresolvableField: return "UnresolvableField";
	case ErrorKind::NonIntegralFlux: return "NonIntegralFlux";
	case ErrorKind::NonIntegralDegree: return "NonIntegralDegree";
	case ErrorKind::NontrivialHolonomy: return "NontrivialHolonomy";
	case ErrorKind::NotFlat: return "NotFlat";
	case ErrorKind::ChargeDrift: return "ChargeDrift";
	case ErrorKind::FluxChange: return "FluxChange";
	case ErrorKind::UnderResolved: return "UnderResolved";
	case ErrorKind::MalformedSnapshot: return "MalformedSnapshot";
	case ErrorKind::Io: return "Io";
	case ErrorKind::Config: return "Config";
	}
	return "Unknown";
}

UnitQuaternion::UnitQuaternion(const Quaternion &q)
{
	const double n = q.norm();
	if (!std::isfinite(n) || std::abs(n - 1.0) > kTolerance)
		throw Error(ErrorKind::InvalidArgument, "quaternion norm " + std::to_string(n) + " is not 1");
	q_ = std::abs(n - 1.0) <= kExactSlack ? q : (1.0 / n) * q;
}

Imag unitImag(const Imag &v)
{
	const double n = norm(v);
	if (!std::isfinite(n) || std::abs(n - 1.0) > UnitQuaternion::kTolerance)
		throw Error(ErrorKind::InvalidArgument, "imaginary quaternion norm " + std::to_string(n) + " is not 1");
	return std::abs(n - 1.0) <= kExactSlack ? v : v / n;
}

UnitQuaternion expImag(const Imag &v)
{
	const double t = norm(v);
	if (t == 0.0)
		return {};
	const double s = std::sin(t) / t;
	Quaternion q(std::cos(t), s * v.x, s * v.y, s * v.z);
	return UnitQuaternion::fromTrusted((1.0 / q.norm()) * q);
}

Imag logUnit(const Quaternion &q)
{
	const Imag v = q.imag();
	const double s = norm(v);
	if (s == 0.0)
		return {};
	const double angle = std::atan2(s, q.w);
	return (angle / s) * v;
}

Imag conjugateBy(const Quaternion &u, const Imag &v)
{
	return mul(mul(u, Quaternion(v)), u.conj()).imag();
}

Imag hopf(const Quaternion &q) { return conjugateBy(q, kI); }

UnitQuaternion hopfLift(const Imag &z, LiftChart chart)
{
	const Quaternion zi = mul(Quaternion(z), Quaternion(kI));
	if (chart == LiftChart::Near) {
		const Quaternion q = Quaternion(1.0, 0.0, 0.0, 0.0) - zi;
		const double n = q.norm();
		if (n < 1e-12)
			throw Error(ErrorKind::InvalidArgument, "near chart is singular at z = -i");
		return UnitQuaternion::fromTrusted((1.0 / n) * q);
	}
	const Quaternion q = Quaternion(1.0, 0.0, 0.0, 0.0) + zi;
	const double n = q.norm();
	if (n < 1e-12)
		throw Error(ErrorKind::InvalidArgument, "far chart is singular at z = +i");
	return UnitQuaternion::fromTrusted((1.0 / n) * mul(q, Quaternion(kJ)));
}

UnitQuaternion hopfLift(const Imag &z)
{
	return hopfLift(z, dot(z, kI) > -0.5 ? LiftChart::Near : LiftChart::Far);
}

UnitQuaternion qmap(const Imag &z, const Quaternion &lambda)
{
	if (std::abs(lambda.y) > UnitQuaternion::kTolerance || std::abs(lambda.z) > UnitQuaternion::kTolerance)
		throw Error(ErrorKind::InvalidArgument, "qmap expects lambda in S^1 (zero j, k parts)");
	const Imag zu = unitImag(z);
	const UnitQuaternion l(Quaternion(lambda.w, lambda.x, 0.0, 0.0));
	return UnitQuaternion::fromTrusted({l.w(), l.x() * zu.x, l.x() * zu.y, l.x() * zu.z});
}

} // namespace faddeev
