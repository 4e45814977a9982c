#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "faddeev/quat.hpp"

using namespace faddeev;

namespace {

const Quaternion kOne(1, 0, 0, 0);
const Quaternion kQi(0, 1, 0, 0), kQj(0, 0, 1, 0), kQk(0, 0, 0, 1);

double dist(const Quaternion &a, const Quaternion &b) { return (a - b).norm(); }
double dist(const Imag &a, const Imag &b) { return norm(a - b); }

UnitQuaternion randomUnit(std::mt19937_64 &rng)
{
	std::normal_distribution<double> N;
	const Quaternion q(N(rng), N(rng), N(rng), N(rng));
	return UnitQuaternion((1.0 / q.norm()) * q);
}

Imag randomUnitImag(std::mt19937_64 &rng)
{
	std::normal_distribution<double> N;
	const Imag v{N(rng), N(rng), N(rng)};
	return v / norm(v);
}

} // namespace

TEST_CASE("multiplication table")
{
	CHECK(dist(mul(kQi, kQj), kQk) == 0.0);
	CHECK(dist(mul(kQj, kQk), kQi) == 0.0);
	CHECK(dist(mul(kQk, kQi), kQj) == 0.0);
	CHECK(dist(mul(kQi, kQi), -1.0 * kOne) == 0.0);
	const Quaternion q(0.3, -1.2, 0.5, 2.0);
	CHECK(dist(mul(kOne, q), q) == 0.0);
	CHECK(dist(mul(q, kOne), q) == 0.0);
}

TEST_CASE("dot is the real part of p* q")
{
	CHECK(dot(kQi, kQi) == 1.0);
	CHECK(dot(kQi, kQj) == 0.0);
	CHECK(dot(Quaternion(1, 1, 0, 0), Quaternion(1, -1, 0, 0)) == 0.0);
	const Quaternion p(0.2, 0.7, -0.1, 0.4), q(-1.0, 0.3, 0.9, 0.25);
	CHECK(dot(p, q) == doctest::Approx(mul(p.conj(), q).w).epsilon(1e-15));
}

TEST_CASE("imaginary products")
{
	std::mt19937_64 rng(7);
	for (int t = 0; t < 50; ++t) {
		const Imag p = 1.3 * randomUnitImag(rng), q = 0.6 * randomUnitImag(rng);
		const Quaternion pq = mul(Quaternion(p), Quaternion(q));
		const Quaternion qp = mul(Quaternion(q), Quaternion(p));
		CHECK(pq.w == doctest::Approx(-dot(p, q)).epsilon(1e-14));
		CHECK(dist((pq - qp).imag(), bracket(p, q)) < 1e-14);
	}
}

TEST_CASE("unit construction")
{
	CHECK_NOTHROW(UnitQuaternion(1.0 + 5e-10, 0, 0, 0));
	CHECK_ERROR(UnitQuaternion(1.1, 0, 0, 0), ErrorKind::InvalidArgument);
	CHECK(UnitQuaternion(1.0 + 5e-10, 0, 0, 0).w() == 1.0);
	CHECK_ERROR(unitImag({0.5, 0, 0}), ErrorKind::InvalidArgument);
}

TEST_CASE("hopf map")
{
	CHECK(dist(hopf(kOne), kI) == 0.0);
	CHECK(dist(hopf((1.0 / std::sqrt(2.0)) * Quaternion(1, 0, 0, 1)), kJ) < 1e-15);
	for (double alpha : {0.0, 0.4, 1.7, 3.0, -2.2})
		CHECK(dist(hopf(circle(alpha)), kI) < 1e-15);
}

TEST_CASE("hopf lifts")
{
	std::mt19937_64 rng(11);
	for (int t = 0; t < 100; ++t) {
		const Imag z = randomUnitImag(rng);
		CHECK(dist(hopf(hopfLift(z)), z) < 1e-13);
		if (dot(z, kI) > -0.9)
			CHECK(dist(hopf(hopfLift(z, LiftChart::Near)), z) < 1e-13);
		if (dot(z, kI) < 0.9)
			CHECK(dist(hopf(hopfLift(z, LiftChart::Far)), z) < 1e-13);
	}
	CHECK(dist(hopf(hopfLift(-1.0 * kI)), -1.0 * kI) < 1e-15);
}

TEST_CASE("qmap")
{
	const Quaternion lam = circle(0.8);
	CHECK(dist(qmap(kI, lam), lam) < 1e-15);
	std::mt19937_64 rng(3);
	for (int t = 0; t < 20; ++t)
		CHECK(dist(qmap(randomUnitImag(rng), kOne), kOne) == 0.0);

	// both lift charts give the same value
	const Quaternion viaNear = mul(mul(hopfLift(kJ, LiftChart::Near), kQi), hopfLift(kJ, LiftChart::Near).inverse());
	const Quaternion viaFar = mul(mul(hopfLift(kJ, LiftChart::Far), kQi), hopfLift(kJ, LiftChart::Far).inverse());
	const Quaternion q = (1.0 / std::sqrt(2.0)) * Quaternion(1, 0, 0, 1);
	const Quaternion direct = mul(mul(q, kQi), q.conj());
	CHECK(dist(viaNear, viaFar) < 1e-15);
	CHECK(dist(qmap(kJ, kQi), direct) < 1e-15);
	CHECK(dist(qmap(kJ, kQi), viaNear) < 1e-15);

	for (int t = 0; t < 50; ++t) {
		const Imag z = randomUnitImag(rng);
		const Quaternion lambda = circle(6.0 * t / 50.0);
		const Quaternion q1 = hopfLift(z, LiftChart::Near), q2 = hopfLift(z, LiftChart::Far);
		const Quaternion v = qmap(z, lambda);
		if (dot(z, kI) > -0.9)
			CHECK(dist(v, mul(mul(q1, lambda), q1.conj())) < 1e-13);
		if (dot(z, kI) < 0.9)
			CHECK(dist(v, mul(mul(q2, lambda), q2.conj())) < 1e-13);
		// q(z, lambda) commutes with z
		CHECK(dist(conjugateBy(v, z), z) < 1e-14);
	}
}

TEST_CASE("conjugation")
{
	CHECK(dist(conjugateBy(kOne, kJ), kJ) == 0.0);
	CHECK(dist(conjugateBy(kQi, kJ), -1.0 * kJ) == 0.0);
	std::mt19937_64 rng(5);
	for (int t = 0; t < 100; ++t) {
		const UnitQuaternion u = randomUnit(rng);
		const Imag v = 2.5 * randomUnitImag(rng);
		CHECK(std::abs(norm(conjugateBy(u, v)) - norm(v)) < 1e-12);
	}
}

TEST_CASE("exp and log")
{
	std::mt19937_64 rng(9);
	for (int t = 0; t < 100; ++t) {
		const Imag v = (0.03 * t) * randomUnitImag(rng);
		CHECK(dist(logUnit(expImag(v)), v) < 1e-13);
		const UnitQuaternion u = randomUnit(rng);
		CHECK(dist(expImag(logUnit(u)).value(), u.value()) < 1e-13);
	}
	CHECK(dist(expImag(Imag{M_PI / 2, 0, 0}).value(), kQi) < 1e-15);
}
