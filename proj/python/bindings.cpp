// Python bindings. Fields cross the boundary as float64 arrays of shape (n, n, n, c)
// indexed [z, y, x, component], which matches the x-fastest site order.

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>

#include "faddeev/ansatz.hpp"
#include "faddeev/flow.hpp"
#include "faddeev/gauge.hpp"
#include "faddeev/invariants.hpp"
#include "faddeev/snapshot.hpp"

namespace py = pybind11;
using namespace faddeev;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

int sideOf(const Array &a, py::ssize_t comps)
{
	if (a.ndim() != 4 || a.shape(0) != a.shape(1) || a.shape(1) != a.shape(2) || a.shape(3) != comps)
		throw Error(ErrorKind::InvalidArgument, "expected an array of shape (n, n, n, " + std::to_string(comps) + ")");
	return static_cast<int>(a.shape(0));
}

SphereField toSphere(const Array &a, double l)
{
	const Grid g(sideOf(a, 3), l);
	const double *p = a.data();
	std::vector<Imag> v(g.sites());
	for (std::size_t s = 0; s < v.size(); ++s)
		v[s] = Imag{p[3 * s], p[3 * s + 1], p[3 * s + 2]};
	return SphereField(g, std::move(v));
}

GroupField toGroup(const Array &a, double l)
{
	const Grid g(sideOf(a, 4), l);
	const double *p = a.data();
	std::vector<Quaternion> v(g.sites());
	for (std::size_t s = 0; s < v.size(); ++s)
		v[s] = Quaternion(p[4 * s], p[4 * s + 1], p[4 * s + 2], p[4 * s + 3]);
	return GroupField(g, std::move(v));
}

Array newArray(int n, py::ssize_t comps)
{
	return Array({py::ssize_t(n), py::ssize_t(n), py::ssize_t(n), comps});
}

Array fromSphere(const SphereField &f)
{
	Array out = newArray(f.grid().n(), 3);
	double *p = out.mutable_data();
	for (std::size_t s = 0; s < f.grid().sites(); ++s) {
		p[3 * s] = f[s].x;
		p[3 * s + 1] = f[s].y;
		p[3 * s + 2] = f[s].z;
	}
	return out;
}

Array fromGroup(const GroupField &f)
{
	Array out = newArray(f.grid().n(), 4);
	double *p = out.mutable_data();
	for (std::size_t s = 0; s < f.grid().sites(); ++s) {
		p[4 * s] = f[s].w;
		p[4 * s + 1] = f[s].x;
		p[4 * s + 2] = f[s].y;
		p[4 * s + 3] = f[s].z;
	}
	return out;
}

py::dict energyDict(const Energy &e)
{
	py::dict d;
	d["e2"] = e.e2;
	d["e4"] = e.e4;
	d["total"] = e.total;
	return d;
}

py::dict rowDict(const TraceRow &r)
{
	py::dict d;
	d["iter"] = r.iteration;
	d["e2"] = r.energy.e2;
	d["e4"] = r.energy.e4;
	d["energy"] = r.energy.total;
	d["grad_norm"] = r.gradNorm;
	d["fluxes"] = r.fluxes;
	d["hopf"] = r.hopf;
	d["vk_ratio"] = r.vkRatio;
	return d;
}

AnsatzSpec specOf(const std::string &kind, int charge, int axis, double radius)
{
	return AnsatzSpec{parseAnsatzKind(kind), charge, axis, radius};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Faddeev-Hopf lattice lab on the flat 3-torus";

	// Raised with a .kind attribute naming the error kind.
	static const py::handle errorType = py::exception<Error>(m, "FaddeevError", PyExc_RuntimeError).release();
	py::register_exception_translator([](std::exception_ptr p) {
		try {
			if (p)
				std::rethrow_exception(p);
		} catch (const Error &e) {
			py::object inst = errorType(e.what());
			inst.attr("kind") = toString(e.kind());
			PyErr_SetObject(errorType.ptr(), inst.ptr());
		}
	});

	m.def(
	    "generate",
	    [](const std::string &kind, int n, double l, int charge, int axis, double radius) -> Array {
		    const auto f = generate(specOf(kind, charge, axis, radius), Grid(n, l));
		    if (const auto *s = std::get_if<SphereField>(&f))
			    return fromSphere(*s);
		    return fromGroup(std::get<GroupField>(f));
	    },
	    py::arg("kind"), py::arg("n"), py::arg("l") = 2.0 * M_PI, py::arg("charge") = 1, py::arg("axis") = 1,
	    py::arg("radius") = 0.4,
	    "Sample an ansatz; ballmap gives shape (n, n, n, 4), the others (n, n, n, 3).");

	m.def(
	    "energy", [](const Array &psi, double l) { return energyDict(energy(toSphere(psi, l))); }, py::arg("psi"),
	    py::arg("l") = 2.0 * M_PI);

	m.def(
	    "fluxes",
	    [](const Array &psi, double l) {
		    const Fluxes f = fluxes(toSphere(psi, l));
		    return py::make_tuple(f.p, f.raw);
	    },
	    py::arg("psi"), py::arg("l") = 2.0 * M_PI, "Rounded and raw fluxes through the mid slices.");

	m.def(
	    "hopf_charge", [](const Array &psi, double l) { return hopfCharge(toSphere(psi, l)); }, py::arg("psi"),
	    py::arg("l") = 2.0 * M_PI);

	m.def(
	    "degree", [](const Array &u, double l) { return degree(toGroup(u, l)); }, py::arg("u"),
	    py::arg("l") = 2.0 * M_PI);

	m.def(
	    "conjugate",
	    [](const Array &u, const Array &phi, double l) { return fromSphere(conjugateField(toGroup(u, l), toSphere(phi, l))); },
	    py::arg("u"), py::arg("phi"), py::arg("l") = 2.0 * M_PI, "u phi u* site by site.");

	m.def(
	    "homotopy_record",
	    [](const Array &phi, const Array &u, double l) {
		    const HomotopyRecord r = homotopyRecord(toSphere(phi, l), toGroup(u, l));
		    py::dict d;
		    d["fluxes"] = r.fluxes;
		    d["raw_fluxes"] = r.rawFluxes;
		    d["m"] = r.m;
		    d["degree"] = r.degree;
		    d["degree_class"] = r.degreeClass;
		    d["hopf"] = r.hopfCharge;
		    return d;
	    },
	    py::arg("phi"), py::arg("u"), py::arg("l") = 2.0 * M_PI);

	m.def(
	    "fix_gauge",
	    [](const Array &u, const Array &phi, double l) {
		    const SphereField p = toSphere(phi, l);
		    const GaugeFixResult r = fixGauge(connectionOf(toGroup(u, l)), p);
		    py::dict d;
		    d["u"] = fromGroup(develop(r.connection));
		    d["lambda"] = fromGroup(r.lambda);
		    d["harmonic"] = r.report.harmonic;
		    d["windings"] = r.report.windings;
		    d["residual"] = r.report.codifferentialResidual;
		    return d;
	    },
	    py::arg("u"), py::arg("phi"), py::arg("l") = 2.0 * M_PI,
	    "Gauge-fix a = u* du relative to phi and return the developed frame with the report.");

	m.def(
	    "minimize",
	    [](const Array &psi, double l, const std::string &mode, int maxIters, double gradTol, double step0,
	       int monitorEvery, double chargeDriftTol, const std::function<void(py::dict)> &onRow) {
		    FlowConfig cfg;
		    cfg.mode = parseFlowMode(mode);
		    cfg.maxIters = maxIters;
		    cfg.gradTol = gradTol;
		    cfg.step0 = step0;
		    cfg.monitorEvery = monitorEvery;
		    cfg.chargeDriftTol = chargeDriftTol;
		    const SphereField start = toSphere(psi, l);
		    std::function<void(const TraceRow &)> hook;
		    if (onRow)
			    hook = [&](const TraceRow &row) {
				    py::gil_scoped_acquire acquire;
				    onRow(rowDict(row));
			    };
		    const FlowResult r = [&] {
			    py::gil_scoped_release release;
			    return minimize(start, cfg, hook);
		    }();
		    py::list trace;
		    for (const TraceRow &row : r.trace)
			    trace.append(rowDict(row));
		    return py::make_tuple(fromSphere(r.field), trace, r.converged);
	    },
	    py::arg("psi"), py::arg("l") = 2.0 * M_PI, py::arg("mode") = "map-class", py::arg("max_iters") = 500,
	    py::arg("grad_tol") = 1e-6, py::arg("step0") = 1e-2, py::arg("monitor_every") = 1,
	    py::arg("charge_drift_tol") = 0.05, py::arg("on_row") = nullptr,
	    "Projected gradient flow; returns (field, trace rows, converged).");

	m.def(
	    "load",
	    [](const std::string &path) -> py::tuple {
		    const AnyField f = loadSnapshot(path);
		    const double l = gridOf(f).l();
		    if (const auto *s = std::get_if<SphereField>(&f))
			    return py::make_tuple("sphere", fromSphere(*s), l);
		    if (const auto *u = std::get_if<GroupField>(&f))
			    return py::make_tuple("group", fromGroup(*u), l);
		    throw Error(ErrorKind::InvalidArgument, "connection snapshots are not exposed");
	    },
	    py::arg("path"), "Read a sphere or group snapshot as (kind, array, l).");

	m.def(
	    "save",
	    [](const std::string &path, const Array &field, double l) {
		    if (field.ndim() == 4 && field.shape(3) == 4)
			    saveSnapshot(path, toGroup(field, l));
		    else
			    saveSnapshot(path, toSphere(field, l));
	    },
	    py::arg("path"), py::arg("field"), py::arg("l") = 2.0 * M_PI);
}
