#include "faddeev/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "faddeev/ansatz.hpp"
#include "faddeev/config.hpp"
#include "faddeev/flow.hpp"
#include "faddeev/gauge.hpp"
#include "faddeev/invariants.hpp"
#include "faddeev/snapshot.hpp"

namespace faddeev::cli {

namespace {

using json = nlohmann::json;

int exitFor(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::InvalidArgument:
	case ErrorKind::UnderResolved:
	case ErrorKind::MalformedSnapshot:
	case ErrorKind::Config:
	case ErrorKind::GridMismatch:
		return kUsage;
	case ErrorKind::Io:
		return kIo;
	case ErrorKind::ChargeDrift:
	case ErrorKind::FluxChange:
		return kClassViolation;
	default:
		return kFailure;
	}
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json triple(const std::array<double, 3> &v) { return json::array({number(v[0]), number(v[1]), number(v[2])}); }

json record(const HomotopyRecord &rec)
{
	json j;
	j["fluxes"] = rec.fluxes;
	j["raw_fluxes"] = triple(rec.rawFluxes);
	j["m"] = rec.m;
	j["degree"] = number(rec.degree);
	j["degree_class"] = rec.degreeClass;
	if (rec.hopfCharge) {
		j["hopf"] = number(*rec.hopfCharge);
	} else {
		j["hopf"] = nullptr;
		j["hopf_reason"] = "nonzero fluxes";
	}
	return j;
}

/// Fluxes and Hopf charge of psi as report fields; failures become nulls with reasons.
void invariantsInto(json &j, const SphereField &psi)
{
	j["raw_fluxes"] = triple(rawFluxes(psi));
	try {
		const Fluxes fl = fluxes(psi);
		j["fluxes"] = fl.p;
		if (fl.p == std::array<int, 3>{0, 0, 0}) {
			j["hopf"] = number(hopfCharge(psi));
		} else {
			j["hopf"] = nullptr;
			j["hopf_reason"] = "nonzero fluxes";
		}
	} catch (const Error &e) {
		if (e.kind() != ErrorKind::NonIntegralFlux && e.kind() != ErrorKind::NonExactForm)
			throw;
		j["fluxes"] = nullptr;
		j["hopf"] = nullptr;
		j["hopf_reason"] = e.kind() == ErrorKind::NonIntegralFlux ? "non-integral fluxes" : e.what();
	}
}

void energyInto(json &j, const Energy &e)
{
	j["e2"] = number(e.e2);
	j["e4"] = number(e.e4);
	j["energy"] = number(e.total);
}

std::string cell(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

std::string csvRow(const TraceRow &r)
{
	std::string s = std::to_string(r.iteration);
	for (double v : {r.energy.e2, r.energy.e4, r.energy.total, r.gradNorm, r.fluxes[0], r.fluxes[1], r.fluxes[2]})
		s += "," + cell(v);
	s += "," + (r.hopf ? cell(*r.hopf) : std::string());
	s += "," + (r.vkRatio ? cell(*r.vkRatio) : std::string());
	return s;
}

SphereField sphereOf(const AnyField &f)
{
	if (const auto *s = std::get_if<SphereField>(&f))
		return *s;
	const Grid &g = gridOf(f);
	const SphereField ref = SphereField::constant(g, kI);
	if (const auto *u = std::get_if<GroupField>(&f))
		return conjugateField(*u, ref);
	return conjugateField(develop(std::get<Connection>(f)), ref);
}

struct InitArgs {
	std::string ansatz;
	std::optional<int> charge;
	int axis = 1;
	double radius = 0.4;
	int n = 32;
	double l = 2.0 * M_PI;
	std::string output;
};

int cmdInit(const InitArgs &a, std::ostream &out, std::ostream &err)
{
	AnsatzSpec spec;
	spec.kind = parseAnsatzKind(a.ansatz);
	spec.charge = a.charge.value_or(spec.kind == AnsatzKind::Tube ? 0 : 1);
	spec.axis = a.axis;
	spec.radius = a.radius;
	const Grid grid(a.n, a.l);
	const auto field = generate(spec, grid);

	HomotopyRecord rec;
	AnyField any = std::visit([](const auto &f) -> AnyField { return f; }, field);
	if (const auto *u = std::get_if<GroupField>(&field))
		rec = homotopyRecord(SphereField::constant(grid, kI), *u);
	else
		rec = homotopyRecord(std::get<SphereField>(field), GroupField::constant(grid, {1.0, 0.0, 0.0, 0.0}));
	saveSnapshot(a.output, any);
	err << "wrote " << toString(spec.kind) << " field (n = " << a.n << ") to " << a.output << "\n";
	out << record(rec).dump() << "\n";
	return kOk;
}

int cmdReport(const std::string &path, std::ostream &out, std::ostream &err)
{
	const AnyField field = loadSnapshot(path);
	const Grid &g = gridOf(field);
	static const char *kinds[] = {"sphere", "group", "connection"};
	json j;
	j["kind"] = kinds[field.index()];
	j["n"] = g.n();
	j["l"] = g.l();
	j["cs"] = nullptr;
	j["flatness"] = nullptr;

	const SphereField ref = SphereField::constant(g, kI);
	if (const auto *s = std::get_if<SphereField>(&field)) {
		energyInto(j, energy(*s));
		invariantsInto(j, *s);
	} else if (const auto *u = std::get_if<GroupField>(&field)) {
		const SphereField psi = conjugateField(*u, ref);
		energyInto(j, energy(psi));
		invariantsInto(j, psi);
		const Connection a = connectionOf(*u);
		j["degree"] = number(degreeIntegral(a));
		j["cs"] = number(chernSimons(a));
	} else {
		const auto &a = std::get<Connection>(field);
		energyInto(j, energyConn(ref, a));
		j["cs"] = number(chernSimons(a));
		j["degree"] = number(degreeIntegral(a));
		const FlatnessResiduals r = flatnessResiduals(a, ref);
		j["flatness"] = {{"max_plaquette_defect", number(maxPlaquetteDefect(a))},
		                 {"curvature", number(r.full)},
		                 {"eq1", number(r.eq1)},
		                 {"eq2", number(r.eq2)}};
		try {
			invariantsInto(j, sphereOf(field));
		} catch (const Error &e) {
			if (e.kind() != ErrorKind::NontrivialHolonomy && e.kind() != ErrorKind::NotFlat)
				throw;
			j["raw_fluxes"] = nullptr;
			j["fluxes"] = nullptr;
			j["hopf"] = nullptr;
			j["hopf_reason"] = e.what();
		}
	}
	err << "report for " << path << "\n";
	out << j.dump() << "\n";
	return kOk;
}

int cmdMinimize(const std::string &configPath, std::ostream &out, std::ostream &err)
{
	const RunConfig cfg = loadRunConfig(configPath);
	const Grid grid(cfg.gridN, cfg.gridL);
	SphereField psi0 = SphereField::constant(grid, kI);
	{
		const auto field = generate(cfg.init, grid);
		if (const auto *u = std::get_if<GroupField>(&field))
			psi0 = conjugateField(*u, psi0);
		else
			psi0 = std::get<SphereField>(field);
	}

	std::ofstream trace(cfg.outTrace, std::ios::trunc);
	if (!trace)
		throw Error(ErrorKind::Io, "cannot open trace '" + cfg.outTrace + "'");
	trace << kTraceHeader << "\n";
	const auto onRow = [&](const TraceRow &r) {
		trace << csvRow(r) << "\n";
		trace.flush();
		if (!trace)
			throw Error(ErrorKind::Io, "failed writing trace '" + cfg.outTrace + "'");
	};

	const FlowResult res = minimize(psi0, cfg.flow, onRow);
	saveSnapshot(cfg.outField, res.field);
	const TraceRow &last = res.trace.back();
	json j;
	j["iterations"] = res.iterations;
	j["converged"] = res.converged;
	energyInto(j, last.energy);
	j["grad_norm"] = number(last.gradNorm);
	j["raw_fluxes"] = triple(last.fluxes);
	j["hopf"] = last.hopf ? number(*last.hopf) : json(nullptr);
	j["field"] = cfg.outField;
	j["trace"] = cfg.outTrace;
	err << "minimize: " << res.iterations << " iterations, energy " << last.energy.total
	    << (res.converged ? " (converged)" : "") << "\n";
	out << j.dump() << "\n";
	return kOk;
}

int cmdGauge(const std::string &input, const std::string &phiPath, const std::string &output, std::ostream &out,
             std::ostream &err)
{
	const AnyField field = loadSnapshot(input);
	const auto *a = std::get_if<Connection>(&field);
	if (!a)
		throw Error(ErrorKind::InvalidArgument, "gauge expects a connection snapshot");
	SphereField phi = SphereField::constant(a->grid(), kI);
	if (!phiPath.empty()) {
		const AnyField p = loadSnapshot(phiPath);
		if (!std::holds_alternative<SphereField>(p))
			throw Error(ErrorKind::InvalidArgument, "--phi expects a sphere snapshot");
		phi = std::get<SphereField>(p);
	}
	const GaugeFixResult res = fixGauge(*a, phi);
	saveSnapshot(output, res.connection);
	json j;
	j["harmonic"] = triple(res.report.harmonic);
	j["windings"] = res.report.windings;
	j["removed_exact_norm"] = number(res.report.removedExactNorm);
	j["codifferential_residual"] = number(res.report.codifferentialResidual);
	j["iterations"] = res.report.iterations;
	j["tie_broken"] = res.report.tieBroken;
	err << "gauge-fixed connection written to " << output << "\n";
	out << j.dump() << "\n";
	return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Faddeev-Hopf lattice laboratory on the flat 3-torus", "faddeev"};
	app.require_subcommand(1);

	InitArgs init;
	auto *initCmd = app.add_subcommand("init", "generate an ansatz snapshot and print its homotopy record");
	initCmd->add_option("--ansatz", init.ansatz, "constant, equator, tube, hopfion or ballmap")->required();
	initCmd->add_option("--charge", init.charge, "Hopf charge, degree, or tube twists");
	initCmd->add_option("--axis", init.axis, "axis 1..3 for tube and equator")->capture_default_str();
	initCmd->add_option("--radius", init.radius, "support radius as a fraction of l")->capture_default_str();
	initCmd->add_option("--n", init.n, "sites per axis")->capture_default_str();
	initCmd->add_option("--l", init.l, "period")->capture_default_str();
	initCmd->add_option("-o,--output", init.output, "snapshot path")->required();

	std::string reportPath;
	auto *reportCmd = app.add_subcommand("report", "print energies and invariants of a snapshot as JSON");
	reportCmd->add_option("field", reportPath, "snapshot path")->required();

	std::string configPath;
	auto *minCmd = app.add_subcommand("minimize", "run the constrained gradient flow described by a config file");
	minCmd->add_option("--config", configPath, "run config")->required();

	std::string gaugeIn, gaugePhi, gaugeOut;
	auto *gaugeCmd = app.add_subcommand("gauge", "gauge-fix a connection snapshot relative to phi");
	gaugeCmd->add_option("connection", gaugeIn, "connection snapshot")->required();
	gaugeCmd->add_option("--phi", gaugePhi, "sphere snapshot for phi (default: constant i)");
	gaugeCmd->add_option("-o,--output", gaugeOut, "output path")->required();

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, err, err);
		return code == 0 ? kOk : kUsage;
	}

	try {
		if (*initCmd)
			return cmdInit(init, out, err);
		if (*reportCmd)
			return cmdReport(reportPath, out, err);
		if (*minCmd)
			return cmdMinimize(configPath, out, err);
		return cmdGauge(gaugeIn, gaugePhi, gaugeOut, out, err);
	} catch (const Error &e) {
		err << "error: " << e.what() << "\n";
		return exitFor(e.kind());
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return kFailure;
	}
}

} // namespace faddeev::cli
