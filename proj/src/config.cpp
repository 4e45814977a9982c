#include "faddeev/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>

namespace faddeev {

namespace {

std::string trim(const std::string &s)
{
	const auto b = s.find_first_not_of(" \t\r");
	if (b == std::string::npos)
		return {};
	const auto e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

template <typename T>
T number(const std::string &key, const std::string &value)
{
	T out{};
	const char *end = value.data() + value.size();
	const auto [ptr, ec] = std::from_chars(value.data(), end, out);
	if (ec != std::errc() || ptr != end)
		throw Error(ErrorKind::Config, "bad value '" + value + "' for " + key);
	return out;
}

} // namespace

RunConfig parseRunConfig(std::istream &in)
{
	RunConfig cfg;
	using Setter = std::function<void(const std::string &, const std::string &)>;
	const std::map<std::string, Setter> setters = {
	    {"grid.n", [&](auto &k, auto &v) { cfg.gridN = number<int>(k, v); }},
	    {"grid.l", [&](auto &k, auto &v) { cfg.gridL = number<double>(k, v); }},
	    {"init.kind", [&](auto &, auto &v) { cfg.init.kind = parseAnsatzKind(v); }},
	    {"init.charge", [&](auto &k, auto &v) { cfg.init.charge = number<int>(k, v); }},
	    {"init.axis", [&](auto &k, auto &v) { cfg.init.axis = number<int>(k, v); }},
	    {"init.radius", [&](auto &k, auto &v) { cfg.init.radius = number<double>(k, v); }},
	    {"flow.mode", [&](auto &, auto &v) { cfg.flow.mode = parseFlowMode(v); }},
	    {"flow.max_iters", [&](auto &k, auto &v) { cfg.flow.maxIters = number<int>(k, v); }},
	    {"flow.grad_tol", [&](auto &k, auto &v) { cfg.flow.gradTol = number<double>(k, v); }},
	    {"flow.step0", [&](auto &k, auto &v) { cfg.flow.step0 = number<double>(k, v); }},
	    {"flow.backtrack", [&](auto &k, auto &v) { cfg.flow.backtrack = number<double>(k, v); }},
	    {"flow.monitor_every", [&](auto &k, auto &v) { cfg.flow.monitorEvery = number<int>(k, v); }},
	    {"flow.charge_drift_tol", [&](auto &k, auto &v) { cfg.flow.chargeDriftTol = number<double>(k, v); }},
	    {"out.field", [&](auto &, auto &v) { cfg.outField = v; }},
	    {"out.trace", [&](auto &, auto &v) { cfg.outTrace = v; }},
	};

	std::set<std::string> seen;
	std::string line;
	int lineNo = 0;
	while (std::getline(in, line)) {
		++lineNo;
		const auto hash = line.find('#');
		if (hash != std::string::npos)
			line.erase(hash);
		line = trim(line);
		if (line.empty())
			continue;
		const auto eq = line.find('=');
		if (eq == std::string::npos)
			throw Error(ErrorKind::Config, "line " + std::to_string(lineNo) + ": expected key = value");
		const std::string key = trim(line.substr(0, eq));
		const std::string value = trim(line.substr(eq + 1));
		const auto it = setters.find(key);
		if (it == setters.end())
			throw Error(ErrorKind::Config, "line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
		if (!seen.insert(key).second)
			throw Error(ErrorKind::Config, "line " + std::to_string(lineNo) + ": duplicate key '" + key + "'");
		if (value.empty())
			throw Error(ErrorKind::Config, "line " + std::to_string(lineNo) + ": empty value for " + key);
		try {
			it->second(key, value);
		} catch (const Error &e) {
			if (e.kind() == ErrorKind::Config)
				throw;
			throw Error(ErrorKind::Config, "line " + std::to_string(lineNo) + ": " + e.what());
		}
	}

	try {
		cfg.flow.validate();
		Grid(cfg.gridN, cfg.gridL);
	} catch (const Error &e) {
		throw Error(ErrorKind::Config, e.what());
	}
	return cfg;
}

RunConfig loadRunConfig(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error(ErrorKind::Io, "cannot open config '" + path + "'");
	return parseRunConfig(in);
}

} // namespace faddeev
