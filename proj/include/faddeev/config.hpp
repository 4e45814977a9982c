#pragma once

#include <iosfwd>
#include <string>

#include "faddeev/ansatz.hpp"
#include "faddeev/flow.hpp"

namespace faddeev {

/// Minimization run description read from `key = value` text with `#` comments.
struct RunConfig {
	int gridN = 32;
	double gridL = 2.0 * M_PI;
	AnsatzSpec init;
	FlowConfig flow;
	std::string outField = "final.fdk";
	std::string outTrace = "trace.csv";
};

/// Throws Config on unknown keys, duplicate keys, malformed lines or bad values.
RunConfig parseRunConfig(std::istream &in);
/// Io if the file cannot be opened.
RunConfig loadRunConfig(const std::string &path);

} // namespace faddeev
