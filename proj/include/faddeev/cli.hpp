#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faddeev::cli {

/// Process exit codes.
enum Exit : int {
	kOk = 0,
	kFailure = 1, ///< numerical failure not covered below (e.g. an unresolved field)
	kUsage = 2,   ///< bad flags, config values or ansatz parameters
	kIo = 3,
	kClassViolation = 4,
};

/// CSV header of minimization traces.
inline constexpr const char *kTraceHeader = "iter,e2,e4,energy,grad_norm,flux1,flux2,flux3,hopf,vk_ratio";

/// Runs the command line; args excludes the program name. JSON goes to out, messages to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace faddeev::cli
