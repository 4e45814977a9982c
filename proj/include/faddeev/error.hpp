#pragma once

#include <stdexcept>
#include <string>

namespace faddeev {

enum class ErrorKind {
	InvalidArgument,
	GridMismatch,
	NonExactForm,
	UnresolvableField,
	NonIntegralFlux,
	NonIntegralDegree,
	NontrivialHolonomy,
	NotFlat,
	ChargeDrift,
	FluxChange,
	UnderResolved,
	MalformedSnapshot,
	Io,
	Config,
};

const char *toString(ErrorKind kind);

class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string &what)
	    : std::runtime_error(std::string(toString(kind)) + ": " + what), kind_(kind)
	{
	}

	ErrorKind kind() const noexcept { return kind_; }

private:
	ErrorKind kind_;
};

} // namespace faddeev
