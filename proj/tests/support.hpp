#pragma once

#include <optional>
#include <string>

#include "doctest.h"
#include "faddeev/error.hpp"

namespace testing {

/// Name of the error kind thrown by f, or "none".
template <class F>
std::string thrownKind(F &&f)
{
	try {
		f();
	} catch (const faddeev::Error &e) {
		return faddeev::toString(e.kind());
	}
	return "none";
}

} // namespace testing

#define CHECK_ERROR(expr, kind) CHECK(testing::thrownKind([&] { (void)(expr); }) == std::string(faddeev::toString(kind)))
