#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "faddeev/fields.hpp"

namespace faddeev {

using AnyField = std::variant<SphereField, GroupField, Connection>;

/**
 * Binary snapshot: "FDVK1", kind byte (0 sphere, 1 group, 2 connection), n as u32 LE,
 * l as f64 LE, then n^3 sites x-fastest with 3, 4 or 9 f64 LE components each.
 * Connection sites store A_1, A_2, A_3 edge values in that order.
 */
void writeSnapshot(std::ostream &out, const AnyField &field);
/// Throws MalformedSnapshot on bad magic, kind, size or unit constraints.
AnyField readSnapshot(std::istream &in);

/// File variants; Io on open or write failure.
void saveSnapshot(const std::string &path, const AnyField &field);
AnyField loadSnapshot(const std::string &path);

const Grid &gridOf(const AnyField &field);

} // namespace faddeev
