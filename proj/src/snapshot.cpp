#include "faddeev/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace faddeev {

namespace {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

constexpr char kMagic[5] = {'F', 'D', 'V', 'K', '1'};
constexpr std::size_t kHeader = 5 + 1 + 4 + 8;
// Keeps a corrupt header from requesting absurd allocations.
constexpr std::uint32_t kMaxN = 1024;

int componentsFor(int kind) { return kind == 0 ? 3 : (kind == 1 ? 4 : 9); }

void putF64(std::string &buf, double v)
{
	char b[8];
	std::memcpy(b, &v, 8);
	buf.append(b, 8);
}

} // namespace

const Grid &gridOf(const AnyField &field)
{
	return std::visit([](const auto &f) -> const Grid & { return f.grid(); }, field);
}

void writeSnapshot(std::ostream &out, const AnyField &field)
{
	const Grid &g = gridOf(field);
	const int kind = static_cast<int>(field.index());
	std::string buf;
	buf.reserve(kHeader + g.sites() * componentsFor(kind) * 8);
	buf.append(kMagic, 5);
	buf.push_back(static_cast<char>(kind));
	const std::uint32_t n = static_cast<std::uint32_t>(g.n());
	char nb[4];
	std::memcpy(nb, &n, 4);
	buf.append(nb, 4);
	putF64(buf, g.l());

	if (const auto *s = std::get_if<SphereField>(&field)) {
		for (const Imag &v : s->values())
			for (int c = 0; c < 3; ++c)
				putF64(buf, v[c]);
	} else if (const auto *u = std::get_if<GroupField>(&field)) {
		for (const Quaternion &q : u->values()) {
			putF64(buf, q.w);
			putF64(buf, q.x);
			putF64(buf, q.y);
			putF64(buf, q.z);
		}
	} else {
		const auto &a = std::get<Connection>(field);
		for (std::size_t site = 0; site < g.sites(); ++site)
			for (int mu = 0; mu < 3; ++mu)
				for (int c = 0; c < 3; ++c)
					putF64(buf, a.edge(mu)[site][c]);
	}
	out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
	if (!out)
		throw Error(ErrorKind::Io, "failed to write snapshot");
}

AnyField readSnapshot(std::istream &in)
{
	char header[kHeader];
	if (!in.read(header, kHeader))
		throw Error(ErrorKind::MalformedSnapshot, "truncated header");
	if (std::memcmp(header, kMagic, 5) != 0)
		throw Error(ErrorKind::MalformedSnapshot, "bad magic");
	const int kind = static_cast<unsigned char>(header[5]);
	if (kind > 2)
		throw Error(ErrorKind::MalformedSnapshot, "unknown kind byte " + std::to_string(kind));
	std::uint32_t n;
	double l;
	std::memcpy(&n, header + 6, 4);
	std::memcpy(&l, header + 10, 8);
	if (n < 4 || n > kMaxN || !(l > 0.0) || !std::isfinite(l))
		throw Error(ErrorKind::MalformedSnapshot, "invalid grid header");
	const Grid g(static_cast<int>(n), l);

	const std::size_t count = g.sites() * componentsFor(kind);
	std::vector<double> data(count);
	if (!in.read(reinterpret_cast<char *>(data.data()), static_cast<std::streamsize>(count * 8)))
		throw Error(ErrorKind::MalformedSnapshot, "payload shorter than n^3 sites");
	if (in.peek() != std::char_traits<char>::eof())
		throw Error(ErrorKind::MalformedSnapshot, "trailing bytes after payload");
	for (double v : data)
		if (!std::isfinite(v))
			throw Error(ErrorKind::MalformedSnapshot, "non-finite payload value");

	try {
		if (kind == 0) {
			std::vector<Imag> v(g.sites());
			for (std::size_t s = 0; s < v.size(); ++s)
				v[s] = {data[3 * s], data[3 * s + 1], data[3 * s + 2]};
			return SphereField(g, std::move(v));
		}
		if (kind == 1) {
			std::vector<Quaternion> v(g.sites());
			for (std::size_t s = 0; s < v.size(); ++s)
				v[s] = {data[4 * s], data[4 * s + 1], data[4 * s + 2], data[4 * s + 3]};
			return GroupField(g, std::move(v));
		}
	} catch (const Error &e) {
		throw Error(ErrorKind::MalformedSnapshot, e.what());
	}
	Connection a(g);
	for (std::size_t s = 0; s < g.sites(); ++s)
		for (int mu = 0; mu < 3; ++mu)
			a.edge(mu)[s] = {data[9 * s + 3 * mu], data[9 * s + 3 * mu + 1], data[9 * s + 3 * mu + 2]};
	return a;
}

void saveSnapshot(const std::string &path, const AnyField &field)
{
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
	writeSnapshot(out, field);
	out.close();
	if (!out)
		throw Error(ErrorKind::Io, "failed to write '" + path + "'");
}

AnyField loadSnapshot(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(ErrorKind::Io, "cannot open '" + path + "'");
	return readSnapshot(in);
}

} // namespace faddeev
