#include "gkp/field_io.hpp"
#include "gkp/errors.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace gkp {

namespace {

constexpr char kMagic[4] = {'G', 'K', 'P', '1'};
constexpr std::uint64_t kMaxSamples = std::uint64_t(1) << 26;

void put_u32(std::string& out, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(char((v >> (8 * k)) & 0xff));
}

void put_f64(std::string& out, double d) {
    const auto v = std::bit_cast<std::uint64_t>(d);
    for (int k = 0; k < 8; ++k) out.push_back(char((v >> (8 * k)) & 0xff));
}

std::uint32_t get_u32(const std::string& in, size_t off) {
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= std::uint32_t(std::uint8_t(in[off + k])) << (8 * k);
    return v;
}

double get_f64(const std::string& in, size_t off) {
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= std::uint64_t(std::uint8_t(in[off + k])) << (8 * k);
    return std::bit_cast<double>(v);
}

} // namespace

void write_field(const std::string& path, const Field& f) {
    const Grid& g = *f.grid;
    std::string buf;
    buf.reserve(24 + 8 * f.values.size());
    buf.append(kMagic, 4);
    put_u32(buf, std::uint32_t(g.Nx));
    put_u32(buf, std::uint32_t(g.Ny));
    put_f64(buf, g.Lx);
    put_f64(buf, g.Ly);
    for (double v : f.values) put_f64(buf, v);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("write_field: cannot open " + path);
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw IoError("write_field: short write to " + path);
}

Field read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_field: cannot open " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (buf.size() < 4 || std::memcmp(buf.data(), kMagic, 4) != 0)
        throw IoError("read_field: bad magic at offset 0 in " + path);
    if (buf.size() < 28)
        throw IoError("read_field: truncated header (expected 28 bytes, got " +
                      std::to_string(buf.size()) + ") in " + path);

    const std::uint32_t Nx = get_u32(buf, 4);
    const std::uint32_t Ny = get_u32(buf, 8);
    const std::uint64_t count = std::uint64_t(Nx) * Ny;
    if (count == 0 || count > kMaxSamples)
        throw IoError("read_field: dimension overflow (Nx=" + std::to_string(Nx) +
                      ", Ny=" + std::to_string(Ny) + ") in " + path);

    const double Lx = get_f64(buf, 12);
    const double Ly = get_f64(buf, 20);
    const std::uint64_t expected = 28 + 8 * count;
    if (buf.size() != expected)
        throw IoError("read_field: payload length mismatch (expected " +
                      std::to_string(expected) + " bytes, got " +
                      std::to_string(buf.size()) + ") in " + path);

    GridPtr grid = make_grid(Lx, Ly, int(Nx), int(Ny));
    Field f(grid);
    for (std::uint64_t k = 0; k < count; ++k)
        f.values[size_t(k)] = get_f64(buf, size_t(28 + 8 * k));
    return f;
}

} // namespace gkp
