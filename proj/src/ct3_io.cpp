#include "ctk/ct3_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "ctk/error.hpp"

namespace ctk {
namespace {

constexpr std::array<char, 4> kMagic{'C', 'T', '3', '\0'};

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> bytes{};
    for (std::size_t i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
    out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
        throw IoError("CT3: truncated header");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return v;
}

}  // namespace

void write_ct3(std::ostream& out, const Tensor3& t) {
    out.write(kMagic.data(), kMagic.size());
    put_u64(out, t.rows());
    put_u64(out, t.cols());
    put_u64(out, t.tubes());
    for (double x : t.data()) put_u64(out, std::bit_cast<std::uint64_t>(x));
    if (!out) throw IoError("CT3: write failed");
}

Tensor3 read_ct3(std::istream& in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw IoError("CT3: bad magic bytes");
    }
    const std::uint64_t n1 = get_u64(in), n2 = get_u64(in), n3 = get_u64(in);
    if (n1 == 0 || n2 == 0 || n3 == 0) throw IoError("CT3: zero extent in header");
    constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 32;
    if (n1 > kMaxEntries / n2 || n1 * n2 > kMaxEntries / n3) {
        throw IoError("CT3: extents too large");
    }
    std::vector<double> data(n1 * n2 * n3);
    for (double& x : data) {
        try {
            x = std::bit_cast<double>(get_u64(in));
        } catch (const IoError&) {
            throw IoError("CT3: truncated payload");
        }
    }
    try {
        return Tensor3(Dims{n1, n2, n3}, std::move(data));
    } catch (const NumericError& e) {
        throw IoError(std::string("CT3: ") + e.what());
    }
}

void save_ct3(const std::filesystem::path& path, const Tensor3& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    write_ct3(out, t);
}

Tensor3 load_ct3(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    return read_ct3(in);
}

}  // namespace ctk
