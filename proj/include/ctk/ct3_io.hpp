#pragma once

// CT3 container: magic "CT3\0", three uint64 little-endian extents (n1, n2, n3), then
// n1*n2*n3 IEEE-754 binary64 little-endian values in slice-major, column-within-slice
// order (the in-memory order of Tensor3).

#include <filesystem>
#include <iosfwd>

#include "ctk/tensor3.hpp"

namespace ctk {

void write_ct3(std::ostream& out, const Tensor3& t);
Tensor3 read_ct3(std::istream& in);

void save_ct3(const std::filesystem::path& path, const Tensor3& t);
Tensor3 load_ct3(const std::filesystem::path& path);

}  // namespace ctk
