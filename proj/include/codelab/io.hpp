#pragma once

#include <codelab/matrix.hpp>

#include <string>

namespace codelab {

// text format: header "q m rows cols", then one line per row of
// space-separated elements, each a comma-joined coefficient tuple c0,...,c_{m-1}
std::string write_matrix(const Matrix& m);
Matrix read_matrix(const std::string& text);

// bits per coordinate = ceil(log2 q); little-endian within bytes, coordinate 1 first
std::string pack_hex(const Field& f, const Vec& v);
Vec unpack_hex(const Field& f, const std::string& hex, size_t n);

std::string to_hex(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> from_hex(const std::string& hex);

unsigned bits_per_symbol(const Field& f);

}
