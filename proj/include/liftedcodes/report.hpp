#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "liftedcodes/code.hpp"
#include "liftedcodes/graph.hpp"

namespace liftedcodes {

using Json = nlohmann::ordered_json;

/// Number when it fits an unsigned 64-bit value, decimal string otherwise.
Json big_to_json(const BigInt& v);

Json to_json(const IntersectionArray& arr);
Json to_json(const MatQ& m);
Json to_json(const DrgParams& p);

/// "(b_0,..,b_{rho-1}; c_1,..,c_rho)" for report details.
std::string array_text(const IntersectionArray& arr);

/// Rows of canonical entry encodings, space separated.
std::string matrix_text(const MatQ& m);

/// Parity-check file format: first line "q n rows", then `rows` lines of n
/// space-separated canonical element encodings.
MatQ parse_parity_text(std::istream& in);
std::string parity_text(const MatQ& m);

}  // namespace liftedcodes
