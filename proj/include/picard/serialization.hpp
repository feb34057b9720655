#pragma once

// JSON encodings shared by the CLI and file formats.
//
//   EisensteinInt        [a, b]
//   EisensteinFrac       {"num": [a, b], "den": d}
//   matrix               {"matrix": [[[a,b] x4] x4]}   (row-major)
//   DecompositionResult  {"unit": [a, b], "word": "<text>"}
//
// Integers whose magnitude needs more than 53 bits are written as decimal
// strings; readers accept either form.

#include <json.hpp>

#include "picard/decomposer.hpp"
#include "picard/eisenstein.hpp"
#include "picard/finite_unitary.hpp"
#include "picard/hermitian.hpp"
#include "picard/words.hpp"

namespace picard {

using json = nlohmann::json;

json int_to_json(const mpz_class& x);
/// Throws FormatError on anything but an integer or a decimal string.
mpz_class int_from_json(const json& j);

json to_json(const EisensteinInt& x);
EisensteinInt eisenstein_from_json(const json& j);

json to_json(const EisensteinFrac& z);
EisensteinFrac frac_from_json(const json& j);

json to_json(const Matrix4& m);
json to_json(const GroupMatrix& g);
/// Reads {"matrix": ...} without checking membership.
Matrix4 matrix_from_json(const json& j);
/// Reads and validates; throws NotMember naming the first failing form entry.
GroupMatrix group_matrix_from_json(const json& j);

json to_json(const Matrix2& m);
json to_json(const UWord& w);

json to_json(const DecompositionResult& r);
DecompositionResult result_from_json(const json& j);

json to_json(const ReductionStep& s);
json to_json(const HeisenbergParam& p);
json to_json(const ReductionTrace& t);

/// One row per element of U(2;Z[w]): {"element": [[..],[..]], "word": "U2^-1 U1"}.
json u2_table_json();
std::string serialize(const UWord& w);

}  // namespace picard
