#pragma once

// JSON form of sequence and matrix specs. Scalars are strings in the scalar
// grammar; plain JSON integers are accepted too.
//
//   {"kind":"gibonacci","a":"0","b":"1","r":"1","s":"1","shift":0}
//   {"field":{"d":5},"order":8,"family":{"kind":"toeplitz_abc",...},
//    "modifiers":[{"i":1,"j":1,"delta":"1"}]}

#include "minorlab/matrix.hpp"
#include "minorlab/sequence.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace minorlab {

/// A standalone sequence document may carry its own "field"; otherwise
/// `field` is used. All failures surface as ParseError, except field and
/// gamma checks done later by build().
SequenceSpec parse_sequence_spec(std::string_view json_text, FieldTag field = {});
MatrixSpec parse_matrix_spec(std::string_view json_text);

MatrixSpec load_matrix_spec(const std::filesystem::path& path);
SequenceSpec load_sequence_spec(const std::filesystem::path& path);

/// Compact JSON that parses back to an equivalent spec.
std::string to_json(const SequenceSpec& spec);
std::string to_json(const MatrixSpec& spec);

} // namespace minorlab
