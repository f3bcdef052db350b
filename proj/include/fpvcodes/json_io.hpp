#pragma once

#include <string>

#include "fpvcodes/fpcode.hpp"
#include "fpvcodes/rcode.hpp"

namespace fpv {

// JSON descriptors (schema version 1).
//
//   FpConstaCode: {"p","n","lambda","g","h","k"} with polynomials as
//   constant-first residue arrays.
//
//   RConstaCode: {"p","n","theta":{"lambda","mu"},"g1","g2",
//   "single_generator":[[a,b],...],"size_log_p"}.
//
// Round-trips are lossless: parse(emit(code)) == code.
std::string fp_code_to_json(const FpConstaCode& code);
std::string r_code_to_json(const RConstaCode& code);
FpConstaCode fp_code_from_json(const std::string& text);
RConstaCode r_code_from_json(const std::string& text);

// CSV export: one codeword per row, reduced residues.
std::string codewords_csv(const std::vector<std::vector<std::uint64_t>>& words);

} // namespace fpv
