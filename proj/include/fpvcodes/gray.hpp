#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpvcodes/rcode.hpp"

namespace fpv {

// The Gray maps phi_theta. Inputs are consumed in additive coordinates
// (c = r + v*q); the conversion from CRT storage happens here, at the
// boundary, because the defining formula
//
//   r(x) + v*q(x)  |->  lambda(lambda+mu) q(x) + x^n [ -mu r(x) - (lambda+mu) q(x) ]
//
// is written in additive coordinates and sign slips here are the main hazard.
// All operations reject mu == 0 (gray_parameter_error): the map is only a
// bijection R^n -> F_p^{2n} for mu != 0.

// Polynomial Gray map; f must have degree < n. Image lives in
// F_p[x]/<x^{2n} - 1> and its representative has degree < 2n.
Poly gray_poly(const Theta& theta, const RPoly& f, std::size_t n);

// Vector Gray map: first half lambda(lambda+mu) q_i, second half
// -mu r_i - (lambda+mu) q_i.
std::vector<std::uint64_t> gray_vec(const Theta& theta, const RVec& c);

// Checks phi(alpha(c)) == cyclic_shift(phi(c)) for the constacyclic shift
// alpha; only defined for theta in {1-2v, -1+2v} (precondition_error
// otherwise). Expected true always -- this is the shift-commutation lemma.
bool gray_shift_commutes(const Theta& theta, const RVec& c);

// The Gray image of a code.
//
// Equality mode (theta = +-(1-2v)): the image IS the length-2n cyclic code
// [g1*g2]; `code` is set and `containment_verified` is vacuously true.
//
// Containment mode (any other unit with mu != 0): only phi(C) within the
// ideal <g1*g2> is guaranteed; `code` is empty and `containment_verified`
// records whether the codeword-by-codeword divisibility check ran (it is
// skipped when |C| exceeds the cap).
struct GrayImage {
    RConstaCode source;
    Poly image_generator; // g1 * g2
    std::size_t ambient_len;
    bool equality_mode;
    bool containment_verified;
    std::optional<FpConstaCode> code; // cyclic [g1*g2], equality mode only
};

GrayImage gray_image_code(const RConstaCode& C, std::uint64_t verify_cap = kDefaultEnumCap);

// phi(C^perp) = [h1* h2*], which equals (phi(C))^perp; theta must be
// +-(1-2v).
GrayImage gray_dual_image(const RConstaCode& C);

} // namespace fpv
