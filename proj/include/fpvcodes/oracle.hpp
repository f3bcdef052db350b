#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpvcodes/gray.hpp"
#include "fpvcodes/rcode.hpp"

namespace fpv {

// Brute-force machinery that re-derives the structural claims from first
// principles on small instances. Ground truth here is always a definition --
// closure, orthogonality scans, direct map evaluation -- never r_dual,
// decompose or gray_image_code, so agreement with those is evidence rather
// than circularity.

// Hard cap on exhaustive universes: p^{2n} <= 3^12.
inline constexpr std::uint64_t kOracleUniverseCap = 531441;

struct Ambient {
    Theta theta;
    std::size_t n;

    const PrimeField& field() const noexcept { return theta.field(); }
    std::uint64_t universe_size() const; // p^{2n}; throws cap_exceeded over the cap
    std::string to_string() const;
};

// Vectors in R^n encoded as 2n base-p digits (sigma_0, tau_0, sigma_1, ...).
std::uint32_t encode_rvec(const PrimeField& field, const RVec& w);
RVec decode_rvec(const PrimeField& field, std::size_t n, std::uint32_t idx);
std::uint64_t encode_fp_vec(const PrimeField& field, const std::vector<std::uint64_t>& w);

// The smallest subset of R^n containing gens that is closed under addition,
// all R-scalar multiples, and the theta-constacyclic shift.
struct IdealClosure {
    Ambient ambient;
    std::vector<std::uint32_t> elements; // sorted encodings

    bool contains(std::uint32_t e) const;
    std::size_t size() const noexcept { return elements.size(); }
};

IdealClosure close_ideal(const Ambient& ambient, const std::vector<RVec>& gens);

// Additive + scalar closure only (an R-submodule, not necessarily an ideal);
// used to build linear-but-not-constacyclic fixtures.
std::vector<std::uint32_t> linear_span(const PrimeField& field, std::size_t n,
                                       const std::vector<RVec>& gens);

bool set_closed_under_theta_shift(const Ambient& ambient,
                                  const std::vector<std::uint32_t>& elements);
// F_p^m vector sets; lambda = 1 gives plain cyclic closure.
bool fp_set_shift_closed(const PrimeField& field, std::uint64_t lambda,
                         const std::vector<std::vector<std::uint64_t>>& elements);

// {u : u.w = 0 for all w in C}, by scanning the whole universe.
std::vector<std::uint32_t> brute_orthogonal_complement(const Ambient& ambient,
                                                       const std::vector<std::uint32_t>& code);

struct AuditReport {
    std::string claim;
    std::string instance;
    bool ok = true;
    std::uint64_t checked = 0;
    std::vector<std::string> notes;
    std::vector<std::string> violations;

    void fail(std::string what);
    std::string to_text() const;
    std::string to_json_string() const;
};

std::vector<Theta> all_units(const PrimeField& field);

// Unit lemma: r_is_unit vs brute-force invertibility over all p^2 elements,
// unit count (p-1)^2, and x * x^{-1} = 1 for every unit.
AuditReport audit_units(const PrimeField& field);

// C = {v a + (1-v) b}, |C| = |C_{1-v}||C_v|, and the submodule-quotient
// identities (C:v)^sigma = C_{1-v}, (C:(1-v))^tau = C_v, for every divisor
// pair, against ideal closures.
AuditReport audit_decomposition(const PrimeField& field, std::size_t n, const Theta& theta);

// Every 2-generated ideal equals a 1-generated one. Singles are enumerated
// exhaustively; pairs reduce to sums of principal ideals since
// <f,g> = <f> + <g>.
AuditReport audit_principality(const PrimeField& field, std::size_t n, const Theta& theta);

// Divisor pairs <-> ideals is a bijection (injective by set comparison,
// surjective onto everything audit_principality found).
AuditReport audit_standard_uniqueness(const PrimeField& field, std::size_t n, const Theta& theta);

// |C| * |C_perp| = p^{2n} with C_perp by orthogonality scan, and the scan
// agrees with the h* formula dual as a set.
AuditReport audit_frobenius(const PrimeField& field, std::size_t n, const Theta& theta);

// Dual-focused audit: involution, theta^{-1} shift closure of the brute
// dual, and brute dual == formula dual.
AuditReport audit_dual(const PrimeField& field, std::size_t n, const Theta& theta);

// Gray battery on one (p, n): bijectivity/linearity (exhaustive when
// p*n <= 8), shift commutation on seeded random vectors, and -- on instances
// small enough for full enumeration -- containment for every unit with
// mu != 0 plus image equality and dual-image identities for
// theta = +-(1-2v).
AuditReport audit_gray(const PrimeField& field, std::size_t n);

// Cyclicity criterion in both directions: over the single-generator
// submodule family (linear codes, generally not constacyclic), a code is
// theta-constacyclic exactly when its Gray image is cyclic; the family must
// contain non-constacyclic fixtures for the test to bite.
AuditReport audit_cyclicity(const PrimeField& field, std::size_t n);

struct ExampleReport {
    bool ok = true;
    std::vector<std::string> checks; // one line per verified fact

    // Structured results for the golden assertions.
    std::string resolved_g1, resolved_g2;
    std::size_t code_size_log_p = 0;
    std::size_t dual_size_log_p = 0;
    std::size_t gray_length = 0;
    std::size_t gray_dim = 0;
    std::uint64_t gray_min_weight = 0;
    std::string gray_generator;

    void check(bool cond, const std::string& what);
    std::string to_text() const;
    std::string to_json_string() const;
};

// Builds the golden code over F_3 + vF_3 (n = 10, theta = -1+2v), resolving
// the generator slot orientation computationally, and reproduces the
// [20, 12, 4] cyclic Gray image by full enumeration.
ExampleReport reproduce_example();

} // namespace fpv
