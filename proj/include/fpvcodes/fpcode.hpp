#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fpvcodes/fppoly.hpp"

namespace fpv {

// Default enumeration cap: keeps the 3^12-codeword golden run comfortable
// while preventing accidental blowups.
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

struct WeightReport {
    std::optional<std::uint64_t> weight; // nullopt: zero code has no nonzero word
    bool exact = true;                   // false: bounded search, value is an upper bound
};

// A lambda-constacyclic code of length n over F_p with monic generator
// g | x^n - lambda and check polynomial h = (x^n - lambda)/g.
class FpConstaCode {
  public:
    static FpConstaCode from_generator(const PrimeField& field, std::size_t n,
                                       std::uint64_t lambda, const Poly& g);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::uint64_t lambda() const noexcept { return lambda_; }
    const Poly& generator() const noexcept { return g_; }
    const Poly& check_poly() const noexcept { return h_; }
    std::size_t dim() const noexcept { return n_ - *g_.degree(); } // k = n - deg g
    std::uint64_t codeword_count() const;                          // p^k, checked

    bool operator==(const FpConstaCode& o) const {
        return field_ == o.field_ && n_ == o.n_ && lambda_ == o.lambda_ && g_ == o.g_;
    }

    // Ideal membership: the residue polynomial of w is a multiple of g.
    bool contains(const std::vector<std::uint64_t>& w) const;

    Poly encode(const Poly& message) const; // message * g, deg message < k
    std::vector<std::uint64_t> encode_vec(const Poly& message) const;

    // Visits all p^k codewords (zero word included) as length-n residue
    // vectors. Deterministic DFS order with incremental row additions.
    void for_each_codeword(const std::function<void(const std::vector<std::uint64_t>&)>& fn,
                           std::uint64_t cap = kDefaultEnumCap) const;
    std::vector<std::vector<std::uint64_t>> codewords(std::uint64_t cap = kDefaultEnumCap) const;

    // Exact minimum nonzero Hamming weight by exhaustive scan. Honors the
    // FPVCODES_WORKERS environment variable for partitioned scanning; the
    // result is a plain min-reduction, identical under any partitioning.
    WeightReport min_weight(std::uint64_t cap = kDefaultEnumCap) const;
    // Scans only the first `budget` messages; result flagged inexact.
    WeightReport min_weight_bounded(std::uint64_t budget) const;

    // Exhaustively verifies closure under the lambda-constacyclic shift.
    bool shift_closed(std::uint64_t cap = kDefaultEnumCap) const;

    // Code of length n with shift constant lambda^{-1} and generator h*.
    FpConstaCode dual() const;

  private:
    FpConstaCode(PrimeField field, std::size_t n, std::uint64_t lambda, Poly g, Poly h);

    PrimeField field_;
    std::size_t n_;
    std::uint64_t lambda_;
    Poly g_, h_;
};

// (lambda * w_{n-1}, w_0, ..., w_{n-2})
std::vector<std::uint64_t> constacyclic_shift(const PrimeField& field,
                                              const std::vector<std::uint64_t>& w,
                                              std::uint64_t lambda);
std::uint64_t hamming_weight(const std::vector<std::uint64_t>& w);

} // namespace fpv
