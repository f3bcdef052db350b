#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "fpvcodes/fpcode.hpp"
#include "fpvcodes/ring.hpp"

namespace fpv {

// A theta-constacyclic code over R = F_p + vF_p, held by its standard-form
// generator pair:
//
//   C = < v*g1, (1-v)*g2 >  with  g1 | x^n - (lambda+mu),  g2 | x^n - lambda.
//
// Slot naming follows the decomposition C = v*C_{1-v} + (1-v)*C_v, so --
// counterintuitively -- g1 is the generator of C_{1-v} (the component paired
// with v, living modulo x^n - (lambda+mu)) and g2 generates C_v (paired with
// 1-v, modulo x^n - lambda).
//
// The zero component is stored as the full modulus x^n - shift (degree n), so
// every size/degree formula stays total; only display renders it as "0".
class RConstaCode {
  public:
    // g1/g2 may be the zero polynomial as the standard form's zero marker.
    static RConstaCode from_standard_pair(std::size_t n, const Theta& theta,
                                          const Poly& g1, const Poly& g2);

    // The unique standard pair of the ideal <gens> in R[x]/<x^n - theta>:
    // g1 = gcd(x^n - (lambda+mu), {gens^sigma}), g2 = gcd(x^n - lambda,
    // {gens^tau}). An empty list yields the zero code.
    static RConstaCode standardize(std::size_t n, const Theta& theta,
                                   const std::vector<RPoly>& gens);

    const PrimeField& field() const noexcept { return theta_.field(); }
    std::size_t n() const noexcept { return n_; }
    const Theta& theta() const noexcept { return theta_; }
    const Poly& g1() const noexcept { return g1_; } // generator of C_{1-v}
    const Poly& g2() const noexcept { return g2_; } // generator of C_v
    bool g1_is_zero_marker() const;                 // g1 == x^n - (lambda+mu)
    bool g2_is_zero_marker() const;

    FpConstaCode component_1mv() const; // C_{1-v}: shift lambda+mu, generator g1
    FpConstaCode component_v() const;   // C_v: shift lambda, generator g2
    std::pair<FpConstaCode, FpConstaCode> decompose() const;

    // g = v*g1 + (1-v)*g2; C = <g>, and g divides x^n - theta in R[x].
    RPoly single_generator() const;

    std::size_t size_log_p() const noexcept; // |C| = p^(2n - deg g1 - deg g2)
    std::uint64_t size() const;              // checked for overflow

    bool contains(const RVec& w) const; // w^sigma in C_{1-v} and w^tau in C_v

    // (C : v)^sigma = C_{1-v} and (C : (1-v))^tau = C_v; any other multiplier
    // is rejected.
    FpConstaCode submodule_quotient(const RElem& a) const;

    // theta^{-1}-constacyclic dual with standard pair (h1*, h2*) where
    // g1*h1 = x^n - (lambda+mu) and g2*h2 = x^n - lambda.
    RConstaCode dual() const;

    // Visits all |C| codewords as v*a + (1-v)*b over the component codes.
    void for_each_codeword(const std::function<void(const RVec&)>& fn,
                           std::uint64_t cap = kDefaultEnumCap) const;
    std::vector<RVec> codewords(std::uint64_t cap = kDefaultEnumCap) const;

    // Codes under different (n, theta) live in different ambient quotients
    // and are treated as incomparable: equality is simply false across them.
    bool operator==(const RConstaCode& o) const;
    bool operator!=(const RConstaCode& o) const { return !(*this == o); }

  private:
    RConstaCode(std::size_t n, Theta theta, Poly g1, Poly g2);

    std::size_t n_;
    Theta theta_;
    Poly g1_, g2_;
};

} // namespace fpv
