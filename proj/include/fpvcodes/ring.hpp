#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpvcodes/fppoly.hpp"

namespace fpv {

// An element a + v*b of R = F_p + vF_p with v^2 = v.
//
// Internally the element lives in CRT coordinates (sigma, tau): writing it as
// v*s + (1-v)*t gives sigma = s and tau = t, so for the additive form a + v*b
// we have sigma = a + b and tau = a. Multiplication is componentwise there;
// the additive-form product (a+vb)(c+vd) = ac + v(ad+bc+bd) is kept as a slow
// reference path (detail::mul_additive) for cross-checking.
class RElem {
  public:
    static RElem from_additive(PrimeField field, std::int64_t a, std::int64_t b);
    static RElem from_crt(PrimeField field, std::int64_t sigma, std::int64_t tau);

    static RElem zero(PrimeField f) { return from_additive(f, 0, 0); }
    static RElem one(PrimeField f) { return from_additive(f, 1, 0); }
    static RElem v(PrimeField f) { return from_additive(f, 0, 1); }
    static RElem one_minus_v(PrimeField f) { return from_additive(f, 1, -1); }

    const PrimeField& field() const noexcept { return field_; }
    std::uint64_t sigma() const noexcept { return sigma_; }
    std::uint64_t tau() const noexcept { return tau_; }
    std::uint64_t a() const noexcept { return tau_; }                       // additive part a
    std::uint64_t b() const noexcept { return field_.sub(sigma_, tau_); }   // additive part b

    RElem operator+(const RElem& o) const;
    RElem operator-(const RElem& o) const;
    RElem operator*(const RElem& o) const;
    RElem operator-() const;
    bool operator==(const RElem& o) const {
        return field_ == o.field_ && sigma_ == o.sigma_ && tau_ == o.tau_;
    }
    bool operator!=(const RElem& o) const { return !(*this == o); }
    bool is_zero() const noexcept { return sigma_ == 0 && tau_ == 0; }

    // Unit criterion: a != 0 and a + b != 0 (both CRT coordinates nonzero).
    bool is_unit() const noexcept { return sigma_ != 0 && tau_ != 0; }
    // Closed-form inverse lambda^{-1} + v[-(lambda+mu)^{-1} mu lambda^{-1}],
    // evaluated on the additive parts. Throws precondition_error on non-units.
    RElem inverse() const;

    // "a+v*b" with reduced residues.
    std::string to_string() const;

  private:
    RElem(PrimeField f, std::uint64_t s, std::uint64_t t) : field_(f), sigma_(s), tau_(t) {}

    PrimeField field_;
    std::uint64_t sigma_;
    std::uint64_t tau_;
};

namespace detail {
// Additive-form product, the convention guard for the CRT fast path.
RElem mul_additive(const RElem& x, const RElem& y);
} // namespace detail

// A unit theta = lambda + v*mu of R, validated at construction.
class Theta {
  public:
    Theta(PrimeField field, std::int64_t lambda, std::int64_t mu);

    const PrimeField& field() const noexcept { return field_; }
    std::uint64_t lambda() const noexcept { return lambda_; }
    std::uint64_t mu() const noexcept { return mu_; }
    std::uint64_t sigma_const() const noexcept { return field_.add(lambda_, mu_); } // shift of C_{1-v}
    std::uint64_t tau_const() const noexcept { return lambda_; }                    // shift of C_v

    RElem value() const { return RElem::from_additive(field_, static_cast<std::int64_t>(lambda_), static_cast<std::int64_t>(mu_)); }
    Theta inverse() const;
    bool operator==(const Theta& o) const {
        return field_ == o.field_ && lambda_ == o.lambda_ && mu_ == o.mu_;
    }

    // theta in {1-2v, -1+2v}: the two units whose Gray images are cyclic.
    bool is_pm_one_minus_2v() const noexcept;

    std::string to_string() const { return value().to_string(); }

  private:
    PrimeField field_;
    std::uint64_t lambda_;
    std::uint64_t mu_;
};

// Polynomial over R, stored as the projection pair (sigma poly, tau poly):
// f = v*f^sigma + (1-v)*f^tau, coefficientwise.
class RPoly {
  public:
    explicit RPoly(PrimeField field);
    RPoly(PrimeField field, const std::vector<RElem>& coeffs);

    // combine: the RPoly whose sigma/tau projections are the given pair.
    static RPoly combine(const Poly& sigma_part, const Poly& tau_part);
    // f = r(x) + v*q(x) given the additive parts.
    static RPoly from_additive(const Poly& r, const Poly& q);

    const PrimeField& field() const noexcept { return field_; }
    Poly sigma() const; // coefficientwise sigma projection
    Poly tau() const;   // coefficientwise tau projection
    Poly additive_r() const { return tau(); }
    Poly additive_q() const; // sigma - tau, coefficientwise

    std::optional<std::size_t> degree() const noexcept;
    std::size_t size() const noexcept { return len_; }
    RElem coeff(std::size_t i) const;
    bool is_zero() const noexcept { return len_ == 0; }

    RPoly operator+(const RPoly& o) const;
    RPoly operator-(const RPoly& o) const;
    RPoly operator*(const RPoly& o) const; // componentwise on projections
    bool operator==(const RPoly& o) const;
    bool operator!=(const RPoly& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void sync_len();

    PrimeField field_;
    std::vector<std::uint64_t> sigma_, tau_; // kept at equal length len_
    std::size_t len_ = 0;                    // coefficients above are zero
};

// Free-function spellings of the canonical projections.
inline Poly project_sigma(const RPoly& f) { return f.sigma(); }
inline Poly project_tau(const RPoly& f) { return f.tau(); }
inline RPoly combine(const Poly& sigma_part, const Poly& tau_part) {
    return RPoly::combine(sigma_part, tau_part);
}

// Length-n tuples over R (codeword shape; not degree-trimmed).
using RVec = std::vector<RElem>;

RVec rvec_zero(PrimeField field, std::size_t n);
// (theta * c_{n-1}, c_0, ..., c_{n-2})
RVec constacyclic_shift(const RVec& c, const RElem& theta);
RElem inner_product(const RVec& u, const RVec& w);
std::vector<std::uint64_t> sigma_vec(const RVec& c);
std::vector<std::uint64_t> tau_vec(const RVec& c);
RVec rvec_from_crt(PrimeField field, const std::vector<std::uint64_t>& sigma,
                   const std::vector<std::uint64_t>& tau);
RPoly rpoly_from_rvec(const RVec& c);
RVec rvec_from_rpoly(const RPoly& f, std::size_t n); // pads; throws if deg >= n

// Parsing accepts the additive form "a+v*b" (also "a", "v*b", "a-v*b") and
// the tagged CRT form "crt:(s,t)".
RElem parse_relem(PrimeField field, const std::string& text);

} // namespace fpv
