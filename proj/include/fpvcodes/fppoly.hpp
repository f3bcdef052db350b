#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpvcodes/errors.hpp"

namespace fpv {

// The prime field F_p. Primality is certified by trial division at
// construction; moduli are assumed to fit a machine word.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }

    // Residue arithmetic on canonical representatives in [0, p).
    std::uint64_t reduce(std::uint64_t v) const noexcept { return v % p_; }
    std::uint64_t reduce_signed(std::int64_t v) const noexcept;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
    std::uint64_t inv(std::uint64_t a) const; // throws precondition_error on 0

    bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }
    bool operator!=(const PrimeField& other) const noexcept { return p_ != other.p_; }

  private:
    std::uint64_t p_;
};

// A single residue tagged with its field. Poly and the codes below work on
// raw residues for speed; FieldElem is the boundary type.
struct FieldElem {
    PrimeField field;
    std::uint64_t value; // canonical residue in [0, p)

    FieldElem(PrimeField f, std::int64_t v) : field(f), value(f.reduce_signed(v)) {}

    FieldElem operator+(const FieldElem& o) const { return with(field.add(value, check(o))); }
    FieldElem operator-(const FieldElem& o) const { return with(field.sub(value, check(o))); }
    FieldElem operator*(const FieldElem& o) const { return with(field.mul(value, check(o))); }
    FieldElem operator-() const { return with(field.neg(value)); }
    FieldElem inverse() const { return with(field.inv(value)); }
    bool operator==(const FieldElem& o) const { return field == o.field && value == o.value; }
    bool is_zero() const { return value == 0; }

  private:
    FieldElem with(std::uint64_t v) const { return FieldElem(field, static_cast<std::int64_t>(v)); }
    std::uint64_t check(const FieldElem& o) const {
        if (field != o.field) throw invalid_input("FieldElem: mismatched fields");
        return o.value;
    }
};

// Dense univariate polynomial over F_p, coefficients stored constant term
// first with no trailing zeros. The zero polynomial has an empty coefficient
// vector and degree() == nullopt (a genuine "minus infinity" marker).
class Poly {
  public:
    explicit Poly(PrimeField field) : field_(field) {}
    Poly(PrimeField field, std::vector<std::int64_t> coeffs);

    static Poly zero(PrimeField field) { return Poly(field); }
    static Poly one(PrimeField field) { return Poly(field, {1}); }
    static Poly constant(PrimeField field, std::int64_t c) { return Poly(field, {c}); }
    static Poly x(PrimeField field) { return Poly(field, {0, 1}); }
    // x^n - lambda
    static Poly xn_minus(PrimeField field, std::size_t n, std::uint64_t lambda);
    static Poly from_residues(PrimeField field, std::vector<std::uint64_t> coeffs);

    const PrimeField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    std::uint64_t leading() const;       // throws on zero polynomial
    std::uint64_t constant_term() const noexcept { return coeff(0); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(std::uint64_t c) const;
    Poly shifted(std::size_t k) const; // * x^k
    Poly monic() const;                // leading coefficient scaled to 1
    Poly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    bool operator==(const Poly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    void check_field(const Poly& o) const {
        if (field_ != o.field_) throw invalid_input("Poly: mismatched fields");
    }

    PrimeField field_;
    std::vector<std::uint64_t> coeffs_;
};

// a = q*b + r with deg r < deg b. Throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b); // exact or truncating quotient
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic greatest common divisor; throws if both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

Poly powmod(const Poly& base, unsigned __int128 exp, const Poly& mod);

// Canonical order: degree first (zero polynomial smallest), then the
// coefficient sequence from the constant term up.
bool canonical_less(const Poly& a, const Poly& b);

// Rabin's criterion: f of degree d is irreducible iff f | x^(p^d) - x and
// gcd(f, x^(p^(d/q)) - x) = 1 for every prime q | d.
bool is_irreducible(const Poly& f);

// Complete factorization of a monic polynomial into monic irreducibles.
// Construction re-multiplies the factors and certifies each irreducible, so
// an instance is its own witness.
class Factorization {
  public:
    Factorization(Poly target, std::vector<std::pair<Poly, std::size_t>> factors);

    const Poly& target() const noexcept { return target_; }
    const std::vector<std::pair<Poly, std::size_t>>& factors() const noexcept { return factors_; }
    std::size_t divisor_count() const noexcept;

  private:
    Poly target_;
    std::vector<std::pair<Poly, std::size_t>> factors_; // canonically sorted
};

// Squarefree decomposition, then distinct-degree, then equal-degree splitting
// with a deterministically seeded splitter; output canonically sorted.
Factorization factor_monic(const Poly& f);
Factorization factor_xn_minus_lambda(const PrimeField& field, std::size_t n, std::uint64_t lambda);

// All monic divisors of the factored polynomial, canonically sorted; exactly
// prod(e_i + 1) entries.
std::vector<Poly> monic_divisors(const Factorization& f);

// h* = h(0)^{-1} x^{deg h} h(1/x), monic, an involution on {h : h(0) != 0}.
Poly reciprocal_star(const Poly& h);

} // namespace fpv
