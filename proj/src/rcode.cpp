#include "fpvcodes/rcode.hpp"

namespace fpv {

namespace {

// The standard form's zero marker maps to the full modulus internally so
// degree formulas stay total; a zero component is exactly g == x^n - shift.
Poly canonical_component(const Poly& g, const PrimeField& field, std::size_t n,
                         std::uint64_t shift, const char* slot) {
    const Poly modulus = Poly::xn_minus(field, n, shift);
    if (g.is_zero()) return modulus;
    if (!g.is_monic()) throw precondition_error(std::string(slot) + " must be monic or zero");
    if (!divides(g, modulus)) {
        throw precondition_error(std::string(slot) + " does not divide " + modulus.to_string());
    }
    return g;
}

} // namespace

RConstaCode::RConstaCode(std::size_t n, Theta theta, Poly g1, Poly g2)
    : n_(n), theta_(std::move(theta)), g1_(std::move(g1)), g2_(std::move(g2)) {}

RConstaCode RConstaCode::from_standard_pair(std::size_t n, const Theta& theta, const Poly& g1,
                                            const Poly& g2) {
    if (n == 0) throw invalid_input("code length must be positive");
    const PrimeField& F = theta.field();
    if (g1.field() != F || g2.field() != F) throw invalid_input("generator field mismatch");
    Poly c1 = canonical_component(g1, F, n, theta.sigma_const(), "g1");
    Poly c2 = canonical_component(g2, F, n, theta.tau_const(), "g2");
    return RConstaCode(n, theta, std::move(c1), std::move(c2));
}

RConstaCode RConstaCode::standardize(std::size_t n, const Theta& theta,
                                     const std::vector<RPoly>& gens) {
    if (n == 0) throw invalid_input("code length must be positive");
    const PrimeField& F = theta.field();
    Poly acc1 = Poly::xn_minus(F, n, theta.sigma_const());
    Poly acc2 = Poly::xn_minus(F, n, theta.tau_const());
    for (const RPoly& g : gens) {
        if (g.field() != F) throw invalid_input("generator field mismatch");
        const Poly s = g.sigma(), t = g.tau();
        if (!s.is_zero()) acc1 = gcd(acc1, s);
        if (!t.is_zero()) acc2 = gcd(acc2, t);
    }
    return RConstaCode(n, theta, std::move(acc1), std::move(acc2));
}

bool RConstaCode::g1_is_zero_marker() const {
    return g1_ == Poly::xn_minus(field(), n_, theta_.sigma_const());
}

bool RConstaCode::g2_is_zero_marker() const {
    return g2_ == Poly::xn_minus(field(), n_, theta_.tau_const());
}

FpConstaCode RConstaCode::component_1mv() const {
    return FpConstaCode::from_generator(field(), n_, theta_.sigma_const(), g1_);
}

FpConstaCode RConstaCode::component_v() const {
    return FpConstaCode::from_generator(field(), n_, theta_.tau_const(), g2_);
}

std::pair<FpConstaCode, FpConstaCode> RConstaCode::decompose() const {
    return {component_1mv(), component_v()};
}

RPoly RConstaCode::single_generator() const { return RPoly::combine(g1_, g2_); }

std::size_t RConstaCode::size_log_p() const noexcept {
    return 2 * n_ - *g1_.degree() - *g2_.degree();
}

std::uint64_t RConstaCode::size() const {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < size_log_p(); ++i) {
        r *= field().p();
        if (r > ~std::uint64_t(0)) throw cap_exceeded("code size overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

bool RConstaCode::contains(const RVec& w) const {
    if (w.size() != n_) throw invalid_input("codeword length mismatch");
    return component_1mv().contains(sigma_vec(w)) && component_v().contains(tau_vec(w));
}

FpConstaCode RConstaCode::submodule_quotient(const RElem& a) const {
    if (a == RElem::v(field())) return component_1mv();          // (C:v)^sigma
    if (a == RElem::one_minus_v(field())) return component_v();  // (C:(1-v))^tau
    throw precondition_error("submodule quotient supports only v and 1-v");
}

RConstaCode RConstaCode::dual() const {
    const PrimeField& F = field();
    const Poly h1 = Poly::xn_minus(F, n_, theta_.sigma_const()) / g1_;
    const Poly h2 = Poly::xn_minus(F, n_, theta_.tau_const()) / g2_;
    return from_standard_pair(n_, theta_.inverse(), reciprocal_star(h1), reciprocal_star(h2));
}

void RConstaCode::for_each_codeword(const std::function<void(const RVec&)>& fn,
                                    std::uint64_t cap) const {
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < size_log_p(); ++i) total *= field().p();
    if (total > cap) throw cap_exceeded("codeword enumeration over cap");

    const auto as = component_1mv().codewords(cap);
    const auto bs = component_v().codewords(cap);
    for (const auto& a : as) {
        for (const auto& b : bs) fn(rvec_from_crt(field(), a, b)); // v*a + (1-v)*b
    }
}

std::vector<RVec> RConstaCode::codewords(std::uint64_t cap) const {
    std::vector<RVec> out;
    for_each_codeword([&](const RVec& w) { out.push_back(w); }, cap);
    return out;
}

bool RConstaCode::operator==(const RConstaCode& o) const {
    return n_ == o.n_ && theta_ == o.theta_ && g1_ == o.g1_ && g2_ == o.g2_;
}

} // namespace fpv
