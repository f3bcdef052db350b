#include "fpvcodes/gray.hpp"

namespace fpv {

namespace {

void require_bijective(const Theta& theta) {
    if (theta.mu() == 0) {
        throw gray_parameter_error("non-bijective Gray parameter: mu = 0");
    }
}

void require_pm(const Theta& theta) {
    if (!theta.is_pm_one_minus_2v()) {
        throw precondition_error("theta must be 1-2v or -1+2v for this identity");
    }
}

} // namespace

Poly gray_poly(const Theta& theta, const RPoly& f, std::size_t n) {
    require_bijective(theta);
    if (f.degree() && *f.degree() >= n) {
        throw precondition_error("gray_poly input must have degree below n");
    }
    const PrimeField& F = theta.field();
    const Poly r = f.additive_r(), q = f.additive_q();
    const std::uint64_t lam = theta.lambda(), mu = theta.mu();
    const std::uint64_t lam_sig = F.mul(lam, theta.sigma_const());

    std::vector<std::uint64_t> img(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t ri = r.coeff(i), qi = q.coeff(i);
        img[i] = F.mul(lam_sig, qi);
        img[n + i] = F.neg(F.add(F.mul(mu, ri), F.mul(theta.sigma_const(), qi)));
    }
    return Poly::from_residues(F, std::move(img));
}

std::vector<std::uint64_t> gray_vec(const Theta& theta, const RVec& c) {
    require_bijective(theta);
    const PrimeField& F = theta.field();
    const std::size_t n = c.size();
    const std::uint64_t lam_sig = F.mul(theta.lambda(), theta.sigma_const());

    std::vector<std::uint64_t> img(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].field() != F) throw invalid_input("gray_vec: mismatched fields");
        const std::uint64_t ri = c[i].a(), qi = c[i].b();
        img[i] = F.mul(lam_sig, qi);
        img[n + i] = F.neg(F.add(F.mul(theta.mu(), ri), F.mul(theta.sigma_const(), qi)));
    }
    return img;
}

bool gray_shift_commutes(const Theta& theta, const RVec& c) {
    require_pm(theta);
    const auto lhs = gray_vec(theta, constacyclic_shift(c, theta.value()));
    const auto rhs = constacyclic_shift(theta.field(), gray_vec(theta, c), 1);
    return lhs == rhs;
}

GrayImage gray_image_code(const RConstaCode& C, std::uint64_t verify_cap) {
    require_bijective(C.theta());
    const Poly product = C.g1() * C.g2();
    const std::size_t len = 2 * C.n();

    if (C.theta().is_pm_one_minus_2v()) {
        // (x^n - (lambda+mu))(x^n - lambda) = x^{2n} - 1 here, so the image
        // is exactly the cyclic code [g1*g2].
        auto code = FpConstaCode::from_generator(C.field(), len, 1, product);
        return GrayImage{C, product, len, true, true, std::move(code)};
    }

    bool verified = false;
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < C.size_log_p(); ++i) total *= C.field().p();
    if (total <= verify_cap) {
        verified = true;
        C.for_each_codeword(
            [&](const RVec& w) {
                const Poly img = gray_poly(C.theta(), rpoly_from_rvec(w), C.n());
                if (!img.is_zero() && !divides(product, img)) {
                    throw std::logic_error("Gray containment violated for " + img.to_string());
                }
            },
            verify_cap);
    }
    return GrayImage{C, product, len, false, verified, std::nullopt};
}

GrayImage gray_dual_image(const RConstaCode& C) {
    require_pm(C.theta());
    return gray_image_code(C.dual());
}

} // namespace fpv
