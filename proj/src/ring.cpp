#include "fpvcodes/ring.hpp"

#include <algorithm>
#include <sstream>

namespace fpv {

RElem RElem::from_additive(PrimeField field, std::int64_t a, std::int64_t b) {
    const std::uint64_t ra = field.reduce_signed(a);
    const std::uint64_t rb = field.reduce_signed(b);
    return RElem(field, field.add(ra, rb), ra); // sigma = a+b, tau = a
}

RElem RElem::from_crt(PrimeField field, std::int64_t sigma, std::int64_t tau) {
    return RElem(field, field.reduce_signed(sigma), field.reduce_signed(tau));
}

RElem RElem::operator+(const RElem& o) const {
    if (field_ != o.field_) throw invalid_input("RElem: mismatched fields");
    return RElem(field_, field_.add(sigma_, o.sigma_), field_.add(tau_, o.tau_));
}

RElem RElem::operator-(const RElem& o) const {
    if (field_ != o.field_) throw invalid_input("RElem: mismatched fields");
    return RElem(field_, field_.sub(sigma_, o.sigma_), field_.sub(tau_, o.tau_));
}

RElem RElem::operator*(const RElem& o) const {
    if (field_ != o.field_) throw invalid_input("RElem: mismatched fields");
    return RElem(field_, field_.mul(sigma_, o.sigma_), field_.mul(tau_, o.tau_));
}

RElem RElem::operator-() const { return RElem(field_, field_.neg(sigma_), field_.neg(tau_)); }

RElem RElem::inverse() const {
    if (!is_unit()) throw precondition_error("RElem: not a unit");
    const std::uint64_t lambda = a(), mu = b();
    const std::uint64_t li = field_.inv(lambda);
    const std::uint64_t si = field_.inv(field_.add(lambda, mu));
    const std::uint64_t bb = field_.neg(field_.mul(si, field_.mul(mu, li)));
    return from_additive(field_, static_cast<std::int64_t>(li), static_cast<std::int64_t>(bb));
}

std::string RElem::to_string() const {
    std::ostringstream os;
    os << a() << "+v*" << b();
    return os.str();
}

namespace detail {
RElem mul_additive(const RElem& x, const RElem& y) {
    const PrimeField& F = x.field();
    if (F != y.field()) throw invalid_input("RElem: mismatched fields");
    // (a+vb)(c+vd) = ac + v(ad+bc+bd)
    const std::uint64_t a = x.a(), b = x.b(), c = y.a(), d = y.b();
    const std::uint64_t ac = F.mul(a, c);
    const std::uint64_t vpart = F.add(F.add(F.mul(a, d), F.mul(b, c)), F.mul(b, d));
    return RElem::from_additive(F, static_cast<std::int64_t>(ac), static_cast<std::int64_t>(vpart));
}
} // namespace detail

// ---------------------------------------------------------------------------
// Theta

Theta::Theta(PrimeField field, std::int64_t lambda, std::int64_t mu)
    : field_(field), lambda_(field.reduce_signed(lambda)), mu_(field.reduce_signed(mu)) {
    if (lambda_ == 0 || field_.add(lambda_, mu_) == 0) {
        throw invalid_input("theta = lambda + v*mu is not a unit (need lambda != 0 and lambda+mu != 0)");
    }
}

Theta Theta::inverse() const {
    const RElem inv = value().inverse();
    return Theta(field_, static_cast<std::int64_t>(inv.a()), static_cast<std::int64_t>(inv.b()));
}

bool Theta::is_pm_one_minus_2v() const noexcept {
    const std::uint64_t one = 1, minus_one = field_.neg(1);
    if (one == minus_one) return false; // p = 2: 1-2v degenerates to 1 (mu = 0)
    const std::uint64_t s = sigma_const(), t = tau_const();
    return (s == one && t == minus_one) || (s == minus_one && t == one);
}

// ---------------------------------------------------------------------------
// RPoly

RPoly::RPoly(PrimeField field) : field_(field) {}

RPoly::RPoly(PrimeField field, const std::vector<RElem>& coeffs) : field_(field) {
    sigma_.reserve(coeffs.size());
    tau_.reserve(coeffs.size());
    for (const RElem& c : coeffs) {
        if (c.field() != field_) throw invalid_input("RPoly: mismatched fields");
        sigma_.push_back(c.sigma());
        tau_.push_back(c.tau());
    }
    sync_len();
}

RPoly RPoly::combine(const Poly& sigma_part, const Poly& tau_part) {
    if (sigma_part.field() != tau_part.field()) throw invalid_input("combine: mismatched fields");
    RPoly f(sigma_part.field());
    const std::size_t len = std::max(sigma_part.size(), tau_part.size());
    f.sigma_.resize(len, 0);
    f.tau_.resize(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        f.sigma_[i] = sigma_part.coeff(i);
        f.tau_[i] = tau_part.coeff(i);
    }
    f.sync_len();
    return f;
}

RPoly RPoly::from_additive(const Poly& r, const Poly& q) {
    // a + v*b has sigma = a+b, tau = a.
    return combine(r + q, r);
}

void RPoly::sync_len() {
    std::size_t len = sigma_.size();
    while (len > 0 && sigma_[len - 1] == 0 && tau_[len - 1] == 0) --len;
    sigma_.resize(len);
    tau_.resize(len);
    len_ = len;
}

Poly RPoly::sigma() const {
    return Poly::from_residues(field_, sigma_);
}

Poly RPoly::tau() const {
    return Poly::from_residues(field_, tau_);
}

Poly RPoly::additive_q() const {
    std::vector<std::uint64_t> c(len_);
    for (std::size_t i = 0; i < len_; ++i) c[i] = field_.sub(sigma_[i], tau_[i]);
    return Poly::from_residues(field_, std::move(c));
}

std::optional<std::size_t> RPoly::degree() const noexcept {
    if (len_ == 0) return std::nullopt;
    return len_ - 1;
}

RElem RPoly::coeff(std::size_t i) const {
    if (i >= len_) return RElem::zero(field_);
    return RElem::from_crt(field_, static_cast<std::int64_t>(sigma_[i]),
                           static_cast<std::int64_t>(tau_[i]));
}

RPoly RPoly::operator+(const RPoly& o) const {
    return combine(sigma() + o.sigma(), tau() + o.tau());
}

RPoly RPoly::operator-(const RPoly& o) const {
    return combine(sigma() - o.sigma(), tau() - o.tau());
}

RPoly RPoly::operator*(const RPoly& o) const {
    return combine(sigma() * o.sigma(), tau() * o.tau());
}

bool RPoly::operator==(const RPoly& o) const {
    return field_ == o.field_ && sigma_ == o.sigma_ && tau_ == o.tau_;
}

std::string RPoly::to_string() const {
    if (len_ == 0) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < len_; ++i) {
        if (i) os << ", ";
        os << coeff(i).to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Vectors over R

RVec rvec_zero(PrimeField field, std::size_t n) { return RVec(n, RElem::zero(field)); }

RVec constacyclic_shift(const RVec& c, const RElem& theta) {
    if (c.empty()) return c;
    RVec out;
    out.reserve(c.size());
    out.push_back(theta * c.back());
    out.insert(out.end(), c.begin(), c.end() - 1);
    return out;
}

RElem inner_product(const RVec& u, const RVec& w) {
    if (u.size() != w.size() || u.empty()) throw invalid_input("inner_product: length mismatch");
    RElem acc = RElem::zero(u[0].field());
    for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * w[i];
    return acc;
}

std::vector<std::uint64_t> sigma_vec(const RVec& c) {
    std::vector<std::uint64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].sigma();
    return out;
}

std::vector<std::uint64_t> tau_vec(const RVec& c) {
    std::vector<std::uint64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].tau();
    return out;
}

RVec rvec_from_crt(PrimeField field, const std::vector<std::uint64_t>& sigma,
                   const std::vector<std::uint64_t>& tau) {
    if (sigma.size() != tau.size()) throw invalid_input("rvec_from_crt: length mismatch");
    RVec out;
    out.reserve(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        out.push_back(RElem::from_crt(field, static_cast<std::int64_t>(sigma[i]),
                                      static_cast<std::int64_t>(tau[i])));
    }
    return out;
}

RPoly rpoly_from_rvec(const RVec& c) {
    if (c.empty()) throw invalid_input("rpoly_from_rvec: empty vector");
    return RPoly(c[0].field(), c);
}

RVec rvec_from_rpoly(const RPoly& f, std::size_t n) {
    if (f.degree() && *f.degree() >= n) {
        throw precondition_error("rvec_from_rpoly: degree exceeds length");
    }
    RVec out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f.coeff(i));
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c != ' ' && c != '\t') out.push_back(c);
    }
    return out;
}

std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw invalid_input("empty integer");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw invalid_input("bad integer: '" + s + "'");
    }
    if (pos != s.size()) throw invalid_input("bad integer: '" + s + "'");
    return v;
}

} // namespace

RElem parse_relem(PrimeField field, const std::string& raw) {
    const std::string s = strip(raw);
    if (s.empty()) throw invalid_input("empty ring element");

    if (s.rfind("crt:", 0) == 0) {
        const std::string body = s.substr(4);
        if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
            throw invalid_input("bad crt element: '" + raw + "'");
        }
        const std::string inner = body.substr(1, body.size() - 2);
        const std::size_t comma = inner.find(',');
        if (comma == std::string::npos) throw invalid_input("bad crt element: '" + raw + "'");
        return RElem::from_crt(field, parse_int(inner.substr(0, comma)),
                               parse_int(inner.substr(comma + 1)));
    }

    // Additive form: [a][+|-][k]v[*b] in any of the usual spellings.
    std::int64_t a = 0, b = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])))) ++j;
        std::int64_t mag = 1;
        bool have_digits = j > i;
        if (have_digits) mag = parse_int(s.substr(i, j - i));
        i = j;
        if (i < s.size() && s[i] == '*') ++i; // "2*v"
        if (i < s.size() && s[i] == 'v') {
            ++i;
            if (i < s.size() && s[i] == '*') { // "v*2"
                ++i;
                std::size_t k = i;
                if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw invalid_input("bad ring element: '" + raw + "'");
                mag *= parse_int(s.substr(i, k - i));
                i = k;
            }
            b += sign * mag;
        } else {
            if (!have_digits) throw invalid_input("bad ring element: '" + raw + "'");
            a += sign * mag;
        }
        any = true;
    }
    if (!any) throw invalid_input("bad ring element: '" + raw + "'");
    return RElem::from_additive(field, a, b);
}

} // namespace fpv
