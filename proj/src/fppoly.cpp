#include "fpvcodes/fppoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fpv {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2) throw invalid_input("p must be prime");
    if (p % 2 == 0) {
        if (p != 2) throw invalid_input("p must be prime");
        return;
    }
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) throw invalid_input("p must be prime");
    }
}

std::uint64_t PrimeField::reduce_signed(std::int64_t v) const noexcept {
    const auto sp = static_cast<std::int64_t>(p_);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
    std::uint64_t r = 1 % p_, b = base % p_;
    while (exp) {
        if (exp & 1) r = mul(r, b);
        b = mul(b, b);
        exp >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw precondition_error("division by zero in F_p");
    return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(PrimeField field, std::vector<std::int64_t> coeffs) : field_(field) {
    coeffs_.reserve(coeffs.size());
    for (std::int64_t c : coeffs) coeffs_.push_back(field_.reduce_signed(c));
    trim();
}

Poly Poly::from_residues(PrimeField field, std::vector<std::uint64_t> coeffs) {
    Poly f(field);
    f.coeffs_ = std::move(coeffs);
    for (auto& c : f.coeffs_) c %= field.p();
    f.trim();
    return f;
}

Poly Poly::xn_minus(PrimeField field, std::size_t n, std::uint64_t lambda) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = field.neg(lambda % field.p());
    c[n] = 1;
    return from_residues(field, std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::uint64_t Poly::leading() const {
    if (coeffs_.empty()) throw precondition_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_field(o);
    std::vector<std::uint64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), o.coeff(i));
    return from_residues(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    check_field(o);
    std::vector<std::uint64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), o.coeff(i));
    return from_residues(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    check_field(o);
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<std::uint64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            c[i + j] = field_.add(c[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return from_residues(field_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<std::uint64_t> c(coeffs_);
    for (auto& x : c) x = field_.neg(x);
    return from_residues(field_, std::move(c));
}

Poly Poly::scaled(std::uint64_t s) const {
    s %= field_.p();
    std::vector<std::uint64_t> c(coeffs_);
    for (auto& x : c) x = field_.mul(x, s);
    return from_residues(field_, std::move(c));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<std::uint64_t> c(coeffs_.size() + k, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return from_residues(field_, std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) throw precondition_error("cannot normalize the zero polynomial");
    if (coeffs_.back() == 1) return *this;
    return scaled(field_.inv(coeffs_.back()));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return zero(field_);
    std::vector<std::uint64_t> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        c[i - 1] = field_.mul(coeffs_[i], i % field_.p());
    }
    return from_residues(field_, std::move(c));
}

std::uint64_t Poly::eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), coeffs_[i]);
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        std::uint64_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw invalid_input("Poly: mismatched fields");
    if (b.is_zero()) throw invalid_input("division by zero polynomial");
    const PrimeField& F = a.field();
    const std::size_t db = *b.degree();
    if (a.is_zero() || *a.degree() < db) return {Poly::zero(F), a};

    std::vector<std::uint64_t> rem(a.coeffs());
    std::vector<std::uint64_t> quo(rem.size() - db, 0);
    const std::uint64_t lead_inv = F.inv(b.leading());
    for (std::size_t i = rem.size(); i-- > db;) {
        std::uint64_t c = F.mul(rem[i], lead_inv);
        if (c == 0) continue;
        quo[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeff(j)));
        }
    }
    return {Poly::from_residues(F, std::move(quo)), Poly::from_residues(F, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw invalid_input("gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& base, unsigned __int128 exp, const Poly& mod) {
    Poly r = Poly::one(base.field()) % mod;
    Poly b = base % mod;
    while (exp) {
        if (exp & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return r;
}

bool canonical_less(const Poly& a, const Poly& b) {
    const bool az = a.is_zero(), bz = b.is_zero();
    if (az || bz) return az && !bz;
    if (*a.degree() != *b.degree()) return *a.degree() < *b.degree();
    return a.coeffs() < b.coeffs(); // same degree: lexicographic, constant first
}

// ---------------------------------------------------------------------------
// Irreducibility and factorization

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// x^{p^k} mod f for k = 1..d, by iterated Frobenius powering.
std::vector<Poly> frobenius_powers(const Poly& f, std::size_t d) {
    const PrimeField& F = f.field();
    std::vector<Poly> out;
    out.reserve(d);
    Poly cur = Poly::x(F) % f;
    for (std::size_t k = 1; k <= d; ++k) {
        cur = powmod(cur, F.p(), f);
        out.push_back(cur);
    }
    return out;
}

} // namespace

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || *f.degree() == 0) return false;
    const Poly m = f.monic();
    const PrimeField& F = m.field();
    const std::size_t d = *m.degree();
    const Poly x = Poly::x(F) % m;

    const auto frob = frobenius_powers(m, d);
    if (frob[d - 1] != x) return false; // f must divide x^{p^d} - x
    for (std::uint64_t q : prime_divisors(d)) {
        const Poly diff = frob[d / q - 1] - x;
        if (diff.is_zero()) return false;
        if (!gcd(m, diff).is_one()) return false;
    }
    return true;
}

namespace {

// f(x) = u(x^p) -> u; coefficientwise p-th roots are identities over F_p.
Poly pth_root(const Poly& f) {
    const std::uint64_t p = f.field().p();
    std::vector<std::uint64_t> c;
    c.reserve(f.size() / p + 1);
    for (std::size_t i = 0; i < f.size(); i += p) c.push_back(f.coeff(i));
    return Poly::from_residues(f.field(), std::move(c));
}

// Squarefree decomposition over F_p: pairwise coprime monic squarefree parts
// z with f = prod z^mult.
void squarefree_parts(const Poly& f, std::size_t mult_scale,
                      std::vector<std::pair<Poly, std::size_t>>& out) {
    if (f.is_one()) return;
    const Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree_parts(pth_root(f), mult_scale * f.field().p(), out);
        return;
    }
    Poly c = gcd(f, df);
    Poly w = f / c;
    std::size_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.emplace_back(z, i * mult_scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree_parts(pth_root(c), mult_scale * f.field().p(), out);
}

// Distinct-degree split of a monic squarefree polynomial: (product, d) blocks.
std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& f) {
    const PrimeField& F = f.field();
    std::vector<std::pair<Poly, std::size_t>> blocks;
    Poly g = f;
    Poly h = Poly::x(F) % g;
    std::size_t d = 0;
    while (!g.is_one() && 2 * (d + 1) <= *g.degree()) {
        ++d;
        h = powmod(h, F.p(), g);
        Poly gd = gcd(h - (Poly::x(F) % g), g);
        if (!gd.is_one()) {
            blocks.emplace_back(gd, d);
            g = g / gd;
            if (g.is_one()) return blocks;
            h = h % g;
        }
    }
    if (!g.is_one()) blocks.emplace_back(g, *g.degree());
    return blocks;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
    }
    return h;
}

Poly random_poly_below(const PrimeField& F, std::size_t deg_bound, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(deg_bound);
    for (auto& x : c) x = rng() % F.p();
    return Poly::from_residues(F, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus; trace construction for p = 2).
void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const PrimeField& F = f.field();
    if (*f.degree() == d) {
        out.push_back(f);
        return;
    }
    while (true) {
        Poly a = random_poly_below(F, *f.degree(), rng);
        if (a.is_zero()) continue;
        Poly g = gcd(a, f);
        if (!g.is_one()) {
            if (*g.degree() < *f.degree()) {
                equal_degree(g, d, rng, out);
                equal_degree(f / g, d, rng, out);
                return;
            }
            continue;
        }
        Poly b(F);
        if (F.p() == 2) {
            // Trace map a + a^2 + ... + a^{2^{d-1}} mod f.
            b = a;
            Poly t = a;
            for (std::size_t i = 1; i < d; ++i) {
                t = powmod(t, 2, f);
                b = b + t;
            }
        } else {
            // Norm ladder a^{1+p+...+p^{d-1}}, then the (p-1)/2 power:
            // together a^{(p^d-1)/2} without any wide exponent.
            Poly c = a, t = a;
            for (std::size_t i = 1; i < d; ++i) {
                t = powmod(t, F.p(), f);
                c = (c * t) % f;
            }
            b = powmod(c, (F.p() - 1) / 2, f) - Poly::one(F);
        }
        if (b.is_zero()) continue;
        g = gcd(b, f);
        if (!g.is_one() && *g.degree() < *f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace

Factorization::Factorization(Poly target, std::vector<std::pair<Poly, std::size_t>> factors)
    : target_(std::move(target)), factors_(std::move(factors)) {
    if (target_.is_zero() || !target_.is_monic()) {
        throw precondition_error("factorization target must be monic and nonzero");
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    Poly prod = Poly::one(target_.field());
    for (const auto& [f, e] : factors_) {
        if (!f.is_monic() || !is_irreducible(f)) {
            throw precondition_error("factor is not a monic irreducible: " + f.to_string());
        }
        for (std::size_t i = 0; i < e; ++i) prod = prod * f;
    }
    if (prod != target_) throw precondition_error("factor product does not reproduce the target");
}

std::size_t Factorization::divisor_count() const noexcept {
    std::size_t n = 1;
    for (const auto& [f, e] : factors_) n *= e + 1;
    return n;
}

Factorization factor_monic(const Poly& f) {
    if (f.is_zero() || !f.is_monic()) throw invalid_input("factor_monic needs a monic polynomial");
    const PrimeField& F = f.field();

    std::uint64_t seed = fnv1a(1469598103934665603ULL, F.p());
    for (std::uint64_t c : f.coeffs()) seed = fnv1a(seed, c);
    std::mt19937_64 rng(seed);

    std::vector<std::pair<Poly, std::size_t>> sqf;
    squarefree_parts(f, 1, sqf);

    std::vector<std::pair<Poly, std::size_t>> irr;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> split;
            equal_degree(block, d, rng, split);
            for (auto& g : split) irr.emplace_back(std::move(g), mult);
        }
    }
    return Factorization(f, std::move(irr));
}

Factorization factor_xn_minus_lambda(const PrimeField& field, std::size_t n, std::uint64_t lambda) {
    if (n == 0) throw invalid_input("length n must be positive");
    if (lambda % field.p() == 0) throw invalid_input("lambda must be nonzero");
    return factor_monic(Poly::xn_minus(field, n, lambda));
}

std::vector<Poly> monic_divisors(const Factorization& f) {
    const auto& fs = f.factors();
    std::vector<Poly> out;
    out.reserve(f.divisor_count());
    std::vector<std::size_t> exps(fs.size(), 0);
    while (true) {
        Poly d = Poly::one(f.target().field());
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t e = 0; e < exps[i]; ++e) d = d * fs[i].first;
        }
        out.push_back(std::move(d));
        std::size_t i = 0;
        while (i < fs.size() && exps[i] == fs[i].second) exps[i++] = 0;
        if (i == fs.size()) break;
        ++exps[i];
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Poly reciprocal_star(const Poly& h) {
    if (h.is_zero() || h.constant_term() == 0) {
        throw precondition_error("reciprocal_star needs a nonzero constant term");
    }
    std::vector<std::uint64_t> c(h.coeffs().rbegin(), h.coeffs().rend());
    return Poly::from_residues(h.field(), std::move(c)).scaled(h.field().inv(h.constant_term()));
}

} // namespace fpv
