#include "fpvcodes/fpcode.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace fpv {

namespace {

unsigned __int128 pow_u128(std::uint64_t base, std::size_t exp) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > (unsigned __int128)1 << 100) return r; // saturate well above any cap
    }
    return r;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("FPVCODES_WORKERS")) {
        const long v = std::atol(env);
        if (v > 1) return static_cast<std::size_t>(v);
    }
    return 1;
}

// Generator-matrix rows x^i * g as length-n vectors (deg(x^i g) < n).
std::vector<std::vector<std::uint64_t>> generator_rows(const Poly& g, std::size_t n, std::size_t k) {
    std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) rows[i][i + j] = g.coeff(j);
    }
    return rows;
}

void add_row(const PrimeField& F, std::vector<std::uint64_t>& cur,
             const std::vector<std::uint64_t>& row) {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = F.add(cur[i], row[i]);
}

// DFS over message digits [0, depth); visits every combination exactly once,
// restoring cur on exit (p row additions are the identity).
template <typename Leaf>
bool dfs(const PrimeField& F, const std::vector<std::vector<std::uint64_t>>& rows,
         std::vector<std::uint64_t>& cur, std::size_t depth, bool nonzero, Leaf&& leaf) {
    if (depth == 0) return leaf(cur, nonzero);
    const std::size_t d = depth - 1;
    if (!dfs(F, rows, cur, d, nonzero, leaf)) return false;
    bool go = true;
    for (std::uint64_t c = 1; c < F.p(); ++c) {
        add_row(F, cur, rows[d]);
        if (go && !dfs(F, rows, cur, d, true, leaf)) go = false;
    }
    add_row(F, cur, rows[d]);
    return go;
}

} // namespace

std::vector<std::uint64_t> constacyclic_shift(const PrimeField& field,
                                              const std::vector<std::uint64_t>& w,
                                              std::uint64_t lambda) {
    if (w.empty()) return w;
    std::vector<std::uint64_t> out;
    out.reserve(w.size());
    out.push_back(field.mul(lambda % field.p(), w.back()));
    out.insert(out.end(), w.begin(), w.end() - 1);
    return out;
}

std::uint64_t hamming_weight(const std::vector<std::uint64_t>& w) {
    std::uint64_t wt = 0;
    for (std::uint64_t c : w) wt += c != 0;
    return wt;
}

FpConstaCode::FpConstaCode(PrimeField field, std::size_t n, std::uint64_t lambda, Poly g, Poly h)
    : field_(field), n_(n), lambda_(lambda), g_(std::move(g)), h_(std::move(h)) {}

FpConstaCode FpConstaCode::from_generator(const PrimeField& field, std::size_t n,
                                          std::uint64_t lambda, const Poly& g) {
    if (n == 0) throw invalid_input("code length must be positive");
    if (g.field() != field) throw invalid_input("generator field mismatch");
    const std::uint64_t lam = lambda % field.p();
    if (lam == 0) throw invalid_input("shift constant lambda must be nonzero");
    if (g.is_zero() || !g.is_monic()) throw precondition_error("generator must be monic");
    const Poly modulus = Poly::xn_minus(field, n, lam);
    auto [h, rem] = divmod(modulus, g);
    if (!rem.is_zero()) {
        throw precondition_error("generator does not divide x^" + std::to_string(n) + "-lambda");
    }
    return FpConstaCode(field, n, lam, g, std::move(h));
}

std::uint64_t FpConstaCode::codeword_count() const {
    const auto c = pow_u128(field_.p(), dim());
    if (c > ~std::uint64_t(0)) throw cap_exceeded("codeword count overflows 64 bits");
    return static_cast<std::uint64_t>(c);
}

bool FpConstaCode::contains(const std::vector<std::uint64_t>& w) const {
    if (w.size() != n_) throw invalid_input("codeword length mismatch");
    return divides(g_, Poly::from_residues(field_, w));
}

Poly FpConstaCode::encode(const Poly& message) const {
    if (message.degree() && *message.degree() >= dim()) {
        throw precondition_error("message degree must be below the code dimension");
    }
    return message * g_;
}

std::vector<std::uint64_t> FpConstaCode::encode_vec(const Poly& message) const {
    const Poly c = encode(message);
    std::vector<std::uint64_t> out(n_, 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c.coeff(i);
    return out;
}

void FpConstaCode::for_each_codeword(
    const std::function<void(const std::vector<std::uint64_t>&)>& fn, std::uint64_t cap) const {
    if (pow_u128(field_.p(), dim()) > cap) throw cap_exceeded("codeword enumeration over cap");
    const auto rows = generator_rows(g_, n_, dim());
    std::vector<std::uint64_t> cur(n_, 0);
    dfs(field_, rows, cur, dim(), false, [&](const std::vector<std::uint64_t>& w, bool) {
        fn(w);
        return true;
    });
}

std::vector<std::vector<std::uint64_t>> FpConstaCode::codewords(std::uint64_t cap) const {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(static_cast<std::size_t>(pow_u128(field_.p(), dim()) > cap ? 0 : codeword_count()));
    for_each_codeword([&](const std::vector<std::uint64_t>& w) { out.push_back(w); }, cap);
    return out;
}

WeightReport FpConstaCode::min_weight(std::uint64_t cap) const {
    const std::size_t k = dim();
    if (k == 0) return {std::nullopt, true}; // zero code: no nonzero word exists
    if (pow_u128(field_.p(), k) > cap) {
        throw cap_exceeded("minimum-weight scan over cap; use min_weight_bounded");
    }

    const auto rows = generator_rows(g_, n_, k);
    const std::uint64_t p = field_.p();

    // Partition on the top message digit; a min-reduction is identical under
    // any partitioning.
    const std::size_t workers = std::min<std::size_t>(worker_count(), p);
    auto scan_top_values = [&](std::uint64_t first, std::uint64_t step) {
        std::uint64_t best = n_ + 1;
        std::vector<std::uint64_t> cur(n_, 0);
        for (std::uint64_t c = first; c < p; c += step) {
            std::fill(cur.begin(), cur.end(), 0);
            for (std::uint64_t i = 0; i < c; ++i) add_row(field_, cur, rows[k - 1]);
            dfs(field_, rows, cur, k - 1, c != 0,
                [&](const std::vector<std::uint64_t>& w, bool nonzero) {
                    if (nonzero) best = std::min(best, hamming_weight(w));
                    return true;
                });
        }
        return best;
    };

    std::uint64_t best;
    if (workers <= 1) {
        best = scan_top_values(0, 1);
    } else {
        std::vector<std::uint64_t> results(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] { results[t] = scan_top_values(t, workers); });
        }
        for (auto& th : pool) th.join();
        best = *std::min_element(results.begin(), results.end());
    }
    return {best, true};
}

WeightReport FpConstaCode::min_weight_bounded(std::uint64_t budget) const {
    const std::size_t k = dim();
    if (k == 0) return {std::nullopt, true};
    const bool complete = pow_u128(field_.p(), k) <= budget;

    const auto rows = generator_rows(g_, n_, k);
    std::vector<std::uint64_t> cur(n_, 0);
    std::uint64_t best = n_ + 1, seen = 0;
    dfs(field_, rows, cur, k, false, [&](const std::vector<std::uint64_t>& w, bool nonzero) {
        if (nonzero) best = std::min(best, hamming_weight(w));
        return ++seen < budget;
    });
    if (best > n_) return {std::nullopt, complete};
    return {best, complete};
}

bool FpConstaCode::shift_closed(std::uint64_t cap) const {
    bool ok = true;
    for_each_codeword(
        [&](const std::vector<std::uint64_t>& w) {
            if (ok && !contains(constacyclic_shift(field_, w, lambda_))) ok = false;
        },
        cap);
    return ok;
}

FpConstaCode FpConstaCode::dual() const {
    return from_generator(field_, n_, field_.inv(lambda_), reciprocal_star(h_));
}

} // namespace fpv
