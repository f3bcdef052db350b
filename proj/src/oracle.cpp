#include "fpvcodes/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace fpv {

namespace {

unsigned __int128 pow_u128(std::uint64_t base, std::size_t exp) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string instance_string(const PrimeField& field, std::size_t n, const Theta* theta) {
    std::ostringstream os;
    os << "p=" << field.p() << " n=" << n;
    if (theta) os << " theta=" << theta->to_string();
    return os.str();
}
AuditReport make_report(std::string claim, std::string instance) {
    AuditReport rep;
    rep.claim = std::move(claim);
    rep.instance = std::move(instance);
    return rep;
}


} // namespace

std::uint64_t Ambient::universe_size() const {
    const auto u = pow_u128(field().p(), 2 * n);
    if (u > kOracleUniverseCap) throw cap_exceeded("oracle universe exceeds p^(2n) cap");
    return static_cast<std::uint64_t>(u);
}

std::string Ambient::to_string() const { return instance_string(field(), n, &theta); }

std::uint32_t encode_rvec(const PrimeField& field, const RVec& w) {
    const std::uint64_t p = field.p();
    std::uint64_t idx = 0, place = 1;
    for (const RElem& c : w) {
        idx += c.sigma() * place;
        place *= p;
        idx += c.tau() * place;
        place *= p;
    }
    return static_cast<std::uint32_t>(idx);
}

RVec decode_rvec(const PrimeField& field, std::size_t n, std::uint32_t idx) {
    const std::uint64_t p = field.p();
    std::uint64_t rest = idx;
    RVec out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t s = rest % p;
        rest /= p;
        const std::uint64_t t = rest % p;
        rest /= p;
        out.push_back(RElem::from_crt(field, static_cast<std::int64_t>(s),
                                      static_cast<std::int64_t>(t)));
    }
    return out;
}

std::uint64_t encode_fp_vec(const PrimeField& field, const std::vector<std::uint64_t>& w) {
    std::uint64_t idx = 0, place = 1;
    for (std::uint64_t c : w) {
        idx += (c % field.p()) * place;
        place *= field.p();
    }
    return idx;
}

bool IdealClosure::contains(std::uint32_t e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

namespace {

// Digitwise sum of two encoded vectors over 2n base-p digits.
std::uint32_t add_encoded(std::uint64_t p, std::size_t digits, std::uint32_t a, std::uint32_t b) {
    std::uint64_t out = 0, place = 1, ra = a, rb = b;
    for (std::size_t i = 0; i < digits; ++i) {
        std::uint64_t s = ra % p + rb % p;
        if (s >= p) s -= p;
        out += s * place;
        place *= p;
        ra /= p;
        rb /= p;
    }
    return static_cast<std::uint32_t>(out);
}

// Additive closure of a move set starting from 0: the R-span when the moves
// are scalar/shift saturated.
std::vector<std::uint32_t> additive_closure(const PrimeField& field, std::size_t n,
                                            std::uint64_t universe,
                                            const std::vector<std::uint32_t>& moves) {
    std::vector<bool> seen(universe, false);
    std::vector<std::uint32_t> queue;
    seen[0] = true;
    queue.push_back(0);
    const std::size_t digits = 2 * n;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t s = queue[head];
        for (std::uint32_t m : moves) {
            const std::uint32_t t = add_encoded(field.p(), digits, s, m);
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<RElem> all_scalars(const PrimeField& field) {
    std::vector<RElem> out;
    out.reserve(field.p() * field.p());
    for (std::uint64_t s = 0; s < field.p(); ++s) {
        for (std::uint64_t t = 0; t < field.p(); ++t) {
            out.push_back(RElem::from_crt(field, static_cast<std::int64_t>(s),
                                          static_cast<std::int64_t>(t)));
        }
    }
    return out;
}

RVec scale(const RElem& alpha, const RVec& w) {
    RVec out;
    out.reserve(w.size());
    for (const RElem& c : w) out.push_back(alpha * c);
    return out;
}

} // namespace

IdealClosure close_ideal(const Ambient& ambient, const std::vector<RVec>& gens) {
    const PrimeField& F = ambient.field();
    const std::uint64_t universe = ambient.universe_size();
    const RElem theta = ambient.theta.value();

    // Saturate the generators under scalars and the theta-shift; the additive
    // closure of the result is the ideal.
    std::vector<std::uint32_t> moves;
    for (const RVec& g : gens) {
        if (g.size() != ambient.n) throw invalid_input("close_ideal: generator length mismatch");
        RVec rotated = g;
        for (std::size_t j = 0; j < ambient.n; ++j) {
            for (const RElem& alpha : all_scalars(F)) {
                if (alpha.is_zero()) continue;
                const std::uint32_t e = encode_rvec(F, scale(alpha, rotated));
                if (e != 0) moves.push_back(e);
            }
            rotated = constacyclic_shift(rotated, theta);
        }
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());

    return IdealClosure{ambient, additive_closure(F, ambient.n, universe, moves)};
}

std::vector<std::uint32_t> linear_span(const PrimeField& field, std::size_t n,
                                       const std::vector<RVec>& gens) {
    const auto u128 = pow_u128(field.p(), 2 * n);
    if (u128 > kOracleUniverseCap) throw cap_exceeded("oracle universe exceeds p^(2n) cap");
    const auto universe = static_cast<std::uint64_t>(u128);

    std::vector<std::uint32_t> moves;
    for (const RVec& g : gens) {
        for (const RElem& alpha : all_scalars(field)) {
            if (alpha.is_zero()) continue;
            const std::uint32_t e = encode_rvec(field, scale(alpha, g));
            if (e != 0) moves.push_back(e);
        }
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    return additive_closure(field, n, universe, moves);
}

bool set_closed_under_theta_shift(const Ambient& ambient,
                                  const std::vector<std::uint32_t>& elements) {
    const PrimeField& F = ambient.field();
    const RElem theta = ambient.theta.value();
    for (std::uint32_t e : elements) {
        const std::uint32_t s = encode_rvec(F, constacyclic_shift(decode_rvec(F, ambient.n, e), theta));
        if (!std::binary_search(elements.begin(), elements.end(), s)) return false;
    }
    return true;
}

bool fp_set_shift_closed(const PrimeField& field, std::uint64_t lambda,
                         const std::vector<std::vector<std::uint64_t>>& elements) {
    std::vector<std::uint64_t> enc;
    enc.reserve(elements.size());
    for (const auto& w : elements) enc.push_back(encode_fp_vec(field, w));
    std::sort(enc.begin(), enc.end());
    for (const auto& w : elements) {
        const auto s = encode_fp_vec(field, constacyclic_shift(field, w, lambda));
        if (!std::binary_search(enc.begin(), enc.end(), s)) return false;
    }
    return true;
}

std::vector<std::uint32_t> brute_orthogonal_complement(const Ambient& ambient,
                                                       const std::vector<std::uint32_t>& code) {
    const PrimeField& F = ambient.field();
    const std::uint64_t universe = ambient.universe_size();

    std::vector<RVec> words;
    words.reserve(code.size());
    for (std::uint32_t e : code) words.push_back(decode_rvec(F, ambient.n, e));

    std::vector<std::uint32_t> out;
    for (std::uint64_t u = 0; u < universe; ++u) {
        const RVec uv = decode_rvec(F, ambient.n, static_cast<std::uint32_t>(u));
        bool orth = true;
        for (const RVec& w : words) {
            if (!inner_product(uv, w).is_zero()) {
                orth = false;
                break;
            }
        }
        if (orth) out.push_back(static_cast<std::uint32_t>(u));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

void AuditReport::fail(std::string what) {
    ok = false;
    if (violations.size() < 16) violations.push_back(std::move(what));
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    os << (ok ? "ok" : "FAIL") << "  " << claim << "  [" << instance << "]  checked=" << checked;
    for (const auto& n : notes) os << "\n    note: " << n;
    for (const auto& v : violations) os << "\n    violation: " << v;
    return os.str();
}

std::string AuditReport::to_json_string() const {
    nlohmann::json j;
    j["claim"] = claim;
    j["instance"] = instance;
    j["status"] = ok ? "ok" : "fail";
    j["checked"] = checked;
    if (!notes.empty()) j["notes"] = notes;
    if (!violations.empty()) j["counterexample"] = violations;
    return j.dump();
}

std::vector<Theta> all_units(const PrimeField& field) {
    std::vector<Theta> out;
    for (std::uint64_t lam = 1; lam < field.p(); ++lam) {
        for (std::uint64_t mu = 0; mu < field.p(); ++mu) {
            if (field.add(lam, mu) == 0) continue;
            out.emplace_back(field, static_cast<std::int64_t>(lam), static_cast<std::int64_t>(mu));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Audits

AuditReport audit_units(const PrimeField& field) {
    AuditReport rep = make_report("unit criterion and closed-form inverse", instance_string(field, 1, nullptr));
    const std::uint64_t p = field.p();
    std::uint64_t units = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
        for (std::uint64_t b = 0; b < p; ++b) {
            const RElem x = RElem::from_additive(field, static_cast<std::int64_t>(a),
                                                 static_cast<std::int64_t>(b));
            // Ground truth by brute-force search, on the additive-form product.
            bool invertible = false;
            for (std::uint64_t c = 0; c < p && !invertible; ++c) {
                for (std::uint64_t d = 0; d < p; ++d) {
                    const RElem y = RElem::from_additive(field, static_cast<std::int64_t>(c),
                                                         static_cast<std::int64_t>(d));
                    if (detail::mul_additive(x, y) == RElem::one(field)) {
                        invertible = true;
                        break;
                    }
                }
            }
            if (invertible != x.is_unit()) {
                rep.fail("unit criterion wrong for " + x.to_string());
            }
            if (invertible) {
                ++units;
                if (detail::mul_additive(x, x.inverse()) != RElem::one(field)) {
                    rep.fail("closed-form inverse wrong for " + x.to_string());
                }
            }
            ++rep.checked;
        }
    }
    if (units != (p - 1) * (p - 1)) {
        rep.fail("unit count " + std::to_string(units) + " != (p-1)^2");
    }
    rep.notes.push_back("units=" + std::to_string(units));
    return rep;
}

namespace {

std::vector<std::uint64_t> pad(const Poly& f, std::size_t n) {
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f.coeff(i);
    return out;
}

RVec times_v(const PrimeField& F, const Poly& f, std::size_t n) {
    return rvec_from_crt(F, pad(f, n), std::vector<std::uint64_t>(n, 0));
}

RVec times_one_minus_v(const PrimeField& F, const Poly& f, std::size_t n) {
    return rvec_from_crt(F, std::vector<std::uint64_t>(n, 0), pad(f, n));
}

// Sorted encodings of the cyclic/constacyclic code [g] in F_p[x]/<x^n - shift>.
std::vector<std::uint64_t> fp_code_set(const PrimeField& F, std::size_t n, std::uint64_t shift,
                                       const Poly& g) {
    auto code = FpConstaCode::from_generator(F, n, shift, g);
    std::vector<std::uint64_t> out;
    code.for_each_codeword(
        [&](const std::vector<std::uint64_t>& w) { out.push_back(encode_fp_vec(F, w)); });
    std::sort(out.begin(), out.end());
    return out;
}

struct DivisorPairs {
    std::vector<Poly> sigma_divs, tau_divs;
};

DivisorPairs divisor_pairs(const PrimeField& F, std::size_t n, const Theta& theta) {
    return {monic_divisors(factor_xn_minus_lambda(F, n, theta.sigma_const())),
            monic_divisors(factor_xn_minus_lambda(F, n, theta.tau_const()))};
}

} // namespace

AuditReport audit_decomposition(const PrimeField& field, std::size_t n, const Theta& theta) {
    AuditReport rep = make_report("decomposition C = vC_{1-v} + (1-v)C_v and submodule quotients", instance_string(field, n, &theta));
    const Ambient ambient{theta, n};
    const std::uint64_t universe = ambient.universe_size();
    const auto divs = divisor_pairs(field, n, theta);

    for (const Poly& d1 : divs.sigma_divs) {
        for (const Poly& d2 : divs.tau_divs) {
            const auto closure =
                close_ideal(ambient, {times_v(field, d1, n), times_one_minus_v(field, d2, n)});
            const auto set1 = fp_code_set(field, n, theta.sigma_const(), d1);
            const auto set2 = fp_code_set(field, n, theta.tau_const(), d2);

            // C as the set of all v*a + (1-v)*b.
            std::vector<std::uint32_t> combo;
            combo.reserve(set1.size() * set2.size());
            std::vector<std::vector<std::uint64_t>> a_words, b_words;
            FpConstaCode::from_generator(field, n, theta.sigma_const(), d1)
                .for_each_codeword([&](const std::vector<std::uint64_t>& w) { a_words.push_back(w); });
            FpConstaCode::from_generator(field, n, theta.tau_const(), d2)
                .for_each_codeword([&](const std::vector<std::uint64_t>& w) { b_words.push_back(w); });
            for (const auto& a : a_words) {
                for (const auto& b : b_words) {
                    combo.push_back(encode_rvec(field, rvec_from_crt(field, a, b)));
                }
            }
            std::sort(combo.begin(), combo.end());
            const std::string tag = " (g1=" + d1.to_string() + ", g2=" + d2.to_string() + ")";
            if (combo != closure.elements) rep.fail("closure != {va+(1-v)b}" + tag);
            if (closure.size() != set1.size() * set2.size()) {
                rep.fail("|C| != |C_{1-v}||C_v|" + tag);
            }

            // (C:v)^sigma and (C:(1-v))^tau by definition-level scans.
            std::vector<std::uint64_t> qv, q1mv;
            for (std::uint64_t r = 0; r < universe; ++r) {
                const RVec rv = decode_rvec(field, n, static_cast<std::uint32_t>(r));
                const RVec vr = scale(RElem::v(field), rv);
                const RVec mv = scale(RElem::one_minus_v(field), rv);
                if (closure.contains(encode_rvec(field, vr))) {
                    qv.push_back(encode_fp_vec(field, sigma_vec(rv)));
                }
                if (closure.contains(encode_rvec(field, mv))) {
                    q1mv.push_back(encode_fp_vec(field, tau_vec(rv)));
                }
            }
            std::sort(qv.begin(), qv.end());
            qv.erase(std::unique(qv.begin(), qv.end()), qv.end());
            std::sort(q1mv.begin(), q1mv.end());
            q1mv.erase(std::unique(q1mv.begin(), q1mv.end()), q1mv.end());
            if (qv != set1) rep.fail("(C:v)^sigma != [g1]" + tag);
            if (q1mv != set2) rep.fail("(C:(1-v))^tau != [g2]" + tag);

            ++rep.checked;
        }
    }
    rep.notes.push_back("divisor pairs=" + std::to_string(rep.checked));
    return rep;
}

AuditReport audit_principality(const PrimeField& field, std::size_t n, const Theta& theta) {
    AuditReport rep = make_report("every 2-generated ideal is principal", instance_string(field, n, &theta));
    const Ambient ambient{theta, n};
    const std::uint64_t universe = ambient.universe_size();

    // All principal ideals, deduplicated by canonical element list.
    std::map<std::vector<std::uint32_t>, std::size_t> principal;
    for (std::uint64_t g = 0; g < universe; ++g) {
        auto cl = close_ideal(ambient, {decode_rvec(field, n, static_cast<std::uint32_t>(g))});
        principal.emplace(std::move(cl.elements), principal.size());
    }
    std::vector<const std::vector<std::uint32_t>*> ideals;
    ideals.resize(principal.size());
    for (const auto& [elems, id] : principal) ideals[id] = &elems;
    rep.notes.push_back("principal ideals=" + std::to_string(ideals.size()));

    // <f,g> = <f> + <g>, so auditing all ideal pairs covers every one of the
    // p^{2n} x p^{2n} generator pairs.
    const std::size_t digits = 2 * n;
    std::vector<bool> mark(universe, false);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i; j < ideals.size(); ++j) {
            std::vector<std::uint32_t> sum;
            for (std::uint32_t a : *ideals[i]) {
                for (std::uint32_t b : *ideals[j]) {
                    const std::uint32_t t = add_encoded(field.p(), digits, a, b);
                    if (!mark[t]) {
                        mark[t] = true;
                        sum.push_back(t);
                    }
                }
            }
            std::sort(sum.begin(), sum.end());
            for (std::uint32_t t : sum) mark[t] = false;
            if (principal.find(sum) == principal.end()) {
                rep.fail("ideal pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not principal");
            }
            ++rep.checked;
        }
    }
    return rep;
}

AuditReport audit_standard_uniqueness(const PrimeField& field, std::size_t n, const Theta& theta) {
    AuditReport rep = make_report("divisor pairs <-> ideals bijectively", instance_string(field, n, &theta));
    const Ambient ambient{theta, n};
    const std::uint64_t universe = ambient.universe_size();
    const auto divs = divisor_pairs(field, n, theta);

    std::map<std::vector<std::uint32_t>, std::string> pair_codes;
    for (const Poly& d1 : divs.sigma_divs) {
        for (const Poly& d2 : divs.tau_divs) {
            auto cl = close_ideal(ambient,
                                  {times_v(field, d1, n), times_one_minus_v(field, d2, n)});
            const std::string tag = "(" + d1.to_string() + ", " + d2.to_string() + ")";
            auto [it, fresh] = pair_codes.emplace(std::move(cl.elements), tag);
            if (!fresh) rep.fail("pairs " + it->second + " and " + tag + " give the same ideal");
            ++rep.checked;
        }
    }
    const std::size_t expected = divs.sigma_divs.size() * divs.tau_divs.size();
    rep.notes.push_back("pairs=" + std::to_string(expected));

    // Surjectivity: every principal ideal arises from some divisor pair, so
    // with injectivity above the map is a bijection onto all ideals.
    std::map<std::vector<std::uint32_t>, std::size_t> principal;
    for (std::uint64_t g = 0; g < universe; ++g) {
        auto cl = close_ideal(ambient, {decode_rvec(field, n, static_cast<std::uint32_t>(g))});
        principal.emplace(std::move(cl.elements), principal.size());
    }
    for (const auto& [elems, id] : principal) {
        if (pair_codes.find(elems) == pair_codes.end()) {
            rep.fail("a principal ideal is missed by every divisor pair");
        }
    }
    if (pair_codes.size() != expected) rep.fail("duplicate ideals among divisor pairs");
    rep.notes.push_back("distinct ideals=" + std::to_string(pair_codes.size()));
    return rep;
}

AuditReport audit_frobenius(const PrimeField& field, std::size_t n, const Theta& theta) {
    AuditReport rep = make_report("|C||C_perp| = p^(2n), brute dual = h* formula dual", instance_string(field, n, &theta));
    const Ambient ambient{theta, n};
    const std::uint64_t universe = ambient.universe_size();
    const auto divs = divisor_pairs(field, n, theta);

    for (const Poly& d1 : divs.sigma_divs) {
        for (const Poly& d2 : divs.tau_divs) {
            const auto closure =
                close_ideal(ambient, {times_v(field, d1, n), times_one_minus_v(field, d2, n)});
            const auto brute = brute_orthogonal_complement(ambient, closure.elements);
            const std::string tag = " (g1=" + d1.to_string() + ", g2=" + d2.to_string() + ")";

            if (static_cast<std::uint64_t>(closure.size()) * brute.size() != universe) {
                rep.fail("|C||C_perp| != p^(2n)" + tag);
            }

            const auto code = RConstaCode::from_standard_pair(n, theta, d1, d2);
            std::vector<std::uint32_t> formula;
            code.dual().for_each_codeword(
                [&](const RVec& w) { formula.push_back(encode_rvec(field, w)); });
            std::sort(formula.begin(), formula.end());
            if (formula != brute) rep.fail("formula dual != brute orthogonal complement" + tag);
            ++rep.checked;
        }
    }
    return rep;
}

AuditReport audit_dual(const PrimeField& field, std::size_t n, const Theta& theta) {
    AuditReport rep = make_report("dual involution, theta^{-1} shift closure, h* formula", instance_string(field, n, &theta));
    const Ambient ambient{theta, n};
    const auto divs = divisor_pairs(field, n, theta);

    for (const Poly& d1 : divs.sigma_divs) {
        for (const Poly& d2 : divs.tau_divs) {
            const auto code = RConstaCode::from_standard_pair(n, theta, d1, d2);
            const auto dual = code.dual();
            const std::string tag = " (g1=" + d1.to_string() + ", g2=" + d2.to_string() + ")";

            if (dual.dual() != code) rep.fail("dual of dual != original" + tag);
            if (!(dual.theta() == theta.inverse())) rep.fail("dual shift is not theta^{-1}" + tag);

            const auto closure =
                close_ideal(ambient, {times_v(field, d1, n), times_one_minus_v(field, d2, n)});
            const auto brute = brute_orthogonal_complement(ambient, closure.elements);
            const Ambient dual_ambient{theta.inverse(), n};
            if (!set_closed_under_theta_shift(dual_ambient, brute)) {
                rep.fail("brute dual not theta^{-1}-constacyclic" + tag);
            }
            std::vector<std::uint32_t> formula;
            dual.for_each_codeword([&](const RVec& w) { formula.push_back(encode_rvec(field, w)); });
            std::sort(formula.begin(), formula.end());
            if (formula != brute) rep.fail("formula dual != brute orthogonal complement" + tag);
            ++rep.checked;
        }
    }
    return rep;
}

AuditReport audit_gray(const PrimeField& field, std::size_t n) {
    AuditReport rep = make_report("Gray map properties", instance_string(field, n, nullptr));
    const std::uint64_t p = field.p();
    const bool small_universe = pow_u128(p, 2 * n) <= kOracleUniverseCap;

    std::vector<Theta> bijective_units;
    for (const Theta& t : all_units(field)) {
        if (t.mu() != 0) bijective_units.push_back(t);
    }
    if (bijective_units.empty()) {
        rep.notes.push_back("no units with mu != 0 (p = 2): nothing to audit");
        return rep;
    }

    // Bijectivity and F_p-linearity, exhaustively on small instances.
    if (p * n <= 8 && small_universe) {
        const Ambient probe{bijective_units.front(), n};
        const std::uint64_t universe = probe.universe_size();
        for (const Theta& t : bijective_units) {
            std::vector<std::uint64_t> images;
            images.reserve(universe);
            std::vector<RVec> vecs;
            vecs.reserve(universe);
            for (std::uint64_t e = 0; e < universe; ++e) {
                vecs.push_back(decode_rvec(field, n, static_cast<std::uint32_t>(e)));
                images.push_back(encode_fp_vec(field, gray_vec(t, vecs.back())));
            }
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
                rep.fail("gray_vec not injective for theta=" + t.to_string());
            }
            for (std::uint64_t i = 0; i < universe; ++i) {
                const auto gi = gray_vec(t, vecs[i]);
                for (std::uint64_t j = 0; j < universe; ++j) {
                    auto sum = gray_vec(t, vecs[j]);
                    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = field.add(sum[k], gi[k]);
                    RVec cij = vecs[i];
                    for (std::size_t k = 0; k < cij.size(); ++k) cij[k] = cij[k] + vecs[j][k];
                    if (gray_vec(t, cij) != sum) {
                        rep.fail("gray_vec not additive for theta=" + t.to_string());
                    }
                }
                for (std::uint64_t a = 0; a < p; ++a) {
                    const RElem alpha = RElem::from_additive(field, static_cast<std::int64_t>(a), 0);
                    auto scaled_img = gi;
                    for (auto& x : scaled_img) x = field.mul(x, a);
                    if (gray_vec(t, scale(alpha, vecs[i])) != scaled_img) {
                        rep.fail("gray_vec not F_p-homogeneous for theta=" + t.to_string());
                    }
                }
                ++rep.checked;
            }
        }
        rep.notes.push_back("bijectivity/linearity exhaustive over " +
                            std::to_string(bijective_units.size()) + " units");
    }

    // Shift commutation on seeded random vectors, both distinguished units.
    std::mt19937_64 rng(0x5eedULL * p + n);
    for (const Theta& t : {Theta(field, 1, -2), Theta(field, -1, 2)}) {
        if (!t.is_pm_one_minus_2v()) continue;
        for (int trial = 0; trial < 1000; ++trial) {
            RVec c;
            c.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                c.push_back(RElem::from_additive(field, static_cast<std::int64_t>(rng() % p),
                                                 static_cast<std::int64_t>(rng() % p)));
            }
            if (!gray_shift_commutes(t, c)) {
                rep.fail("shift commutation failed for theta=" + t.to_string());
                break;
            }
            ++rep.checked;
        }
    }

    if (!small_universe) return rep;

    // Containment for every unit with mu != 0; equality, dual image and
    // cyclicity for the two distinguished units.
    for (const Theta& t : bijective_units) {
        const Ambient ambient{t, n};
        const auto divs = divisor_pairs(field, n, t);
        for (const Poly& d1 : divs.sigma_divs) {
            for (const Poly& d2 : divs.tau_divs) {
                const Poly product = d1 * d2;
                const auto closure =
                    close_ideal(ambient, {times_v(field, d1, n), times_one_minus_v(field, d2, n)});
                const std::string tag =
                    " (theta=" + t.to_string() + ", g1=" + d1.to_string() + ", g2=" + d2.to_string() + ")";

                std::vector<std::uint64_t> image_set;
                image_set.reserve(closure.size());
                for (std::uint32_t e : closure.elements) {
                    const RVec w = decode_rvec(field, n, e);
                    const auto img = gray_vec(t, w);
                    image_set.push_back(encode_fp_vec(field, img));
                    const Poly img_poly = Poly::from_residues(field, img);
                    if (!img_poly.is_zero() && !divides(product, img_poly)) {
                        rep.fail("phi(C) not within <g1*g2>" + tag);
                    }
                }
                std::sort(image_set.begin(), image_set.end());

                if (t.is_pm_one_minus_2v()) {
                    if (image_set != fp_code_set(field, 2 * n, 1, product)) {
                        rep.fail("phi(C) != [g1*g2]" + tag);
                    }
                    // phi(C^perp) via the brute dual, against both [h1*h2*]
                    // and the brute dual of the image set.
                    const auto brute_dual = brute_orthogonal_complement(ambient, closure.elements);
                    std::vector<std::uint64_t> dual_image;
                    dual_image.reserve(brute_dual.size());
                    for (std::uint32_t e : brute_dual) {
                        dual_image.push_back(
                            encode_fp_vec(field, gray_vec(t, decode_rvec(field, n, e))));
                    }
                    std::sort(dual_image.begin(), dual_image.end());

                    const Poly h1 = Poly::xn_minus(field, n, t.sigma_const()) / d1;
                    const Poly h2 = Poly::xn_minus(field, n, t.tau_const()) / d2;
                    if (dual_image !=
                        fp_code_set(field, 2 * n, 1, reciprocal_star(h1) * reciprocal_star(h2))) {
                        rep.fail("phi(C^perp) != [h1* h2*]" + tag);
                    }

                    // (phi(C))^perp by scanning F_p^{2n}.
                    std::vector<std::uint64_t> image_dual;
                    const std::uint64_t fp_universe =
                        static_cast<std::uint64_t>(pow_u128(p, 2 * n));
                    std::vector<std::vector<std::uint64_t>> image_words;
                    for (std::uint32_t e : closure.elements) {
                        image_words.push_back(gray_vec(t, decode_rvec(field, n, e)));
                    }
                    for (std::uint64_t u = 0; u < fp_universe; ++u) {
                        std::vector<std::uint64_t> uv(2 * n);
                        std::uint64_t rest = u;
                        for (std::size_t i = 0; i < 2 * n; ++i) {
                            uv[i] = rest % p;
                            rest /= p;
                        }
                        bool orth = true;
                        for (const auto& w : image_words) {
                            std::uint64_t acc = 0;
                            for (std::size_t i = 0; i < 2 * n; ++i) {
                                acc = field.add(acc, field.mul(uv[i], w[i]));
                            }
                            if (acc != 0) {
                                orth = false;
                                break;
                            }
                        }
                        if (orth) image_dual.push_back(u);
                    }
                    std::sort(image_dual.begin(), image_dual.end());
                    if (dual_image != image_dual) {
                        rep.fail("phi(C^perp) != (phi(C))^perp" + tag);
                    }

                    // Constacyclic source => cyclic image.
                    std::vector<std::vector<std::uint64_t>> image_vecs(image_words);
                    if (!fp_set_shift_closed(field, 1, image_vecs)) {
                        rep.fail("image of constacyclic code is not cyclic" + tag);
                    }
                }
                ++rep.checked;
            }
        }

        // Cyclicity criterion, both directions, over the single-generator
        // submodule family (linear but generally not constacyclic).
        if (t.is_pm_one_minus_2v()) {
            const std::uint64_t universe = ambient.universe_size();
            std::size_t non_constacyclic = 0;
            for (std::uint64_t g = 0; g < universe; ++g) {
                const auto span =
                    linear_span(field, n, {decode_rvec(field, n, static_cast<std::uint32_t>(g))});
                const bool constacyclic = set_closed_under_theta_shift(ambient, span);
                std::vector<std::vector<std::uint64_t>> images;
                images.reserve(span.size());
                for (std::uint32_t e : span) {
                    images.push_back(gray_vec(t, decode_rvec(field, n, e)));
                }
                const bool cyclic = fp_set_shift_closed(field, 1, images);
                if (constacyclic != cyclic) {
                    rep.fail("cyclicity criterion violated for generator #" + std::to_string(g) +
                             " theta=" + t.to_string());
                }
                if (!constacyclic) ++non_constacyclic;
                ++rep.checked;
            }
            if (n >= 2 && non_constacyclic == 0) {
                rep.fail("fixture family contains no non-constacyclic code");
            }
            rep.notes.push_back("non-constacyclic fixtures for theta=" + t.to_string() + ": " +
                                std::to_string(non_constacyclic));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Golden example

void ExampleReport::check(bool cond, const std::string& what) {
    checks.push_back(std::string(cond ? "ok: " : "FAIL: ") + what);
    if (!cond) ok = false;
}

std::string ExampleReport::to_text() const {
    std::ostringstream os;
    os << (ok ? "ok" : "FAIL") << "  golden example reproduction\n";
    for (const auto& c : checks) os << "    " << c << "\n";
    return os.str();
}

std::string ExampleReport::to_json_string() const {
    nlohmann::json j;
    j["claim"] = "golden example reproduction";
    j["status"] = ok ? "ok" : "fail";
    j["checks"] = checks;
    j["g1"] = resolved_g1;
    j["g2"] = resolved_g2;
    j["size_log_p"] = code_size_log_p;
    j["dual_size_log_p"] = dual_size_log_p;
    j["gray"] = {{"length", gray_length}, {"dim", gray_dim}, {"min_weight", gray_min_weight},
                 {"generator", gray_generator}};
    return j.dump();
}

ExampleReport reproduce_example() {
    ExampleReport rep;
    const PrimeField F3(3);
    const Theta theta(F3, -1, 2); // -1 + 2v

    // Factor lists over F_3, frozen in canonical order.
    const Poly x_m1(F3, {-1, 1}), x_p1(F3, {1, 1});
    const Poly quintic_plus(F3, {1, 1, 1, 1, 1});   // x^4+x^3+x^2+x+1
    const Poly quintic_alt(F3, {1, -1, 1, -1, 1});  // x^4-x^3+x^2-x+1
    const Poly quadratic(F3, {1, 0, 1});            // x^2+1
    const Poly quartic_a(F3, {1, -1, 0, 1, 1});     // x^4+x^3-x+1
    const Poly quartic_b(F3, {1, 1, 0, -1, 1});     // x^4-x^3+x+1

    const auto fact_minus = factor_xn_minus_lambda(F3, 10, 1);
    std::vector<Poly> expect_minus = {x_p1, x_m1, quintic_plus, quintic_alt};
    std::sort(expect_minus.begin(), expect_minus.end(), canonical_less);
    {
        bool same = fact_minus.factors().size() == 4;
        for (std::size_t i = 0; same && i < 4; ++i) {
            same = fact_minus.factors()[i].first == expect_minus[i] &&
                   fact_minus.factors()[i].second == 1;
        }
        rep.check(same, "x^10-1 factors as (x-1)(x+1)(x^4+x^3+x^2+x+1)(x^4-x^3+x^2-x+1)");
    }

    const auto fact_plus = factor_xn_minus_lambda(F3, 10, F3.neg(1));
    std::vector<Poly> expect_plus = {quadratic, quartic_a, quartic_b};
    std::sort(expect_plus.begin(), expect_plus.end(), canonical_less);
    {
        bool same = fact_plus.factors().size() == 3;
        for (std::size_t i = 0; same && i < 3; ++i) {
            same = fact_plus.factors()[i].first == expect_plus[i] &&
                   fact_plus.factors()[i].second == 1;
        }
        rep.check(same, "x^10+1 factors as (x^2+1)(x^4+x^3-x+1)(x^4-x^3+x+1)");
    }

    // The two quartics of the published generator. Resolve which slot each
    // occupies for theta = -1+2v (sigma modulus x^10-1, tau modulus x^10+1):
    // divisibility picks exactly one orientation.
    const Poly A = quartic_a;   // x^4+x^3-x+1, divides x^10+1
    const Poly B = quintic_alt; // x^4-x^3+x^2-x+1, divides x^10-1
    const Poly mod_sigma = Poly::xn_minus(F3, 10, theta.sigma_const());
    const Poly mod_tau = Poly::xn_minus(F3, 10, theta.tau_const());
    rep.check(divides(B, mod_sigma) && divides(A, mod_tau) && !divides(A, mod_sigma) &&
                  !divides(B, mod_tau),
              "slot resolution: g1 = x^4-x^3+x^2-x+1 | x^10-1, g2 = x^4+x^3-x+1 | x^10+1");

    // The published orientation v*A + (1-v)*B has sigma part coprime to the
    // sigma modulus, so it generates the full space; the resolved orientation
    // generates the intended index-3^12 ideal.
    const RConstaCode printed = RConstaCode::standardize(10, theta, {combine(A, B)});
    rep.check(printed.size_log_p() == 20, "published orientation generates the full space R^10");
    const RConstaCode C = RConstaCode::standardize(10, theta, {combine(B, A)});
    rep.check(C.g1() == B && C.g2() == A, "standardize(v*g1 + (1-v)*g2) returns the resolved pair");
    rep.resolved_g1 = C.g1().to_string();
    rep.resolved_g2 = C.g2().to_string();

    rep.code_size_log_p = C.size_log_p();
    rep.check(C.size_log_p() == 12, "|C| = 3^12");
    rep.dual_size_log_p = C.dual().size_log_p();
    rep.check(C.dual().size_log_p() == 8, "|C_perp| = 3^8");

    const GrayImage img = gray_image_code(C);
    const Poly product = A * B;
    rep.gray_generator = img.image_generator.to_string();
    rep.check(img.equality_mode, "theta = -1+2v is a distinguished unit");
    rep.check(img.image_generator == product,
              "Gray generator equals (x^4+x^3-x+1)(x^4-x^3+x^2-x+1)");
    rep.gray_length = img.ambient_len;
    rep.gray_dim = img.code ? img.code->dim() : 0;
    rep.check(img.ambient_len == 20 && img.code && img.code->dim() == 12,
              "Gray image is a [20, 12] cyclic code");

    const WeightReport wt = img.code->min_weight();
    rep.gray_min_weight = wt.weight.value_or(0);
    rep.check(wt.exact && wt.weight && *wt.weight == 4,
              "minimum weight 4 by full enumeration of 3^12 codewords");

    // Cross-check: under theta' = 1-2v the published polynomial itself is in
    // standard orientation and yields the same Gray generator.
    const Theta theta_alt(F3, 1, -2);
    const RConstaCode C_alt = RConstaCode::standardize(10, theta_alt, {combine(A, B)});
    rep.check(C_alt.g1() == A && C_alt.g2() == B && C_alt.g1() * C_alt.g2() == product,
              "under theta = 1-2v the published orientation is standard with the same Gray generator");

    return rep;
}

} // namespace fpv
