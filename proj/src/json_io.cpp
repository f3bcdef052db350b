#include "fpvcodes/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace fpv {

namespace {

nlohmann::json poly_json(const Poly& f) { return nlohmann::json(f.coeffs()); }

Poly poly_from_json(const PrimeField& field, const nlohmann::json& j) {
    std::vector<std::uint64_t> c;
    for (const auto& x : j) c.push_back(x.get<std::uint64_t>());
    return Poly::from_residues(field, std::move(c));
}

} // namespace

std::string fp_code_to_json(const FpConstaCode& code) {
    nlohmann::json j;
    j["p"] = code.field().p();
    j["n"] = code.n();
    j["lambda"] = code.lambda();
    j["g"] = poly_json(code.generator());
    j["h"] = poly_json(code.check_poly());
    j["k"] = code.dim();
    return j.dump();
}

FpConstaCode fp_code_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const PrimeField field(j.at("p").get<std::uint64_t>());
    return FpConstaCode::from_generator(field, j.at("n").get<std::size_t>(),
                                        j.at("lambda").get<std::uint64_t>(),
                                        poly_from_json(field, j.at("g")));
}

std::string r_code_to_json(const RConstaCode& code) {
    nlohmann::json j;
    j["p"] = code.field().p();
    j["n"] = code.n();
    j["theta"] = {{"lambda", code.theta().lambda()}, {"mu", code.theta().mu()}};
    j["g1"] = poly_json(code.g1());
    j["g2"] = poly_json(code.g2());
    nlohmann::json gen = nlohmann::json::array();
    const RPoly g = code.single_generator();
    for (std::size_t i = 0; i < g.size(); ++i) {
        gen.push_back({g.coeff(i).a(), g.coeff(i).b()});
    }
    j["single_generator"] = gen;
    j["size_log_p"] = code.size_log_p();
    return j.dump();
}

RConstaCode r_code_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const PrimeField field(j.at("p").get<std::uint64_t>());
    const Theta theta(field, j.at("theta").at("lambda").get<std::int64_t>(),
                      j.at("theta").at("mu").get<std::int64_t>());
    return RConstaCode::from_standard_pair(j.at("n").get<std::size_t>(), theta,
                                           poly_from_json(field, j.at("g1")),
                                           poly_from_json(field, j.at("g2")));
}

std::string codewords_csv(const std::vector<std::vector<std::uint64_t>>& words) {
    std::ostringstream os;
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ",";
            os << w[i];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace fpv
