#include "polydiff/model_json.hpp"

#include "polydiff/poly_io.hpp"

namespace polydiff {

namespace {

GaussRat gauss_from_string(const std::string& s) {
    return parse_poly(s, {}).constant_value();
}

}  // namespace

nlohmann::json model_to_json(const DiffusionModel& m) {
    const auto names = m.var_names();
    nlohmann::json j;
    j["label"] = m.label;
    j["vars"] = names;
    std::vector<int> kinds;
    for (const auto& v : m.vars) kinds.push_back(v.conj_partner);
    j["kinds"] = kinds;

    std::vector<std::string> gamma;
    for (int i = 0; i < m.nvars(); ++i)
        for (int k = 0; k < m.nvars(); ++k) gamma.push_back(print_poly(m.gamma(i, k), names));
    j["gamma"] = gamma;

    std::vector<std::string> drift;
    for (const auto& b : m.drift) drift.push_back(print_poly(b, names));
    j["drift"] = drift;

    nlohmann::json boundary = nlohmann::json::array();
    for (const auto& f : m.boundary)
        boundary.push_back({{"poly", print_poly(f.poly, names)},
                            {"exponent", to_string(f.exponent)}});
    j["boundary"] = boundary;

    if (m.has_tilt()) j["log_tilt"] = print_poly(m.log_tilt, names);

    nlohmann::json dom;
    std::vector<std::string> pos;
    for (const auto& p : m.domain.positive) pos.push_back(print_poly(p, names));
    dom["positive"] = pos;
    std::vector<std::string> interior;
    for (const auto& v : m.domain.interior) interior.push_back(to_string(v));
    dom["interior"] = interior;
    j["domain"] = dom;
    return j;
}

DiffusionModel model_from_json(const nlohmann::json& j) {
    DiffusionModel m;
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    const int n = static_cast<int>(names.size());
    std::vector<int> kinds(n, -1);
    if (j.contains("kinds")) kinds = j.at("kinds").get<std::vector<int>>();
    for (int i = 0; i < n; ++i) m.vars.push_back({names[i], kinds[i]});
    m.label = j.value("label", std::string{});

    auto gamma = j.at("gamma").get<std::vector<std::string>>();
    if (static_cast<int>(gamma.size()) != n * n)
        throw std::invalid_argument("model json: gamma must hold nvars^2 entries");
    m.gamma = PolyMat(n, n, Poly(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m.gamma(i, k) = parse_poly(gamma[i * n + k], names);

    for (const auto& s : j.at("drift").get<std::vector<std::string>>())
        m.drift.push_back(parse_poly(s, names));

    if (j.contains("boundary"))
        for (const auto& f : j.at("boundary"))
            m.boundary.push_back({parse_poly(f.at("poly").get<std::string>(), names),
                                  rat_from_string(f.at("exponent").get<std::string>())});

    m.log_tilt = j.contains("log_tilt")
                     ? parse_poly(j.at("log_tilt").get<std::string>(), names)
                     : Poly(n);

    if (j.contains("domain")) {
        const auto& dom = j.at("domain");
        if (dom.contains("positive"))
            for (const auto& s : dom.at("positive").get<std::vector<std::string>>())
                m.domain.positive.push_back(parse_poly(s, names));
        if (dom.contains("interior"))
            for (const auto& s : dom.at("interior").get<std::vector<std::string>>())
                m.domain.interior.push_back(gauss_from_string(s));
    }
    validate_shape(m);
    return m;
}

}  // namespace polydiff
