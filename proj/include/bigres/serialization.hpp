#ifndef BIGRES_SERIALIZATION_HPP
#define BIGRES_SERIALIZATION_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "bettimath.hpp"
#include "singularity.hpp"

namespace bigres {

using Json = nlohmann::json;

inline Json to_json(Bidegree b) { return Json::array({b.d, b.k}); }

inline Json to_json(const BettiTable& t) {
    Json shifts = Json::array();
    for (const auto& level : t.shifts) {
        Json l = Json::array();
        for (auto b : level) l.push_back(to_json(b));
        shifts.push_back(std::move(l));
    }
    return Json{{"betti", t.betti()}, {"shifts", std::move(shifts)}, {"regularity_F", regularity_F(t)}};
}

inline BettiTable betti_table_from_json(const Json& j) {
    BettiTable t;
    try {
        for (const auto& level : j.at("shifts")) {
            std::vector<Bidegree> s;
            for (const auto& b : level) s.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
            t.shifts.push_back(std::move(s));
        }
        if (j.contains("betti") && j.at("betti").get<std::vector<std::size_t>>() != t.betti())
            throw ParseError("betti ranks disagree with shift lists");
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed Betti table: ") + e.what());
    }
    return t;
}

inline Json to_json(const BettiPolynomial& b) { return Json(b.coefficients); }

inline Json to_json(const MatrixMap& m) {
    Json rows = Json::array();
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(to_string(p));
        rows.push_back(std::move(r));
    }
    Json src = Json::array(), tgt = Json::array();
    for (auto b : m.source.shifts) src.push_back(to_json(b));
    for (auto b : m.target.shifts) tgt.push_back(to_json(b));
    return Json{{"source_shifts", std::move(src)}, {"target_shifts", std::move(tgt)}, {"entries", std::move(rows)}};
}

inline Json to_json(const FreeComplex& c) {
    Json maps = Json::array();
    for (const auto& m : c.maps) maps.push_back(to_json(m));
    Json ranks = c.ranks();
    return Json{{"vars", c.ring->names()}, {"ranks", std::move(ranks)}, {"maps", std::move(maps)}};
}

inline std::vector<Rational> parse_weights(const std::vector<std::string>& items) {
    std::vector<Rational> w;
    for (const auto& s : items) w.push_back(parse_rational(s));
    return w;
}

/// {"n": 2, "f": "x1^3+x2^3", "weights": ["1/3","1/3"]}, weights optional.
inline SingularityInput singularity_from_json(const Json& j) {
    try {
        std::optional<std::vector<Rational>> w;
        if (j.contains("weights") && !j.at("weights").is_null())
            w = parse_weights(j.at("weights").get<std::vector<std::string>>());
        return SingularityInput::parse(j.at("n").get<std::size_t>(), j.at("f").get<std::string>(), std::move(w));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed singularity input: ") + e.what());
    }
}

inline Json to_json(const SingularityInput& in) {
    Json j{{"n", in.n}, {"f", to_string(in.f)}};
    if (in.w) {
        Json w = Json::array();
        for (const auto& q : *in.w) w.push_back(to_string(q));
        j["weights"] = std::move(w);
    }
    return j;
}

/// Ring and generators of an ideal file:
/// {"ring":{"vars":[...],"f_weights":[...],"v_weights":[...],"w_weights":[...]},"gens":[...]}.
struct IdealInput {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

inline IdealInput ideal_from_json(const Json& j) {
    try {
        const Json& r = j.at("ring");
        auto names = r.at("vars").get<std::vector<std::string>>();
        auto f = r.contains("f_weights") ? r.at("f_weights").get<std::vector<int>>() : std::vector<int>(names.size(), 0);
        auto v = r.contains("v_weights") ? r.at("v_weights").get<std::vector<int>>() : std::vector<int>(names.size(), 0);
        std::optional<std::vector<Rational>> w;
        std::optional<std::vector<std::int64_t>> grading;
        if (r.contains("w_weights")) {
            w = parse_weights(r.at("w_weights").get<std::vector<std::string>>());
            grading = weighted_grading(*w, f);
        }
        IdealInput out{make_ring(RingSpec(names, f, v, w, grading)), {}};
        for (const auto& g : j.at("gens")) out.gens.push_back(parse_polynomial(out.ring, g.get<std::string>()));
        return out;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed ideal file: ") + e.what());
    }
}

inline Json to_json(const ClassificationVerdict& v) {
    return Json{{"milnor", v.milnor}, {"tjurina", v.tjurina}, {"quasi_homogeneous", v.quasi_homogeneous}, {"method", v.method}};
}

}  // namespace bigres

#endif
