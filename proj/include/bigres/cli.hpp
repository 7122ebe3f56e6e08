#ifndef BIGRES_CLI_HPP
#define BIGRES_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "serialization.hpp"

namespace bigres::cli {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<std::int64_t> parse_ns(const std::string& s) {
    std::vector<std::int64_t> out;
    for (const auto& item : split(s, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("not an integer: '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("empty list of n values");
    return out;
}

inline std::string format(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

inline void print_table(std::ostream& out, const BettiTable& t, bool minimal = true) {
    out << "betti: " << format(t.betti()) << "\n";
    if (minimal) out << "regularity_F: " << regularity_F(t) << "\n";
    for (std::size_t i = 0; i < t.shifts.size(); ++i) {
        out << "shifts[" << i << "]:";
        for (auto b : t.shifts[i]) out << ' ' << b;
        out << "\n";
    }
}

/// Σ x_i^3 with weights 1/3: the reference germ used by `verify`.
inline SingularityInput fermat_cubic(std::int64_t n) {
    std::string p;
    std::vector<Rational> w;
    for (std::int64_t i = 1; i <= n; ++i) {
        p += (i > 1 ? "+x" : "x") + std::to_string(i) + "^3";
        w.push_back(Rational(1, 3));
    }
    return SingularityInput::parse(static_cast<std::size_t>(n), p, w);
}

struct VerifyResult {
    bool pass;
    std::string detail;
};

inline VerifyResult compare(const BettiPolynomial& got, const BettiPolynomial& want) {
    std::ostringstream s;
    s << "computed " << got << " expected " << want;
    return {got == want, s.str()};
}

inline VerifyResult verify_case(const std::string& what, std::int64_t n) {
    auto minimal_betti = [](const FreeComplex& c) { return BettiPolynomial::from_table(betti_table(minimalize(c))); };
    if (what == "thm3") {
        auto t = betti_of_Nf(fermat_cubic(n));
        auto r = compare(BettiPolynomial::from_table(t), thm3_closed_form(n));
        r.pass = r.pass && regularity_F(t) == 0;
        r.detail += ", regularity_F " + std::to_string(regularity_F(t));
        return r;
    }
    if (what == "dsfs") return compare(minimal_betti(dsfs_complex(fermat_cubic(n))), dsfs_closed_form(n));
    if (what == "M") return compare(minimal_betti(M_complex(fermat_cubic(n))), M_closed_form(n));
    if (what == "en") {
        auto in = fermat_cubic(n);
        RingPtr r = dsfs_ring(in.n, in.w, false);
        return compare(minimal_betti(resolve(ideal_presentation(r, s_ij(in, r)), r->size() + 1)), en_closed_form(n));
    }
    if (what == "smooth") {
        auto g = smooth_symbols(static_cast<std::size_t>(n));
        return compare(minimal_betti(resolve(ideal_presentation(g.front().ring(), g), g.front().ring()->size() + 1)),
                       smooth_closed_form(n, 1));
    }
    if (what == "exactness") {
        auto in = fermat_cubic(n);
        RingPtr r = dsfs_ring(in.n, in.w, false);
        std::string detail;
        bool ok = true;
        for (int t = 0; t <= 1; ++t) {
            if (t > n - 2 && !(n == 2 && t == 1)) continue;
            FreeComplex K = generalized_koszul({jacobian_matrix(in, r), t, 0, {}});
            bool exact = is_complex(K);
            for (std::size_t p = 1; p <= K.length(); ++p) exact = exact && homology_is_zero(K, p);
            detail += "K(A," + std::to_string(t) + ") " + (exact ? "exact" : "not exact") + "; ";
            ok = ok && exact;
        }
        return {ok, detail};
    }
    throw InvalidInputError("unknown identity '" + what + "'");
}

/// Entry point shared by the executable and the tests. Returns 0 on
/// success, 1 on a domain error, 2 on a usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bigraded minimal free resolutions of singularity modules"};
    app.require_subcommand(1);

    std::string poly, weights, ideal_file, kind, params, what, ns;
    bool json = false, minimal = false, with_s = false;
    std::size_t max_length = 0;

    auto* betti = app.add_subcommand("betti", "Betti numbers of the bigraded module N_f");
    betti->add_option("--poly", poly, "germ f in x1..xn")->required();
    betti->add_option("--weights", weights, "weights w1,...,wn as exact fractions")->required();
    betti->add_flag("--json", json);
    betti->add_option("--max-length", max_length, "maximal resolution length");

    auto* resolve_cmd = app.add_subcommand("resolve", "free resolution of an ideal given as JSON");
    resolve_cmd->add_option("--ideal", ideal_file, "ideal file")->required();
    resolve_cmd->add_flag("--minimal", minimal);
    resolve_cmd->add_flag("--json", json);

    auto* classify = app.add_subcommand("classify", "Milnor and Tjurina numbers");
    classify->add_option("--poly", poly)->required();
    classify->add_flag("--json", json);

    auto* rees = app.add_subcommand("rees", "kernel of the Rees map and linear type test");
    rees->add_option("--poly", poly)->required();
    rees->add_option("--weights", weights);
    rees->add_flag("--with-s", with_s);
    rees->add_flag("--json", json);

    auto* complex = app.add_subcommand("complex", "Koszul and generalized Koszul complexes");
    complex->add_option("--kind", kind)->required()->check(CLI::IsMember({"koszul", "genkoszul"}));
    complex->add_option("--params", params,
                        "koszul: comma-separated elements; genkoszul: f,t[,q] on the matrix (f'_i; -xi_i)")
        ->required();
    complex->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "check computed Betti numbers against closed forms");
    verify->add_option("identity", what)->required()->check(
        CLI::IsMember({"thm3", "dsfs", "M", "en", "smooth", "exactness"}));
    verify->add_option("--n", ns, "comma-separated values of n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        auto weight_list = [&] {
            std::optional<std::vector<Rational>> w;
            if (!weights.empty()) w = parse_weights(split(weights, ','));
            return w;
        };
        if (betti->parsed()) {
            auto in = SingularityInput::parse(poly, weight_list());
            auto t = betti_of_Nf(in, max_length ? std::optional<std::size_t>(max_length) : std::nullopt);
            if (json) out << to_json(t).dump() << "\n";
            else print_table(out, t);
        } else if (resolve_cmd->parsed()) {
            std::ifstream f(ideal_file);
            if (!f) throw InvalidInputError("cannot read ideal file '" + ideal_file + "'");
            Json j;
            try {
                j = Json::parse(f);
            } catch (const Json::exception& e) {
                throw ParseError(std::string("ideal file is not valid JSON: ") + e.what());
            }
            auto ideal = ideal_from_json(j);
            FreeComplex c = resolve(ideal_presentation(ideal.ring, ideal.gens), ideal.ring->size() + 1);
            BettiTable t;
            if (minimal) {
                t = betti_table(minimalize(c));
            } else {
                for (std::size_t k = 0; k <= c.length(); ++k) t.shifts.push_back(c.module(k).shifts);
            }
            if (json) {
                Json o = to_json(t);
                if (!minimal) o.erase("regularity_F");
                o["minimal"] = minimal;
                out << o.dump() << "\n";
            } else {
                print_table(out, t, minimal);
            }
        } else if (classify->parsed()) {
            auto v = classify_quasi_homogeneous(SingularityInput::parse(poly));
            if (json) {
                out << to_json(v).dump() << "\n";
            } else {
                out << "milnor: " << v.milnor << "\ntjurina: " << v.tjurina
                    << "\nquasi_homogeneous: " << (v.quasi_homogeneous ? "true" : "false") << "\n";
            }
        } else if (rees->parsed()) {
            auto in = SingularityInput::parse(poly, weight_list());
            auto k = rees_kernel(in, with_s);
            bool lt = is_linear_type(k);
            if (json) {
                Json g = Json::array();
                for (const auto& p : k) g.push_back(to_string(p));
                out << Json{{"kernel", g}, {"linear_type", lt}}.dump() << "\n";
            } else {
                out << "kernel:\n";
                for (const auto& p : k) out << "  " << p << "\n";
                out << "linear_type: " << (lt ? "true" : "false") << "\n";
            }
        } else if (complex->parsed()) {
            auto items = split(params, ',');
            if (items.empty()) throw InvalidInputError("--params is empty");
            FreeComplex c;
            if (kind == "koszul") {
                std::string joined;
                for (const auto& s : items) joined += s + "+";
                auto in = SingularityInput::parse(joined + "0");
                std::vector<Polynomial> elems;
                for (const auto& s : items) elems.push_back(parse_polynomial(x_ring(in.n), s));
                c = koszul(elems);
            } else {
                if (items.size() < 2 || items.size() > 3) throw InvalidInputError("genkoszul expects f,t[,q]");
                auto in = SingularityInput::parse(items[0]);
                auto ts = parse_ns(items[1] + (items.size() == 3 ? "," + items[2] : ""));
                RingPtr r = dsfs_ring(in.n, std::nullopt, false);
                c = generalized_koszul({jacobian_matrix(in, r), static_cast<int>(ts[0]), ts.size() > 1 ? static_cast<int>(ts[1]) : 0, {}});
            }
            bool ok = is_complex(c);
            if (json) {
                Json o = to_json(c);
                o["is_complex"] = ok;
                o["minimal_betti"] = betti_table(minimalize(c)).betti();
                out << o.dump() << "\n";
            } else {
                out << "ranks: " << format(c.ranks()) << "\nis_complex: " << (ok ? "true" : "false")
                    << "\nminimal betti: " << format(betti_table(minimalize(c)).betti()) << "\n";
            }
        } else if (verify->parsed()) {
            bool all = true;
            for (auto n : parse_ns(ns)) {
                VerifyResult r;
                try {
                    r = verify_case(what, n);
                } catch (const Error& e) {
                    r = {false, e.what()};
                }
                all = all && r.pass;
                out << (r.pass ? "PASS " : "FAIL ") << what << " n=" << n << ": " << r.detail << "\n";
            }
            return all ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bigres::cli

#endif
