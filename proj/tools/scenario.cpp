#include "scenario.hpp"

namespace mzio {

using namespace mz;

Json to_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json to_json(const Rat& x) {
    if (x.get_den() == 1) return to_json(Int(x.get_num()));
    return x.get_str();
}

Rat rat_from(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        Rat r;
        if (r.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not a rational: " + j.get<std::string>());
        if (r.get_den() == 0) throw ParseError("zero denominator");
        r.canonicalize();
        return r;
    }
    throw ParseError("expected an integer or a rational string, got " + j.dump());
}

static Int int_from(const Json& j) {
    Rat r = rat_from(j);
    if (r.get_den() != 1) throw ParseError("expected an integer, got " + j.dump());
    return r.get_num();
}

Json to_json(const EPoly& f) {
    Json out = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        out.push_back(Json::array({it->first.first, it->first.second, to_json(it->second)}));
    return out;
}

EPoly epoly_from(const Json& j) {
    return parsing("EPoly", [&] {
        if (j.is_number_integer() || j.is_string()) return EPoly(int_from(j));
        if (!j.is_array()) throw ParseError("EPoly must be a list of [p, q, coeff] triples");
        EPoly f;
        for (const auto& t : j) {
            if (!t.is_array() || t.size() != 3) throw ParseError("EPoly term must be [p, q, coeff]");
            f.add_term(t[0].get<int>(), t[1].get<int>(), int_from(t[2]));
        }
        return f;
    });
}

Json to_json(const MonClass& c) {
    Json out = Json::array();
    for (const auto& [alpha, f] : c.parts())
        out.push_back(Json::array({to_json(Int(alpha.get_num())), to_json(Int(alpha.get_den())), to_json(f)}));
    return out;
}

MonClass monclass_from(const Json& j) {
    return parsing("MonClass", [&] {
        if (!j.is_array()) throw ParseError("MonClass must be a list of [alpha_num, alpha_den, EPoly] entries");
        MonClass c;
        for (const auto& e : j) {
            if (!e.is_array() || e.size() != 3) throw ParseError("MonClass entry must be [num, den, EPoly]");
            long den = e[1].get<long>();
            if (den == 0) throw ParseError("zero denominator in an eigenvalue");
            Rat alpha(e[0].get<long>(), den);
            alpha.canonicalize();
            c.add(reduce_alpha(alpha), epoly_from(e[2]));
        }
        return c;
    });
}

Json to_json(const Cyclo& z) {
    if (z.is_rational()) return to_json(z.rational());
    Json coords = Json::array();
    for (const auto& c : z.coords()) coords.push_back(to_json(c));
    return Json{{"p", z.p()}, {"coords", coords}};
}

Cyclo cyclo_from(const Json& j, int p) {
    return parsing("cyclotomic value", [&] {
        if (!j.is_object()) return Cyclo(p, rat_from(j));
        if (j.contains("p") && j.at("p").get<int>() != p) throw ParseError("value over the wrong cyclotomic field");
        Cyclo z(p);
        const auto& coords = j.at("coords");
        if (coords.size() > static_cast<size_t>(p)) throw ParseError("too many cyclotomic coordinates");
        for (size_t e = 0; e < coords.size(); ++e) z.add_zeta(static_cast<long>(e), rat_from(coords[e]));
        return z;
    });
}

template <class R, class Conv>
static Json series_json(const Series<R>& f, Conv conv) {
    Json terms = Json::array();
    for (const Exps& e : exponent_box(f.bound())) {
        auto it = f.terms().find(e);
        if (it != f.terms().end()) terms.push_back(Json::array({e, conv(it->second)}));
    }
    return Json{{"bound", f.bound()}, {"terms", terms}};
}

Json to_json(const ESeries& f) {
    return series_json(f, [](const EPoly& c) { return to_json(c); });
}

Json to_json(const QSeries& f) {
    return series_json(f, [](const Rat& c) { return to_json(c); });
}

ESeries eseries_from(const Json& j) {
    return parsing("series", [&] {
        Exps bound = j.at("bound").get<Exps>();
        if (bound.empty()) throw ParseError("series needs at least one variable");
        for (int b : bound)
            if (b < 0 || b > 64) throw BoundsError("series bound outside 0..64");
        ESeries f(bound);
        for (const auto& t : j.at("terms")) {
            Exps e = t.at(0).get<Exps>();
            if (e.size() != bound.size()) throw ParseError("exponent vector of the wrong length");
            f.add(e, epoly_from(t.at(1)));
        }
        return f;
    });
}

Variety variety_from(const Json& j) {
    return parsing("variety", [&]() -> Variety {
        if (j.is_string()) return variety_from(Json{{"kind", j}});
        const std::string kind = j.at("kind").get<std::string>();
        auto parts = [&] {
            std::vector<Variety> ps;
            for (const auto& p : j.at("parts")) ps.push_back(variety_from(p));
            return ps;
        };
        if (kind == "affine") return Variety::affine(j.value("n", 1));
        if (kind == "projective") return Variety::projective(j.value("n", 1));
        if (kind == "gm") return Variety::gm();
        if (kind == "points") return Variety::points(j.value("count", 1L));
        if (kind == "two_point") return Variety::two_point();
        if (kind == "elliptic") return Variety::elliptic(j.at("q").get<long>(), j.at("a").get<long>());
        if (kind == "curve") return Variety::curve(j.at("q").get<long>(), j.at("lpoly").get<std::vector<long>>());
        if (kind == "weierstrass") return Variety::weierstrass(j.at("coeffs").get<std::array<long, 5>>());
        if (kind == "fermat0") return Variety::fermat0(j.at("n").get<int>());
        if (kind == "fermat1") return Variety::fermat1(j.at("n").get<int>());
        if (kind == "product") return Variety::product(parts());
        if (kind == "union") return Variety::disjoint_union(parts());
        if (kind == "explicit") {
            AffineSpec spec;
            spec.nvars = j.at("nvars").get<int>();
            auto poly = [&](const Json& pj) {
                IntPoly f;
                f.nvars = spec.nvars;
                for (const auto& t : pj) {
                    auto exps = t.at(1).get<std::vector<int>>();
                    if (static_cast<int>(exps.size()) != spec.nvars) throw ParseError("monomial of the wrong arity");
                    f.terms.push_back({t.at(0).get<long>(), exps});
                }
                return f;
            };
            for (const auto& e : j.value("equations", Json::array())) spec.equations.push_back(poly(e));
            for (const auto& e : j.value("inequations", Json::array())) spec.inequations.push_back(poly(e));
            return Variety::explicit_spec(spec);
        }
        throw ParseError("unknown variety kind: " + kind);
    });
}

Family family_from(const Json& j) {
    return parsing("family", [&] {
        Family F{variety_from(j.at("base")), eseries_from(j.at("factor")), {}};
        for (const auto& o : j.value("overrides", Json::array())) F.overrides.push_back(eseries_from(o));
        return F;
    });
}

ResolutionData resolution_from(const Json& j) {
    return parsing("resolution", [&] {
        ResolutionData r;
        r.ambient = monclass_from(j.at("ambient"));
        for (const auto& s : j.at("strata")) {
            Stratum st;
            st.label = s.value("label", std::string());
            st.cls = monclass_from(s.at("class"));
            st.a = s.at("a").get<std::vector<int>>();
            st.nu = s.at("nu").get<std::vector<int>>();
            r.strata.push_back(std::move(st));
        }
        return r;
    });
}

static StratumTerm stratum_from(const Json& s) {
    StratumTerm t;
    for (int alpha : s.value("subset", std::vector<int>{})) {
        if (alpha < 0 || alpha >= 31) throw ParseError("boundary component index out of range");
        t.subset |= 1u << alpha;
    }
    t.delta = epoly_from(s.at("delta"));
    t.e = s.value("e", std::vector<int>{});
    t.rho_beta = s.value("rho_beta", 0);
    return t;
}

CompactificationData compactification_from(const Json& j) {
    return parsing("compactification", [&] {
        CompactificationData d;
        d.n = j.value("n", 1);
        d.rho = j.at("rho").get<std::vector<int>>();
        d.in_AD = j.value("in_AD", std::vector<bool>(d.rho.size(), false));
        for (const auto& s : j.value("good", Json::array())) d.good.push_back(stratum_from(s));
        for (const auto& b : j.value("bad", Json::array())) {
            BadPlace place;
            place.clemens = b.value("clemens", 1);
            for (const auto& s : b.at("strata")) place.strata.push_back(stratum_from(s));
            d.bad.push_back(std::move(place));
        }
        d.validate();
        return d;
    });
}

static Place place_from(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf") throw ParseError("place must be \"inf\" or an element of F_q");
        return Place::inf();
    }
    return Place::finite(j.get<long>());
}

SBFunction sbfunction_from(const Json& j, long q, int n) {
    return parsing("Schwartz-Bruhat function", [&] {
        LocalLevel lv{j.at("M").get<int>(), j.at("N").get<int>(), n};
        SBFunction f(q, place_from(j.at("place")), lv);
        if (j.contains("indicator") && j.at("indicator").get<bool>()) {
            for (auto& v : f.values) v = Cyclo(static_cast<int>(q), 1);
            return f;
        }
        const auto& values = j.at("values");
        if (values.size() != f.values.size())
            throw ParseError("table has " + std::to_string(values.size()) + " entries, level needs " +
                             std::to_string(f.values.size()));
        for (size_t i = 0; i < values.size(); ++i) f.values[i] = cyclo_from(values[i], static_cast<int>(q));
        return f;
    });
}

SBProduct sbproduct_from(const Json& j) {
    return parsing("Schwartz-Bruhat product", [&] {
        SBProduct phi{j.at("q").get<long>(), j.value("n", 1), {}};
        for (const auto& f : j.at("locals")) phi.locals.push_back(sbfunction_from(f, phi.q, phi.n));
        return complete(phi);
    });
}

Json to_json(const SBProduct& phi) {
    Json locals = Json::array();
    for (const auto& f : phi.locals) {
        Json values = Json::array();
        for (const auto& v : f.values) values.push_back(to_json(v));
        locals.push_back({{"place", f.place.infinite ? Json("inf") : Json(f.place.c)},
                          {"M", f.level.M},
                          {"N", f.level.N},
                          {"values", values}});
    }
    return Json{{"q", phi.q}, {"n", phi.n}, {"locals", locals}};
}

}  // namespace mzio
