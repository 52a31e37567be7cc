#include <doctest.h>

#include <random>

#include "mz/vanishing.hpp"

using namespace mz;

namespace {

const MonClass E_tilde = chi(EqPiece::TwoPoint);
const EPoly L = EPoly::L();

MonClass random_monclass(std::mt19937_64& rng) {
    static const std::vector<Rat> alphas = {Rat(0), Rat(-1, 2), Rat(-1, 3), Rat(-2, 3), Rat(-1, 4), Rat(-3, 4)};
    std::uniform_int_distribution<int> pick(0, static_cast<int>(alphas.size()) - 1), deg(0, 2), coef(-2, 2);
    MonClass m;
    for (int i = 0; i < 3; ++i) m.add(alphas[pick(rng)], EPoly::monomial(deg(rng), deg(rng), coef(rng)));
    return m;
}

// Fractional Hodge types: a line element (p, q) at alpha != 0 sits at (p - alpha, q + 1 + alpha).
// The convolution is then plain addition of types with eigenvalues multiplying.
using FracType = std::map<std::tuple<Rat, Rat, Rat>, Int>;

FracType to_fractional(const MonClass& m) {
    FracType out;
    for (const auto& [alpha, f] : m.parts())
        for (const auto& [key, c] : f.terms()) {
            Rat p = key.first, q = key.second;
            if (alpha != 0) {
                p -= alpha;
                q += 1 + alpha;
            }
            out[{alpha, p, q}] += c;
        }
    return out;
}

FracType fractional_product(const FracType& a, const FracType& b) {
    FracType out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            auto [al, p1, q1] = ka;
            auto [be, p2, q2] = kb;
            out[{reduce_alpha(al + be), p1 + p2, q1 + q2}] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("alpha reduction") {
    CHECK(reduce_alpha(Rat(0)) == 0);
    CHECK(reduce_alpha(Rat(-1)) == 0);
    CHECK(reduce_alpha(Rat(1, 2)) == Rat(-1, 2));
    CHECK(reduce_alpha(Rat(-3, 2)) == Rat(-1, 2));
    CHECK(reduce_alpha(Rat(-4, 3)) == Rat(-1, 3));
}

TEST_CASE("twisted product examples") {
    MonClass half = MonClass::at(Rat(-1, 2), 1);
    CHECK(twisted_product(half, half) == MonClass(L));
    MonClass trivial(1 + L);
    std::mt19937_64 rng(3);
    MonClass a = random_monclass(rng);
    CHECK(twisted_product(a, trivial) == a * trivial);
    CHECK(twisted_product(E_tilde, E_tilde) == MonClass(1 + L) + MonClass::at(Rat(-1, 2), 2));
}

TEST_CASE("twisted product agrees with fractional Hodge types") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        MonClass a = random_monclass(rng), b = random_monclass(rng);
        CHECK(to_fractional(twisted_product(a, b)) == fractional_product(to_fractional(a), to_fractional(b)));
    }
}

TEST_CASE("twisted product ring axioms") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        MonClass a = random_monclass(rng), b = random_monclass(rng), c = random_monclass(rng);
        CHECK(twisted_product(a, b) == twisted_product(b, a));
        CHECK(twisted_product(twisted_product(a, b), c) == twisted_product(a, twisted_product(b, c)));
        CHECK(twisted_product(a, MonClass(1)) == a);
        CHECK(twisted_product(a, b + c) == twisted_product(a, b) + twisted_product(a, c));
        MonClass triv(EPoly::monomial(t % 3, 1, 2) - 1);
        CHECK(twisted_product(triv, b).total() == (triv * b).total());
        // submultiplicativity of weights
        auto wa = weight(a), wb = weight(b), wab = weight(twisted_product(a, b));
        if (wa && wb && wab) CHECK(*wab <= *wa + *wb);
    }
}

TEST_CASE("Fermat convolution") {
    EqVariety ee{{EqPiece::TwoPoint, EqPiece::TwoPoint, 1}};
    CHECK(psi_fermat(ee) == MonClass(L + 1) + MonClass::at(Rat(-1, 2), 2));
    CHECK(psi_fermat(ee) == chi(EqPiece::GmNeg) + E_tilde + E_tilde);
    // trivial actions leave the class unchanged
    EqVariety triv{{EqPiece::Gm, EqPiece::A1, 2}, {EqPiece::Point, EqPiece::Point, 1}};
    CHECK(psi_fermat(triv, 1) == MonClass(L * (L - 1) * 2 + 1));
    CHECK(psi_fermat(triv, 2) == psi_fermat(triv, 1));
    CHECK_THROWS_AS(psi_fermat(ee, 1), DomainError);
    CHECK_THROWS_AS(psi_fermat(ee, 3), DomainError);
}

TEST_CASE("Fermat convolution is the twisted product on every catalog pair") {
    const std::vector<EqPiece> pieces = {EqPiece::Point, EqPiece::Gm, EqPiece::A1, EqPiece::TwoPoint, EqPiece::GmNeg};
    for (EqPiece a : pieces)
        for (EqPiece b : pieces) {
            INFO(piece_name(a), " x ", piece_name(b));
            CHECK(psi_fermat({{a, b, 1}}) == twisted_product(chi(a), chi(b)));
        }
}

TEST_CASE("Fermat convolution against equivariant point counts") {
    const std::vector<EqPiece> pieces = {EqPiece::Point, EqPiece::Gm, EqPiece::A1, EqPiece::TwoPoint, EqPiece::GmNeg};
    for (long q : {5L, 13L, 9L})
        for (EqPiece a : pieces)
            for (EqPiece b : pieces) {
                INFO(piece_name(a), " x ", piece_name(b), " q=", q);
                MonClass psi = psi_fermat({{a, b, 1}});
                EigenCounts cnt = psi_fermat_count({{a, b, 1}}, q);
                CHECK(psi.part(0).eval_uv(q) == Rat(cnt.trivial));
                CHECK(psi.part(Rat(-1, 2)).eval_uv(q) == Rat(cnt.sign));
            }
    // without i in F_q the two lines of F_0^2 are conjugate and the realization is not a count
    EigenCounts c3 = psi_fermat_count({{EqPiece::TwoPoint, EqPiece::TwoPoint, 1}}, 3);
    CHECK(c3.trivial != Rat(psi_fermat({{EqPiece::TwoPoint, EqPiece::TwoPoint, 1}}).part(0).eval_uv(3)));
    CHECK_THROWS_AS(psi_fermat_count({}, 4), DomainError);
}

TEST_CASE("Denef-Loeser zeta function") {
    auto zx2 = dl_zeta(resolution_x2(), 8);
    for (int n = 0; n <= 8; ++n) {
        MonClass expected = (n >= 2 && n % 2 == 0) ? E_tilde * MonClass(EPoly::L(-n / 2)) : MonClass();
        CHECK(zx2[n] == expected);
    }
    // x^2 + y^2 in normal-crossing coordinates uv
    auto z = dl_zeta(resolution_x2_plus_y2(), 5);
    for (int n = 1; n <= 5; ++n) {
        // 2 (L-1) L^-n from the two lines, (L-1) (n-1) L^-n from the crossing
        EPoly expected = (EPoly::L() - 1) * EPoly(n + 1) * EPoly::L(-n);
        CHECK(z[n] == MonClass(expected));
    }
    CHECK(z[0].is_zero());
    CHECK(dl_zeta(ResolutionData{}, 4) == MSeries({4}));
}

TEST_CASE("limit at infinity") {
    RationalForm::Symbol s{1, 2}, s2{3, 1};
    MonClass c(EPoly::L() + 2);
    CHECK(limit_T_infinity({{{c, {s}}}}) == -c);
    CHECK(limit_T_infinity({{{c, {}}}}) == c);
    CHECK(limit_T_infinity({{{c, {s, s2}}}}) == c);
}

TEST_CASE("nearby and vanishing cycles") {
    auto x2 = nearby_vanishing(resolution_x2());
    CHECK(x2.phi == MonClass::at(Rat(-1, 2), -1));
    CHECK(x2.psi == E_tilde);
    auto x2y2 = nearby_vanishing(resolution_x2_plus_y2());
    CHECK(x2y2.phi == MonClass(L));
    CHECK(nearby_vanishing(resolution_smooth()).phi.is_zero());
    for (const auto& res : {resolution_x2(), resolution_x2_plus_y2(), resolution_smooth()})
        CHECK(nearby_vanishing(res).psi == -limit_T_infinity(dl_zeta_form(res)));
    // random strata
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> small(1, 3), count(1, 3);
    for (int t = 0; t < 30; ++t) {
        ResolutionData res;
        for (int s = 0; s < 3; ++s) {
            Stratum st;
            st.label = std::to_string(s);
            int k = count(rng);
            for (int j = 0; j < k; ++j) {
                st.a.push_back(small(rng));
                st.nu.push_back(small(rng));
            }
            st.cls = random_monclass(rng);
            res.strata.push_back(st);
        }
        res.ambient = random_monclass(rng);
        CHECK(nearby_vanishing(res).psi == -limit_T_infinity(dl_zeta_form(res)));
    }
    ResolutionData bad;
    bad.strata.push_back({"x", MonClass(1), {0}, {1}});
    CHECK_THROWS_AS(dl_zeta(bad, 3), ParseError);
}

TEST_CASE("Thom-Sebastiani") {
    CHECK(thom_sebastiani_check(resolution_x2(), resolution_x2(), resolution_x2_plus_y2()));
    CHECK(twisted_product(1 - E_tilde, 1 - E_tilde) == MonClass(L));
    CHECK(thom_sebastiani_check(resolution_smooth(), resolution_smooth(), resolution_smooth()));
    CHECK(thom_sebastiani_check(resolution_x2(), resolution_smooth(), resolution_smooth()));
    CHECK(!thom_sebastiani_check(resolution_x2(), resolution_x2(), resolution_x2()));
}

TEST_CASE("weights of graded classes") {
    CHECK(weight(MonClass(L)) == 2);
    CHECK(weight(MonClass::at(Rat(-1, 2), 1)) == 1);
    CHECK(!weight(MonClass()).has_value());
}
