#include <catch2/catch.hpp>

#include <random>

#include "endolift/weight.hpp"

using namespace endolift;

TEST_CASE("dominance validation") {
    CHECK_THROWS_AS(DominantWeight::pgl({0, 1, -1}), domain_error);
    CHECK_THROWS_AS(DominantWeight::pgl({1, 0, 0}), domain_error);  // sum != 0
    CHECK_THROWS_AS(DominantWeight::sp({1, 2}), domain_error);
    CHECK_THROWS_AS(DominantWeight::sp({1, -1}), domain_error);
    CHECK_NOTHROW(DominantWeight::gl_gl1({2, 1}, 3));
}

TEST_CASE("eta action on weights") {
    const auto p = DominantWeight::pgl({1, 0, -1});
    CHECK(eta_weight(p) == p);
    CHECK(is_eta_invariant(p));

    const auto q = DominantWeight::gl_gl1({2, 1}, 3);
    CHECK(eta_weight(q) == q);

    const auto r = DominantWeight::gl({2, 0});
    CHECK(eta_weight(r) == DominantWeight::gl({0, -2}));
    CHECK(!is_eta_invariant(r));
}

TEST_CASE("describing sets and charset_of") {
    const auto [s0, w0] = charset_of(DominantWeight::pgl({0, 0, 0}));
    CHECK(s0 == CharSet::of_integers({-1, 0, 1}));
    CHECK(!w0);

    // scalar Sp_2g weight (k, .., k) gives {0, ±(k+1), .., ±(k+g)}
    for (long long g = 1; g <= 4; ++g)
        for (long long k = 0; k <= 3; ++k) {
            const auto [s, w] = charset_of(DominantWeight::sp(std::vector<long long>(g, k)));
            std::vector<HalfInt> expect{HalfInt::whole(0)};
            for (long long i = 1; i <= g; ++i) {
                expect.push_back(HalfInt::whole(k + i));
                expect.push_back(HalfInt::whole(-(k + i)));
            }
            CHECK(s == CharSet(expect));
        }

    // GLxGL1 shift: chi + rho = (b_1, b_2; b_0) with b_1 + b_2 = b_0 gives S = {±(b_1 - b_0/2)}
    const auto [sb, wb] = charset_of(DominantWeight::gl_gl1({3, 0}, 3));
    CHECK(sb == CharSet::from_twice({-4, 4}));
    CHECK(wb == 3);
    CHECK(classify(sb).kind == Kind::D);  // odd weight
}

TEST_CASE("raw describing set for non-eta-invariant weights") {
    // no symmetry required: GL_2 weight (2, 0) gives {-1/2, 5/2}
    const auto d = describing_set(DominantWeight::gl({2, 0}));
    CHECK(d == std::vector<HalfInt>{HalfInt::from_twice(-1), HalfInt::from_twice(5)});
    CHECK_THROWS_AS(charset_of(DominantWeight::gl({2, 0})), domain_error);
}

TEST_CASE("weight_of_charset inverse dictionary") {
    CHECK(weight_of_charset(CharSet::of_integers({-1, 0, 1}), {Shape::PGL, 3}) == DominantWeight::pgl({0, 0, 0}));
    CHECK(weight_of_charset(CharSet::of_integers({-2, -1, 0, 1, 2}), {Shape::PGL, 5}) ==
          DominantWeight::pgl({0, 0, 0, 0, 0}));
    CHECK(weight_of_charset(CharSet::of_integers({-2, 0, 2}), {Shape::PGL, 3}) == DominantWeight::pgl({1, 0, -1}));
    CHECK_THROWS_AS(weight_of_charset(CharSet::of_integers({-1, 1}), {Shape::PGL, 2}), domain_error);
    CHECK_THROWS_AS(weight_of_charset(CharSet::from_twice({-1, 1}), {Shape::GLxGL1, 2}, 3), domain_error);
}

TEST_CASE("round trips: PGL side, exhaustive for 2g+1 <= 9, coords <= 4") {
    for (int g = 1; 2 * g + 1 <= 9; ++g) {
        // descending tuples c_1 >= .. >= c_g >= 0 with c_1 <= 4
        std::vector<long long> c(g, 0);
        while (true) {
            const auto chi = DominantWeight::sp(c).embed_sp_to_pgl();
            const auto [s, w] = charset_of(chi);
            CHECK(classify(s) == CharType{Kind::C, g});
            CHECK(weight_of_charset(s, {Shape::PGL, 2 * g + 1}) == chi);
            int i = g - 1;
            while (i >= 0) {
                ++c[i];
                if (c[i] <= (i == 0 ? 4 : c[i - 1])) break;
                --i;
            }
            if (i < 0) break;
            for (int j = i + 1; j < g; ++j) c[j] = 0;
        }
    }
}

TEST_CASE("round trips: GLxGL1 side over random eta-invariant weights") {
    std::mt19937 rng(99);
    for (int it = 0; it < 300; ++it) {
        const int g = 1 + static_cast<int>(rng() % 4);
        const long long m0 = static_cast<long long>(rng() % 9) - 4;
        std::vector<long long> m(g);
        long long prev = 4;
        for (int i = 0; i < g; ++i) {
            const long long lo = i == g - 1 ? std::max(-4LL, m0 - prev) : -4;
            if (lo > prev) { m.clear(); break; }
            m[i] = lo + static_cast<long long>(rng() % (prev - lo + 1));
            prev = m[i];
        }
        if (m.empty()) continue;
        if (m[g - 1] < m0 - m[g - 1]) continue;  // dominance of the mirrored half
        std::vector<long long> coords(m);
        for (int i = g - 1; i >= 0; --i) coords.push_back(m0 - m[i]);
        const auto chi = DominantWeight::gl_gl1(coords, m0);
        if (!is_eta_invariant(chi)) continue;
        const auto [s, w] = charset_of(chi);
        REQUIRE(w);
        const auto t = classify(s);
        CHECK((m0 % 2 == 0 ? t.kind == Kind::B : t.kind == Kind::D));
        CHECK(weight_of_charset(s, {Shape::GLxGL1, 2 * g}, *w) == chi);
    }
}

TEST_CASE("sigma trichotomy on GSO weights") {
    CHECK(sigma_status(DominantWeight::gso({1}, 2)) == SigmaStatus::Fixed);
    CHECK(sigma_status(DominantWeight::gso({1}, 1)) == SigmaStatus::Positive);
    const auto flipped = DominantWeight::gso({0}, 2);
    CHECK(sigma_status(flipped) == SigmaStatus::Flipped);
    CHECK(sigma_status(sigma_star(flipped)) == SigmaStatus::Positive);
    CHECK(sigma_star(sigma_star(flipped)) == flipped);
}

TEST_CASE("gspin iota") {
    const auto chi = DominantWeight::gl_gl1({1, 0}, 1);
    const auto img = gspin_iota(chi);
    REQUIRE(img.size() == 2);
    CHECK(img[0] == HalfInt::whole(1));
    CHECK(img[1] == HalfInt::whole(1));

    CHECK(delta_gspin(3) == std::vector<long long>{0, 2, 1, 0});

    CHECK_THROWS_AS(gspin_iota(DominantWeight::gl_gl1({2, 0}, 1)), domain_error);  // not eta-invariant

    std::mt19937 rng(4242);
    for (int it = 0; it < 200; ++it) {
        const int g = 1 + static_cast<int>(rng() % 4);
        const long long m0 = static_cast<long long>(rng() % 9) - 4;
        std::vector<long long> m(g);
        long long prev = 6;
        bool ok = true;
        for (int i = 0; i < g; ++i) {
            m[i] = prev - static_cast<long long>(rng() % 3);
            prev = m[i];
        }
        if (m[g - 1] < m0 - m[g - 1]) ok = false;
        if (!ok) continue;
        std::vector<long long> coords(m);
        for (int i = g - 1; i >= 0; --i) coords.push_back(m0 - m[i]);
        const auto w = DominantWeight::gl_gl1(coords, m0);
        if (!is_eta_invariant(w)) continue;
        const auto a = gspin_iota(w), b = gspin_iota_composed(w);
        CHECK(a == b);  // closed form == definition route
        if (m0 % 2 != 0)
            for (const auto& x : a) CHECK(x.is_integral());
    }
}

TEST_CASE("gspin iota is affine with additive linear part") {
    const auto i0 = gspin_iota(DominantWeight::gl_gl1({0, 0, 0, 0}, 0));
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        const int g = 2;
        auto mk = [&](long long base) {
            const long long m0 = base;
            std::vector<long long> m{base + 2 + static_cast<long long>(rng() % 3), base + 1};
            std::vector<long long> coords(m);
            for (int i = g - 1; i >= 0; --i) coords.push_back(m0 - m[i]);
            return DominantWeight::gl_gl1(coords, m0);
        };
        const auto x = mk(static_cast<long long>(rng() % 5)), y = mk(static_cast<long long>(rng() % 5));
        std::vector<long long> sum_coords;
        for (int i = 0; i < 2 * g; ++i) sum_coords.push_back(x.coords()[i] + y.coords()[i]);
        const auto s = DominantWeight::gl_gl1(sum_coords, x.a0() + y.a0());
        const auto ix = gspin_iota(x), iy = gspin_iota(y), is = gspin_iota(s);
        for (std::size_t i = 0; i < is.size(); ++i)
            CHECK(is[i] + i0[i] == ix[i] + iy[i]);  // affine: iota(x+y) + iota(0) = iota(x) + iota(y)
    }
}

TEST_CASE("archimedean parameter data") {
    const auto p = arch_param(DominantWeight::pgl({0, 0, 0}));
    CHECK(p.entries == std::vector<HalfInt>{HalfInt::whole(1), HalfInt::whole(0), HalfInt::whole(-1)});
    CHECK(p.b0 == HalfInt::whole(0));
    CHECK(p.epsilon == 1);

    // type B describing set: epsilon = -1
    const auto pb = arch_param(DominantWeight::gl_gl1({1, -1}, 0));
    CHECK(pb.epsilon == -1);

    // type D describing set: epsilon = +1
    const auto pd = arch_param(DominantWeight::gl_gl1({3, 0}, 3));
    CHECK(pd.epsilon == 1);

    CHECK_THROWS_AS(arch_param(DominantWeight::gl({2, 0})), domain_error);
}

TEST_CASE("epsilon matches the type classification") {
    CHECK(arch_param(DominantWeight::sp({2, 1})).epsilon == 1);  // type C
    for (long long k = 0; k <= 3; ++k) {
        const auto chi = DominantWeight::gl_gl1({k, -k}, 0);  // type B set {±(k+1/2)}
        const auto s = charset_of(chi).first;
        CHECK(classify(s).kind == Kind::B);
        CHECK(arch_param(chi).epsilon == -1);
    }
}

TEST_CASE("langlands target from the coefficient system") {
    CHECK(langlands_target(CharSet::from_twice({-1, 1})) == LanglandsTarget::GSp);
    CHECK(langlands_target(CharSet::of_integers({-1, 1})) == LanglandsTarget::GSO);
    CHECK(langlands_target(CharSet::from_twice({-3, -1, 1, 3})) == LanglandsTarget::GSp);
    CHECK_THROWS_AS(langlands_target(CharSet::of_integers({0})), domain_error);
}

TEST_CASE("rho compatibility under folding") {
    for (int g = 1; g <= 8; ++g) CHECK(rho_compat_check(g));
    CHECK_THROWS_AS(rho_compat_check(0), domain_error);
}
