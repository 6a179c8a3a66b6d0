// Acceptance suite: one check per stated criterion, one PASS/FAIL line each.
// Every bound and expected value is pinned here, not deferred.
#include <catch2/catch.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>

#include "endolift/endolift.hpp"

using namespace endolift;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0).count();
}

void report(int num, const std::string& name, bool ok, const std::string& detail) {
    std::cout << "[criterion " << num << "] " << (ok ? "PASS" : "FAIL") << " - " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
}

CharSet g2_set(long long a, long long b) {
    return CharSet::of_integers({-(a + 2), -(b + 1), 0, b + 1, a + 2});
}

std::vector<std::string> g2_labels(long long a, long long b) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_families(g2_set(a, b)))
        for (const auto& l : g2_case_labels(f, a, b)) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_label(const std::vector<std::string>& ls, const std::string& l) {
    return std::count(ls.begin(), ls.end(), l) == 1;
}

std::vector<long long> zeros(int n) { return std::vector<long long>(n, 0); }

// --- criterion 5 oracle: the raw (w, I) double loop -------------------------
struct OraclePair {
    std::vector<int> w_image;
    std::vector<int> I;
};

std::vector<OraclePair> kostant_oracle(const std::vector<long long>& coords) {
    const int n = static_cast<int>(coords.size());
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<OraclePair> out;
    do {
        Permutation w{im};
        const Permutation wi = w.inverse();
        std::vector<long long> tb;
        for (int i = 1; i <= n; ++i) tb.push_back(2 * coords[wi(i) - 1] + (n + 1) - 2 * wi(i));
        const unsigned top = n >= 2 ? (1u << (n - 1)) : 1u;
        for (unsigned mask = 0; mask < top; ++mask) {
            bool wI = true;
            for (int i = 1; i <= n - 1 && wI; ++i)
                if (mask & (1u << (i - 1))) wI = wi(i) < wi(i + 1);
            if (!wI) continue;
            std::vector<int> cuts;
            for (int i = 1; i <= n - 1; ++i)
                if (!(mask & (1u << (i - 1)))) cuts.push_back(i);
            cuts.push_back(n);
            bool cone = true;
            Rat prev;
            bool have_prev = false;
            int start = 0;
            for (int cut : cuts) {
                BigInt sum = 0;
                for (int i = start; i < cut; ++i) sum += tb[i];
                Rat m(sum, BigInt(2 * (cut - start)));
                if (have_prev && m < prev) {
                    cone = false;
                    break;
                }
                prev = m;
                have_prev = true;
                start = cut;
            }
            if (!cone) continue;
            std::vector<int> I;
            for (int i = 1; i <= n - 1; ++i)
                if (mask & (1u << (i - 1))) I.push_back(i);
            out.push_back({im, I});
        }
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

NumberedPartition partition_of(const Permutation& w, const std::vector<int>& I) {
    const int n = w.n();
    std::vector<int> cuts;
    for (int i = 1; i <= n - 1; ++i)
        if (std::find(I.begin(), I.end(), i) == I.end()) cuts.push_back(i);
    cuts.push_back(n);
    const Permutation wi = w.inverse();
    std::vector<std::vector<int>> blocks;
    int start = 1;
    for (int cut : cuts) {
        std::vector<int> blk;
        for (int i = start; i <= cut; ++i) blk.push_back(wi(i));
        blocks.push_back(std::move(blk));
        start = cut + 1;
    }
    return NumberedPartition(n, std::move(blocks));
}

std::vector<NumberedPartition> all_numbered(int n) {
    std::vector<NumberedPartition> out;
    detail::for_each_set_partition(n, [&](const std::vector<std::vector<int>>& zb) {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : zb) {
            std::vector<int> v;
            for (int x : b) v.push_back(x + 1);
            blocks.push_back(std::move(v));
        }
        std::vector<int> idx(blocks.size());
        std::iota(idx.begin(), idx.end(), 0);
        do {
            std::vector<std::vector<int>> perm;
            for (int i : idx) perm.push_back(blocks[i]);
            out.emplace_back(n, std::move(perm));
        } while (std::next_permutation(idx.begin(), idx.end()));
    });
    return out;
}

}  // namespace

TEST_CASE("criterion 1: g = 2 family enumeration") {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    // generic a > b > 0: exactly the five families (a) - (e)
    for (long long a = 2; a <= 6 && ok; ++a)
        for (long long b = 1; b < a && ok; ++b) {
            const auto ls = g2_labels(a, b);
            ok = ls == std::vector<std::string>{"a", "b", "c", "d", "e"};
            if (!ok) detail = "generic failure at a=" + std::to_string(a) + ", b=" + std::to_string(b);
        }
    // a = b > 0: (b') appears
    for (long long a = 1; a <= 4 && ok; ++a) {
        ok = has_label(g2_labels(a, a), "b'");
        if (!ok) detail = "missing (b') at a=b=" + std::to_string(a);
    }
    // b = 0 < a: (d') appears
    for (long long a = 1; a <= 4 && ok; ++a) {
        ok = has_label(g2_labels(a, 0), "d'");
        if (!ok) detail = "missing (d') at b=0, a=" + std::to_string(a);
    }
    // a = b = 0: (a') appears and the stated total count is 9
    if (ok) {
        const auto ls = g2_labels(0, 0);
        ok = has_label(ls, "a'");
        if (!ok) detail = "missing (a') at a=b=0";
        if (ok) {
            const std::size_t count = enumerate_families(g2_set(0, 0)).size();
            if (count != 9) {
                ok = false;
                detail = "pinned target is 9 families at a=b=0; exhaustive enumeration yields " +
                         std::to_string(count) +
                         " (census a, a', b, b', c, d, d', e; the independent cover search agrees)";
            }
        }
    }
    const double dt = seconds_since(t0);
    if (ok && dt >= 1.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + "s >= 1s";
    }
    report(1, "g=2 family enumeration", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 2: g = 3 weight table") {
    bool ok = true;
    std::string detail;
    auto check_triple = [&](long long a, long long b, long long c) {
        const auto rows = g3_weight_table(a, b, c);
        bool good = rows.size() == 3;
        good = good && rows[0].c1_weight == a + 4 && rows[0].d2_weights == std::pair{b + c + 4, b - c + 2};
        good = good && rows[1].c1_weight == b + 3 && rows[1].d2_weights == std::pair{a + c + 5, a - c + 3};
        good = good && rows[2].c1_weight == c + 2 && rows[2].d2_weights == std::pair{a + b + 6, a - b + 2};
        if (!good && ok) {
            ok = false;
            detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
    };
    // symbolic: the rows are affine in (a, b, c), so a full small grid pins them
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= a; ++b)
            for (long long c = 0; c <= b; ++c) check_triple(a, b, c);
    // and ten random triples
    std::mt19937 rng(20240601);
    for (int i = 0; i < 10; ++i) {
        long long x = rng() % 50, y = rng() % 50, z = rng() % 50;
        long long hi = std::max({x, y, z}), lo = std::min({x, y, z}), mid = x + y + z - hi - lo;
        check_triple(hi, mid, lo);
    }
    report(2, "g=3 weight table", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 3: Ikeda families") {
    bool ok = true;
    std::string detail;
    for (long long gamma = 1; gamma <= 4 && ok; ++gamma)
        for (long long k = 0; k <= 3 && ok; ++k) {
            try {
                const auto rep = ikeda_family(gamma, k);
                ok = rep.family.has_value() && rep.seed_weight == 2 * k + 2 * gamma + 2;
            } catch (const std::exception& e) {
                ok = false;
            }
            if (!ok) detail = "gamma=" + std::to_string(gamma) + ", k=" + std::to_string(k);
        }
    report(3, "Ikeda family detection and weight", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 4: Chevalley volumes") {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (long long g = 1; g <= 10 && ok; ++g) {
        const auto sp = vol_ch(VolumeGroup::Sp, g);  // each call cross-checks both routes
        const auto so = vol_ch(VolumeGroup::SO, g);
        ok = sp == so * Rat(2) && vol_ch(VolumeGroup::Spin, g) == sp;
        if (!ok) detail = "identity failed at g=" + std::to_string(g);
    }
    if (ok) {
        ok = vol_ch(VolumeGroup::Sp, 1) == PiPower(Rat(4), 4) && vol_ch(VolumeGroup::SO, 1) == PiPower(Rat(2), 4) &&
             vol_ch(VolumeGroup::Sp, 2) == PiPower(Rat(BigInt(32), BigInt(3)), 12);
        if (!ok) detail = "spot value mismatch";
    }
    const double dt = seconds_since(t0);
    if (ok && dt >= 1.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + "s >= 1s";
    }
    report(4, "Chevalley volume identities vol_Ch(Sp) = 2 vol_Ch(SO)", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 5: Kostant oracle") {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::mt19937 rng(52025);
    for (int n = 1; n <= 6 && ok; ++n) {
        for (int trial = 0; trial < 20 && ok; ++trial) {
            std::vector<long long> coords(n);
            for (auto& c : coords) c = static_cast<long long>(rng() % 11) - 5;
            std::sort(coords.rbegin(), coords.rend());

            const auto pairs = kostant_oracle(coords);
            std::set<std::vector<int>> ws;
            std::set<std::vector<std::vector<int>>> unordered;
            for (const auto& p : pairs) {
                if (!ws.insert(p.w_image).second) ok = false;  // at most one I per w
                const Permutation w{p.w_image};
                const Permutation wi = w.inverse();
                std::vector<int> iw;
                for (int i = 1; i <= n - 1; ++i)
                    if (wi(i) < wi(i + 1)) iw.push_back(i);
                if (iw != p.I) ok = false;  // I = {alpha : w^-1 alpha > 0}
                const auto j = partition_of(w, p.I);
                if (!is_admissible_numbering(j, coords) || !(w_of(j) == w) || kostant_subset(j) != p.I) ok = false;
                unordered.insert(j.unordered());
            }
            const auto terms = franke_terms(DominantWeight::gl(coords));
            if (terms.size() != unordered.size()) ok = false;
            for (const auto& t : terms) {
                if (unordered.count(t.partition.unordered()) != 1) ok = false;
                bool found = false;
                for (const auto& p : pairs)
                    if (p.w_image == t.w.image && p.I == t.kostant_I) found = true;
                if (!found) ok = false;
            }
            if (!ok) detail = "discrepancy at n=" + std::to_string(n);
        }
    }
    const double dt = seconds_since(t0);
    if (ok && dt >= 30.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + "s >= 30s";
    }
    report(5, "brute-force (w, I) loop reproduces franke_terms", ok,
           detail.empty() ? "n <= 6, 20 random dominant weights each" : detail);
    CHECK(ok);
}

TEST_CASE("criterion 6: partition lemma suite, exhaustive n <= 7") {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 7 && ok; ++n) {
        const auto all = all_numbered(n);
        for (const auto& j : all) {
            const auto e = eta(j);
            if (!(eta(e) == j)) ok = false;                         // involution
            if (!(w_of(e) == w_of(j).eta_conjugate())) ok = false;  // eta(w_J) = w_{eta(J)}
            std::vector<int> expect;                                // I(eta(J)) = eta(I(J))
            for (int i : kostant_subset(j)) expect.push_back(n - i);
            std::sort(expect.begin(), expect.end());
            if (kostant_subset(e) != expect) ok = false;
            if (is_admissible_numbering(j, zeros(n)) && !is_admissible_numbering(e, zeros(n))) ok = false;
            if (!ok) {
                detail = "pointwise lemma failed at n=" + std::to_string(n);
                break;
            }
        }
        if (!ok) break;

        // every eta-stable admissible numbering renumbers to an eta-admissible one
        for (const auto& j : all) {
            if (!is_admissible_numbering(j, zeros(n)) || !classify_eta(j).stable) continue;
            const auto r = representative_numbering(n, j.blocks(), zeros(n));
            if (!(r.unordered() == j.unordered()) || !is_admissible_numbering(r, zeros(n)) ||
                !classify_eta(r).admissible) {
                ok = false;
                detail = "renumbering failed at n=" + std::to_string(n);
                break;
            }
        }
        if (!ok) break;

        // pi-fiber <-> eta-invariant bijection through K
        const auto reps = enumerate_representatives(n, zeros(n));
        for (const auto& jt : reps) {
            const EtaClass c = classify_eta(jt);
            if (!c.fixed || 2 * c.admissible_l >= jt.r()) continue;
            const int ntilde = n - 2 * jt.cumulative_sizes()[c.admissible_l];
            std::vector<NumberedPartition> images;
            for (const auto& j : reps) {
                if (!classify_eta(j).stable) continue;
                if (!(reduce_pi(j) == jt)) continue;
                const auto k = reduce_k(j);
                if (!classify_eta(k).invariant) ok = false;
                images.push_back(k);
            }
            auto want = enumerate_representatives(ntilde, zeros(ntilde), 0, PartitionFilter::Invariant);
            std::sort(images.begin(), images.end());
            std::sort(want.begin(), want.end());
            if (!(images == want)) {
                ok = false;
                detail = "K bijection failed at n=" + std::to_string(n);
            }
        }
    }
    const double dt = seconds_since(t0);
    if (ok && dt >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + "s >= 60s";
    }
    report(6, "partition lemma suite (eta, w, I, renumbering, K)", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 7: MW suite on 200 random admissible pairs") {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(72025);
    const Kind kinds[3] = {Kind::B, Kind::C, Kind::D};
    for (int it = 0; it < 200 && ok; ++it) {
        const long long n = 1 + static_cast<long long>(rng() % 5);
        const Kind kind = kinds[rng() % 3];
        // build an n-admissible set with <= 6 elements
        std::vector<HalfInt> elems;
        int pairs = 0;
        if (kind == Kind::C) {
            elems.push_back(HalfInt::whole(0));
            pairs = static_cast<int>(rng() % 3);
        } else {
            pairs = 1 + static_cast<int>(rng() % 3);
        }
        long long t = 0;
        for (int i = 0; i < pairs; ++i) {
            if (i == 0) {
                t = (kind == Kind::B) ? n + 2 * static_cast<long long>(rng() % 4) : 2 * (n + static_cast<long long>(rng() % 4));
                if (kind == Kind::B && t % 2 == 0) ++t;
            } else {
                t += 2 * n + 2 * static_cast<long long>(rng() % 4);
            }
            elems.push_back(HalfInt::from_twice(t));
            elems.push_back(HalfInt::from_twice(-t));
        }
        const CharSet s{elems};
        if (!is_admissible(s, n)) {
            ok = false;
            detail = "generator produced an inadmissible set";
            break;
        }
        const CharSet m = mw(s, n);
        if (m.size() != s.size() * static_cast<std::size_t>(n)) ok = false;          // cardinality
        if (n % 2 == 1 && classify(m).kind != classify(s).kind) ok = false;          // type rule, odd n
        if (n % 2 == 0 && m.is_integral() == s.is_integral()) ok = false;            // type rule, even n
        bool found = false;
        for (const auto& [seed, nn] : mw_factorizations(m)) {
            if (!(mw(seed, nn) == m)) ok = false;  // round trip
            if (nn == n && seed == s) found = true;
        }
        if (!found) ok = false;
        if (!ok) detail = "failure at iteration " + std::to_string(it);
    }
    report(7, "MW cardinality, type transformation and inverse round trip", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 8: block characters for 2g+1 <= 9, coordinates <= 3") {
    bool ok = true;
    std::string detail;
    for (int g = 0; 2 * g + 1 <= 9 && ok; ++g) {
        // all Sp_2g dominant tuples 3 >= c_1 >= ... >= c_g >= 0
        std::vector<long long> c(g, 0);
        while (ok) {
            const auto chi = g == 0 ? DominantWeight::pgl({0}) : DominantWeight::sp(c).embed_sp_to_pgl();
            const CharSet s = charset_of(chi).first;
            for (const auto& blocks : symmetric_partitions(s)) {
                const auto bcs = block_characters(s, blocks);
                const auto jpart = charset_index_partition(s, blocks);
                const auto shifted = weyl_shift(chi.coords(), w_of(jpart));
                std::vector<long long> concat;
                long long ksum = 0;
                for (const auto& bc : bcs) {
                    concat.insert(concat.end(), bc.chi.begin(), bc.chi.end());
                    if (((bc.k % 2 + 2) % 2) != ((1 + bc.j) % 2)) ok = false;  // parity law
                    for (std::size_t p = 0; p < bc.chi.size(); ++p)            // eta(chi_i) = chi_i + k_i
                        if (-bc.chi[bc.chi.size() - 1 - p] != bc.chi[p] + bc.k) ok = false;
                    ksum += bc.k * bc.j;
                }
                if (concat != shifted) ok = false;  // concatenation identity
                if (ksum != 0) ok = false;
                if (!ok) {
                    detail = "failure at g=" + std::to_string(g);
                    break;
                }
            }
            if (g == 0) break;
            int i = g - 1;
            while (i >= 0) {
                ++c[i];
                if (c[i] <= (i == 0 ? 3 : c[i - 1])) break;
                --i;
            }
            if (i < 0) break;
            for (int j2 = i + 1; j2 < g; ++j2) c[j2] = 0;
        }
    }
    report(8, "block character concatenation, parity and eta laws", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 9: closed forms") {
    bool ok = true;
    std::string detail;
    for (long long g = 0; g <= 10 && ok; ++g) {
        if (lefschetz_c(g) != pow2(g)) ok = false;
        for (long long n = 1; n <= 2 * g + 1 && ok; n += 2)
            if ((2 * g + 1) % n == 0 && lefschetz_c_from_factors(n, ((2 * g + 1) / n - 1) / 2) != pow2(g)) ok = false;
        if (g >= 1) {
            if (lefschetz_bd(g) != pow2(g - 1)) ok = false;
            for (long long n = 1; n <= g && ok; ++n)
                if (g % n == 0 && lefschetz_bd_from_factors(n, g / n) != pow2(g - 1)) ok = false;
        }
        if (!ok) detail = "lefschetz mismatch at g=" + std::to_string(g);
    }
    if (ok && multiplicity(2, 1) != 4) {
        ok = false;
        detail = "multiplicity(2,1) != 4";
    }
    if (ok) {
        const SquareClass d = SquareClass::from_int(-1);
        const auto eg = endoscopic_grouping({SquareClass::one(), d, d, d}, 3);
        const std::set<std::vector<int>> got(eg.sigma_q.begin(), eg.sigma_q.end());
        const std::set<std::vector<int>> want{{}, {2, 3}, {2, 4}, {3, 4}};
        if (got != want || eg.dim_v != 2) {
            ok = false;
            detail = "endoscopic grouping example failed";
        }
    }
    report(9, "Lefschetz / multiplicity / endoscopic closed forms", ok, detail);
    CHECK(ok);
}
