#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "endolift/charset.hpp"
#include "endolift/exact.hpp"

namespace endolift {

// ---------------------------------------------------------------------------
// Square classes d in Q*/(Q*)^2 as exponent vectors mod 2 over {-1, 2, odd
// primes}; the group law is componentwise addition mod 2.
// ---------------------------------------------------------------------------
struct SquareClass {
    bool negative = false;
    bool two = false;
    std::vector<long long> odd_primes;  // sorted, distinct

    static SquareClass one() { return {}; }
    bool is_one() const { return !negative && !two && odd_primes.empty(); }
    int sign() const { return negative ? -1 : 1; }

    friend SquareClass operator*(const SquareClass& a, const SquareClass& b) {
        SquareClass r;
        r.negative = a.negative != b.negative;
        r.two = a.two != b.two;
        std::set_symmetric_difference(a.odd_primes.begin(), a.odd_primes.end(), b.odd_primes.begin(),
                                      b.odd_primes.end(), std::back_inserter(r.odd_primes));
        return r;
    }
    friend bool operator==(const SquareClass&, const SquareClass&) = default;

    // Reduce a nonzero integer mod squares.
    static SquareClass from_int(long long d) {
        if (d == 0) throw domain_error("SquareClass: zero is not a square class");
        SquareClass r;
        if (d < 0) {
            r.negative = true;
            d = -d;
        }
        int e2 = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++e2;
        }
        r.two = e2 % 2 != 0;
        for (long long p = 3; p * p <= d; p += 2) {
            int e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            if (e % 2 != 0) r.odd_primes.push_back(p);
        }
        if (d > 1) r.odd_primes.push_back(d);
        std::sort(r.odd_primes.begin(), r.odd_primes.end());
        return r;
    }
};

// ---------------------------------------------------------------------------
// Octuple skeletons: the discrete data of one factor of the Main Theorem
// family. Representations are carried as opaque group labels only.
// ---------------------------------------------------------------------------
enum class DConstraintKind { MustBeOne, SignConstrained, Free };

struct DConstraint {
    DConstraintKind kind;
    int sign = 0;  // required sign of d when SignConstrained: (-1)^gamma

    friend bool operator==(const DConstraint&, const DConstraint&) = default;
};

struct OctupleSkeleton {
    CharType kind;    // type of the seed set S_i
    long long gamma;  // its rank
    long long n;      // the MW multiplicity n_i
    CharSet seed;     // S_i (n-admissible)
    CharSet image;    // MW(S_i, n_i)
    DConstraint d_constraint;
    std::string group;   // G^(i)
    std::string group1;  // G_1^(i)
};

struct LiftFamily {
    long long g = 0;
    int r = 0;
    std::vector<OctupleSkeleton> octuples;
    bool sign_obstructed = false;  // forced d-signs multiply to -1
    BigInt multiplicity;           // 2^(g - (r-1)), conjectural
};

namespace detail {

inline OctupleSkeleton make_octuple(const CharSet& seed, long long n, const CharSet& image) {
    const CharType t = classify(seed);
    OctupleSkeleton o{t, t.rank, n, seed, image, {}, "", ""};
    switch (t.kind) {
        case Kind::B:
            o.d_constraint = {DConstraintKind::MustBeOne, 0};
            o.group = "GL_" + std::to_string(2 * t.rank);
            o.group1 = "SO_" + std::to_string(2 * t.rank + 1);
            break;
        case Kind::C:
            o.d_constraint = {DConstraintKind::Free, 0};
            o.group = "PGL_" + std::to_string(2 * t.rank + 1);
            o.group1 = "Sp_" + std::to_string(2 * t.rank);
            break;
        case Kind::D:
            o.d_constraint = {DConstraintKind::SignConstrained, t.rank % 2 == 0 ? 1 : -1};
            o.group = "GL_" + std::to_string(2 * t.rank);
            o.group1 = "SO^d_" + std::to_string(2 * t.rank);
            break;
    }
    return o;
}

inline bool legal_combination(Kind seed_kind, long long n) {
    switch (seed_kind) {
        case Kind::C: return n % 2 == 1;
        case Kind::D: return n % 2 == 1;
        case Kind::B: return n % 2 == 0;
    }
    return false;
}

}  // namespace detail

// Independent re-derivation of every Main Theorem constraint from the octuple
// list alone. Throws invariant_error on any failure.
inline void validate_family(const LiftFamily& f, const CharSet& s_chi) {
    if (f.r != static_cast<int>(f.octuples.size())) throw invariant_error("family: r mismatch");
    if (f.r < 1) throw invariant_error("family: empty");
    int c_blocks = 0;
    long long gamma_n_sum = 0, c_shift = 0, size_sum = 0;
    std::vector<HalfInt> united;
    int forced_sign = 1;
    for (const auto& o : f.octuples) {
        const CharType t = classify(o.seed);
        if (!(t == o.kind) || t.rank != o.gamma) throw invariant_error("family: seed type mismatch");
        if (!detail::legal_combination(t.kind, o.n)) throw invariant_error("family: illegal (kind, parity) pair");
        if (!is_admissible(o.seed, o.n)) throw invariant_error("family: seed not n-admissible");
        if (!(mw(o.seed, o.n) == o.image)) throw invariant_error("family: image != MW(seed, n)");
        for (const auto& x : o.image.elements()) united.push_back(x);
        size_sum += static_cast<long long>(o.image.size());
        switch (t.kind) {
            case Kind::C:
                ++c_blocks;
                c_shift = (o.n - 1) / 2;
                gamma_n_sum += o.gamma * o.n;
                if (o.d_constraint.kind != DConstraintKind::Free) throw invariant_error("family: C block d-constraint");
                break;
            case Kind::B:
                gamma_n_sum += o.gamma * o.n;
                if (o.d_constraint.kind != DConstraintKind::MustBeOne) throw invariant_error("family: B block d-constraint");
                break;
            case Kind::D:
                gamma_n_sum += o.gamma * o.n;
                if (o.d_constraint.kind != DConstraintKind::SignConstrained ||
                    o.d_constraint.sign != (o.gamma % 2 == 0 ? 1 : -1))
                    throw invariant_error("family: D block d-constraint");
                forced_sign *= o.d_constraint.sign;
                break;
        }
    }
    if (c_blocks != 1) throw invariant_error("family: exactly one type C block required");
    std::sort(united.begin(), united.end());
    if (!(united == s_chi.elements())) throw invariant_error("family: images do not partition S_chi");
    if (size_sum != static_cast<long long>(s_chi.size())) throw invariant_error("family: size identity failed");
    // g = sum gamma_i n_i + (n_C - 1)/2; the two sides agree with #S = 2g+1.
    if (f.g != gamma_n_sum + c_shift) throw invariant_error("family: rank bookkeeping failed");
    if ((f.sign_obstructed ? -1 : 1) != forced_sign) throw invariant_error("family: obstruction flag wrong");
    if (f.r > f.g + 1) throw invariant_error("family: r out of range");
    if (f.multiplicity != pow2(f.g - (f.r - 1))) throw invariant_error("family: multiplicity wrong");
}

// All Main Theorem families over a type-C characteristic set: one family per
// (symmetric partition, per-block MW factorization) combination. Families
// whose forced d-signs multiply to -1 are emitted with the obstruction flag
// set rather than suppressed.
inline std::vector<LiftFamily> enumerate_families(const CharSet& s_chi) {
    if (classify(s_chi).kind != Kind::C) throw domain_error("enumerate_families: type C set required");
    const long long g = (static_cast<long long>(s_chi.size()) - 1) / 2;
    std::vector<LiftFamily> out;
    for (const auto& blocks : symmetric_partitions(s_chi)) {
        std::vector<std::vector<std::pair<CharSet, long long>>> options;
        for (const auto& b : blocks) {
            std::vector<std::pair<CharSet, long long>> legal;
            for (auto& f : mw_factorizations(b))
                if (detail::legal_combination(classify(f.first).kind, f.second)) legal.push_back(std::move(f));
            options.push_back(std::move(legal));
        }
        std::vector<std::size_t> pick(options.size(), 0);
        while (true) {
            LiftFamily fam;
            fam.g = g;
            fam.r = static_cast<int>(blocks.size());
            int forced_sign = 1;
            for (std::size_t i = 0; i < options.size(); ++i) {
                const auto& [seed, n] = options[i][pick[i]];
                fam.octuples.push_back(detail::make_octuple(seed, n, blocks[i]));
                if (fam.octuples.back().d_constraint.kind == DConstraintKind::SignConstrained)
                    forced_sign *= fam.octuples.back().d_constraint.sign;
            }
            fam.sign_obstructed = forced_sign < 0;
            fam.multiplicity = pow2(fam.g - (fam.r - 1));
            validate_family(fam, s_chi);
            out.push_back(std::move(fam));
            // odometer over the factorization choices
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < options[i].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form evaluators
// ---------------------------------------------------------------------------

// |tr(eta)| on the type C side: 2^g.
inline BigInt lefschetz_c(long long g) {
    if (g < 0) throw domain_error("lefschetz_c: g >= 0 required");
    return pow2(g);
}

// Factor route for the same number: (1/2) * (2^n)^m * 2^(nu+1) with n = 2nu+1
// and g = m n + nu.
inline BigInt lefschetz_c_from_factors(long long n, long long m) {
    if (n < 1 || n % 2 == 0 || m < 0) throw domain_error("lefschetz_c_from_factors: odd n >= 1, m >= 0");
    const long long nu = (n - 1) / 2;
    return pow2(n * m) * pow2(nu + 1) / 2;
}

// |tr(eta)| per eigenspace on the types B/D side: 2^(g-1).
inline BigInt lefschetz_bd(long long g) {
    if (g < 1) throw domain_error("lefschetz_bd: g >= 1 required");
    return pow2(g - 1);
}

inline BigInt lefschetz_bd_from_factors(long long n, long long m) {
    if (n < 1 || m < 1) throw domain_error("lefschetz_bd_from_factors: n, m >= 1");
    return pow2(n * m) / 2;
}

// Conjectural multiplicity 2^(g - (r-1)) of one family member.
inline BigInt multiplicity(long long g, long long r) {
    if (r < 1 || r > g + 1) throw domain_error("multiplicity: 1 <= r <= g+1 required");
    return pow2(g - (r - 1));
}

// ---------------------------------------------------------------------------
// Elliptic endoscopy grouping: Sigma = subsets of {2, .., r} under symmetric
// difference, Sigma_Q = kernel of I -> prod_{i in I} d_i, and the dimension
// 2^g / #Sigma_Q of the associated Galois representations.
// ---------------------------------------------------------------------------
struct EndoscopicGrouping {
    std::vector<std::vector<int>> sigma_q;  // each subset sorted; list in mask order
    BigInt dim_v;
};

inline EndoscopicGrouping endoscopic_grouping(const std::vector<SquareClass>& d, long long g) {
    const int r = static_cast<int>(d.size());
    if (r < 1) throw domain_error("endoscopic_grouping: r >= 1 required");
    if (r - 1 > 62) throw domain_error("endoscopic_grouping: too many blocks");
    EndoscopicGrouping eg;
    for (unsigned long long mask = 0; mask < (1ULL << (r - 1)); ++mask) {
        SquareClass prod = SquareClass::one();
        std::vector<int> subset;
        for (int i = 0; i < r - 1; ++i)
            if (mask & (1ULL << i)) {
                prod = prod * d[static_cast<std::size_t>(i) + 1];
                subset.push_back(i + 2);
            }
        if (prod.is_one()) eg.sigma_q.push_back(std::move(subset));
    }
    const BigInt total = pow2(g);
    const BigInt q = static_cast<long long>(eg.sigma_q.size());
    if (total % q != 0) throw invariant_error("endoscopic_grouping: dimension not integral");
    eg.dim_v = total / q;
    if (eg.dim_v * q != total) throw invariant_error("endoscopic_grouping: coset dimension sum failed");
    return eg;
}

// ---------------------------------------------------------------------------
// Classical-weight dictionaries for the small types, and the g = 3 table.
// ---------------------------------------------------------------------------

// Type C_1 set {-(k+1), 0, k+1} <-> elliptic cusp forms of weight k+2.
inline long long c1_classical_weight(const CharSet& s) {
    const CharType t = classify(s);
    if (t.kind != Kind::C || t.rank != 1) throw domain_error("c1_classical_weight: type C_1 set required");
    return s.max().as_integer() + 1;
}

// Type B_1 set {-(k+1/2), k+1/2} <-> classical cusp forms of weight 2k+2.
inline long long b1_classical_weight(const CharSet& s) {
    const CharType t = classify(s);
    if (t.kind != Kind::B || t.rank != 1) throw domain_error("b1_classical_weight: type B_1 set required");
    return s.max().twice() + 1;
}

// Type D_2 set {-(a+2), -(b+1), b+1, a+2} <-> pair of weights (a+b+4, a-b+2).
inline std::pair<long long, long long> d2_classical_weights(const CharSet& s) {
    const CharType t = classify(s);
    if (t.kind != Kind::D || t.rank != 2) throw domain_error("d2_classical_weights: type D_2 set required");
    const auto pos = s.positive_part();
    const long long p1 = pos[0].as_integer(), p2 = pos[1].as_integer();
    return {p2 + p1 + 1, p2 - p1 + 1};
}

struct G3Row {
    CharSet c1_set;
    long long c1_weight;
    CharSet d2_set;
    std::pair<long long, long long> d2_weights;
};

// The three C_1 u D_2 splittings of S = {-(a+3), -(b+2), -(c+1), 0, ...},
// with the classical weights read off the dictionaries.
inline std::vector<G3Row> g3_weight_table(long long a, long long b, long long c) {
    if (!(a >= b && b >= c && c >= 0)) throw domain_error("g3_weight_table: a >= b >= c >= 0 required");
    const long long scales[3] = {a + 3, b + 2, c + 1};
    std::vector<G3Row> rows;
    for (int i = 0; i < 3; ++i) {
        const long long p = scales[i];
        CharSet c1 = CharSet::of_integers({-p, 0, p});
        std::vector<HalfInt> rest;
        for (int j = 0; j < 3; ++j)
            if (j != i) {
                rest.push_back(HalfInt::whole(scales[j]));
                rest.push_back(HalfInt::whole(-scales[j]));
            }
        CharSet d2{std::move(rest)};
        rows.push_back(G3Row{c1, c1_classical_weight(c1), d2, d2_classical_weights(d2)});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Worked example reports: the classical g = 2 case labels and the Ikeda family
// ---------------------------------------------------------------------------

// S for the scalar Sp_2g weight (k, .., k): {0, +-(k+1), .., +-(k+g)}.
inline CharSet scalar_weight_charset(long long g, long long k) {
    if (g < 1 || k < 0) throw domain_error("scalar_weight_charset: g >= 1, k >= 0 required");
    std::vector<HalfInt> v{HalfInt::whole(0)};
    for (long long i = 1; i <= g; ++i) {
        v.push_back(HalfInt::whole(k + i));
        v.push_back(HalfInt::whole(-(k + i)));
    }
    return CharSet(std::move(v));
}

// Classical case labels for the g = 2 families over S = {-(a+2), -(b+1), 0, b+1, a+2}.
inline std::vector<std::string> g2_case_labels(const LiftFamily& f, long long a, long long b) {
    std::vector<std::string> labels;
    if (f.r == 1) {
        labels.push_back(f.octuples[0].n == 1 ? "a" : "a'");
    } else if (f.r == 2) {
        const auto& c_oct = f.octuples[0];  // canonical order: C image first
        const auto& d_oct = f.octuples[1];
        if (c_oct.image.size() == 1) {
            labels.push_back(d_oct.n == 1 ? "b" : "b'");
            if (d_oct.n == 2) labels.push_back("saito-kurokawa");
        } else if (c_oct.image.max() == HalfInt::whole(a + 2)) {
            labels.push_back("c");
        } else if (c_oct.image.max() == HalfInt::whole(b + 1)) {
            labels.push_back(c_oct.n == 1 ? "d" : "d'");
            if (c_oct.n == 3) labels.push_back("klingen-cap");
        } else {
            throw invariant_error("g2_case_labels: unexpected C-block scale");
        }
    } else {
        labels.push_back("e");
    }
    return labels;
}

struct IkedaReport {
    long long gamma = 0, k = 0;
    long long g = 0;
    long long seed_weight = 0;    // classical weight 2k + 2 gamma + 2 of the B_1 seed
    long long siegel_weight = 0;  // k + g + 1
    bool saito_kurokawa = false;
    std::optional<LiftFamily> family;
};

// Locate the Ikeda family [{0}, n=1] + [MW({+-(k+gamma+1/2)}, 2 gamma)] among
// the enumerated families of the scalar-weight set.
inline IkedaReport ikeda_family(long long gamma, long long k) {
    if (gamma < 1 || k < 0) throw domain_error("ikeda_family: gamma >= 1, k >= 0 required");
    IkedaReport rep;
    rep.gamma = gamma;
    rep.k = k;
    rep.g = 2 * gamma;
    rep.siegel_weight = k + rep.g + 1;
    rep.saito_kurokawa = gamma == 1;
    const CharSet s = scalar_weight_charset(rep.g, k);
    const CharSet want_seed = CharSet::from_twice({-(2 * (k + gamma) + 1), 2 * (k + gamma) + 1});
    for (auto& f : enumerate_families(s)) {
        if (f.r != 2) continue;
        if (f.octuples[0].image.size() != 1) continue;
        if (!(f.octuples[1].seed == want_seed) || f.octuples[1].n != 2 * gamma) continue;
        rep.seed_weight = b1_classical_weight(f.octuples[1].seed);
        rep.family = std::move(f);
        break;
    }
    if (!rep.family) throw invariant_error("ikeda_family: expected family not found");
    return rep;
}

}  // namespace endolift
