#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "endolift/charset.hpp"
#include "endolift/exact.hpp"

namespace endolift {

enum class Shape { GL, PGL, GLxGL1, Sp, GSO };

struct GroupShape {
    Shape shape;
    int n;  // ambient size: matrix size for the linear shapes, 2g for Sp and GSO

    int genus() const { return n / 2; }
    friend bool operator==(const GroupShape&, const GroupShape&) = default;

    std::string str() const {
        switch (shape) {
            case Shape::GL: return "GL(" + std::to_string(n) + ")";
            case Shape::PGL: return "PGL(" + std::to_string(n) + ")";
            case Shape::GLxGL1: return "GL(" + std::to_string(n) + ")xGL(1)";
            case Shape::Sp: return "Sp(" + std::to_string(n) + ")";
            case Shape::GSO: return "GSO(" + std::to_string(n) + ")";
        }
        return "?";
    }
};

// rho of GL_n / PGL_n: ((n-1)/2, (n-3)/2, .., (1-n)/2).
inline std::vector<HalfInt> rho_linear(int n) {
    std::vector<HalfInt> r;
    for (int i = 1; i <= n; ++i) r.push_back(HalfInt::from_twice(n + 1 - 2 * i));
    return r;
}

// ---------------------------------------------------------------------------
// DominantWeight in ambient coordinates. Linear shapes store the full
// coordinate vector (a_1 >= .. >= a_n), GLxGL1 additionally carries a_0.
// Sp(2g) stores the descending g-tuple (a_g, .., a_1); GSO(2g) stores
// (n_1, .., n_g) with n_0 in the a_0 slot.
// ---------------------------------------------------------------------------
class DominantWeight {
public:
    DominantWeight(GroupShape shape, std::vector<long long> coords, long long a0 = 0)
        : shape_(shape), coords_(std::move(coords)), a0_(a0) {
        validate();
    }

    static DominantWeight pgl(std::vector<long long> coords) {
        const int n = static_cast<int>(coords.size());
        return DominantWeight({Shape::PGL, n}, std::move(coords));
    }
    static DominantWeight gl(std::vector<long long> coords) {
        const int n = static_cast<int>(coords.size());
        return DominantWeight({Shape::GL, n}, std::move(coords));
    }
    static DominantWeight gl_gl1(std::vector<long long> coords, long long a0) {
        const int n = static_cast<int>(coords.size());
        return DominantWeight({Shape::GLxGL1, n}, std::move(coords), a0);
    }
    static DominantWeight sp(std::vector<long long> coords) {
        const int n = static_cast<int>(coords.size());
        return DominantWeight({Shape::Sp, 2 * n}, std::move(coords));
    }
    static DominantWeight gso(std::vector<long long> coords, long long n0) {
        const int n = static_cast<int>(coords.size());
        return DominantWeight({Shape::GSO, 2 * n}, std::move(coords), n0);
    }

    const GroupShape& shape() const { return shape_; }
    const std::vector<long long>& coords() const { return coords_; }
    long long a0() const { return a0_; }
    bool is_linear() const {
        return shape_.shape == Shape::GL || shape_.shape == Shape::PGL || shape_.shape == Shape::GLxGL1;
    }
    int rank() const { return static_cast<int>(coords_.size()); }

    // chi + rho for the linear shapes.
    std::vector<HalfInt> chi_plus_rho() const {
        if (!is_linear()) throw domain_error("chi_plus_rho: linear shape required");
        auto r = rho_linear(rank());
        for (int i = 0; i < rank(); ++i) r[i] = r[i] + HalfInt::whole(coords_[i]);
        return r;
    }

    // w(chi) = b_0 for GLxGL1.
    long long weight_w() const {
        if (shape_.shape != Shape::GLxGL1) throw domain_error("weight_w: GLxGL1 shape required");
        return a0_;
    }

    // (a_g, .., a_1) on Sp_2g embeds as the eta-invariant
    // (a_g, .., a_1, 0, -a_1, .., -a_g) on PGL_{2g+1}.
    DominantWeight embed_sp_to_pgl() const {
        if (shape_.shape != Shape::Sp) throw domain_error("embed_sp_to_pgl: Sp shape required");
        std::vector<long long> c(coords_);
        c.push_back(0);
        for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) c.push_back(-*it);
        return pgl(std::move(c));
    }

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    void validate() {
        switch (shape_.shape) {
            case Shape::GL:
            case Shape::PGL:
            case Shape::GLxGL1: {
                if (static_cast<int>(coords_.size()) != shape_.n) throw domain_error("weight: rank mismatch");
                for (std::size_t i = 0; i + 1 < coords_.size(); ++i)
                    if (coords_[i] < coords_[i + 1]) throw domain_error("weight: coordinates must be non-increasing");
                if (shape_.shape == Shape::PGL) {
                    long long sum = std::accumulate(coords_.begin(), coords_.end(), 0LL);
                    if (sum != 0) throw domain_error("weight: PGL coordinates must sum to zero");
                    if (a0_ != 0) throw domain_error("weight: PGL has no a_0");
                }
                if (shape_.shape == Shape::GL && a0_ != 0) throw domain_error("weight: GL has no a_0");
                break;
            }
            case Shape::Sp: {
                if (2 * static_cast<int>(coords_.size()) != shape_.n) throw domain_error("weight: rank mismatch");
                for (std::size_t i = 0; i + 1 < coords_.size(); ++i)
                    if (coords_[i] < coords_[i + 1]) throw domain_error("weight: coordinates must be non-increasing");
                if (!coords_.empty() && coords_.back() < 0) throw domain_error("weight: Sp coordinates must be >= 0");
                if (a0_ != 0) throw domain_error("weight: Sp has no a_0");
                break;
            }
            case Shape::GSO: {
                if (2 * static_cast<int>(coords_.size()) != shape_.n) throw domain_error("weight: rank mismatch");
                const int g = static_cast<int>(coords_.size());
                for (int i = 0; i + 1 < g; ++i)
                    if (coords_[i] < coords_[i + 1]) throw domain_error("weight: GSO chamber violated");
                if (g >= 2 && coords_[g - 1] < a0_ - coords_[g - 2]) throw domain_error("weight: GSO chamber violated");
                break;
            }
        }
    }

    GroupShape shape_;
    std::vector<long long> coords_;
    long long a0_;
};

// eta acts by (a_1, .., a_n) -> (-a_n, .., -a_1) on GL_n / PGL_n and by
// (a_1, .., a_n; a_0) -> (a_0 - a_n, .., a_0 - a_1; a_0) on GL_n x GL_1.
inline DominantWeight eta_weight(const DominantWeight& chi) {
    if (!chi.is_linear()) throw domain_error("eta_weight: linear shape required");
    std::vector<long long> c;
    for (auto it = chi.coords().rbegin(); it != chi.coords().rend(); ++it) c.push_back(chi.a0() - *it);
    return DominantWeight(chi.shape(), std::move(c), chi.a0());
}

inline bool is_eta_invariant(const DominantWeight& chi) { return eta_weight(chi) == chi; }

// Raw describing set: the entries of chi + rho (shifted by b_0/2 for GLxGL1),
// sorted ascending. Always strictly decreasing in the original order, hence
// duplicate-free, but symmetric only for eta-invariant chi.
inline std::vector<HalfInt> describing_set(const DominantWeight& chi) {
    std::vector<HalfInt> b = chi.chi_plus_rho();
    if (chi.shape().shape == Shape::GLxGL1) {
        // shift by b_0 / 2
        for (auto& x : b) x = HalfInt::from_twice(x.twice() - chi.weight_w());
    }
    std::sort(b.begin(), b.end());
    return b;
}

// S_chi as a characteristic set, together with the weight for GLxGL1.
// Requires the describing set to be symmetric (eta-invariant chi).
inline std::pair<CharSet, std::optional<long long>> charset_of(const DominantWeight& chi) {
    if (chi.shape().shape == Shape::Sp) return charset_of(chi.embed_sp_to_pgl());
    CharSet s(describing_set(chi));
    std::optional<long long> w;
    if (chi.shape().shape == Shape::GLxGL1) w = chi.weight_w();
    return {std::move(s), w};
}

// Inverse dictionaries: type C_g <-> PGL_{2g+1}; type B_g <-> GLxGL1(2g) with
// even weight; type D_g <-> GLxGL1(2g) with odd weight.
inline DominantWeight weight_of_charset(const CharSet& s, const GroupShape& shape,
                                        std::optional<long long> w = std::nullopt) {
    const CharType t = classify(s);
    const int n = static_cast<int>(s.size());
    std::vector<HalfInt> desc(s.elements().rbegin(), s.elements().rend());
    if (shape.shape == Shape::PGL) {
        if (t.kind != Kind::C || shape.n != n) throw domain_error("weight_of_charset: need type C matching PGL(2g+1)");
        if (w && *w != 0) throw domain_error("weight_of_charset: PGL has no weight");
        const auto rho = rho_linear(n);
        std::vector<long long> c;
        for (int i = 0; i < n; ++i) c.push_back((desc[i] - rho[i]).as_integer());
        return DominantWeight::pgl(std::move(c));
    }
    if (shape.shape == Shape::GLxGL1) {
        if (shape.n != n) throw domain_error("weight_of_charset: size mismatch");
        if (!w) throw domain_error("weight_of_charset: GLxGL1 requires a weight");
        const bool even = (*w % 2 == 0);
        if (even && t.kind != Kind::B) throw domain_error("weight_of_charset: even weight requires type B");
        if (!even && t.kind != Kind::D) throw domain_error("weight_of_charset: odd weight requires type D");
        const auto rho = rho_linear(n);
        std::vector<long long> c;
        for (int i = 0; i < n; ++i) {
            const long long twice = desc[i].twice() + *w - rho[i].twice();
            if (twice % 2 != 0) throw invariant_error("weight_of_charset: non-integral coordinate");
            c.push_back(twice / 2);
        }
        return DominantWeight::gl_gl1(std::move(c), *w);
    }
    throw domain_error("weight_of_charset: unsupported shape");
}

// ---------------------------------------------------------------------------
// GSO / GSpin side
// ---------------------------------------------------------------------------
enum class SigmaStatus { Fixed, Positive, Flipped };

inline const char* sigma_status_name(SigmaStatus s) {
    switch (s) {
        case SigmaStatus::Fixed: return "fixed";
        case SigmaStatus::Positive: return "positive";
        case SigmaStatus::Flipped: return "flipped";
    }
    return "?";
}

// Trichotomy for dominant GSO weights: sigma* chi = chi, chi sigma-positive,
// or sigma* chi sigma-positive, decided by the sign of n_g - n_0/2.
inline SigmaStatus sigma_status(const DominantWeight& chi) {
    if (chi.shape().shape != Shape::GSO) throw domain_error("sigma_status: GSO shape required");
    const long long twice = 2 * chi.coords().back() - chi.a0();
    if (twice == 0) return SigmaStatus::Fixed;
    return twice > 0 ? SigmaStatus::Positive : SigmaStatus::Flipped;
}

inline DominantWeight sigma_star(const DominantWeight& chi) {
    if (chi.shape().shape != Shape::GSO) throw domain_error("sigma_star: GSO shape required");
    auto c = chi.coords();
    c.back() = chi.a0() - c.back();
    return DominantWeight(chi.shape(), std::move(c), chi.a0());
}

inline std::vector<long long> delta_gspin(int g) {
    std::vector<long long> d{0};
    for (int i = g - 1; i >= 0; --i) d.push_back(i);
    return d;  // (0; g-1, .., 1, 0)
}

// iota(chi) = pi^*(i^{-1}(chi + delta_G) - delta_GSpin) for eta-invariant
// GLxGL1(2g) weights, in closed form
//   (m_1, .., m_g, m_0 - m_g, .., m_0 - m_1; m_0)
//     -> (m_0; m_1 - (m_0-1)/2, .., m_g - (m_0-1)/2).
// Entries are integral exactly when m_0 is odd.
inline std::vector<HalfInt> gspin_iota(const DominantWeight& chi) {
    if (chi.shape().shape != Shape::GLxGL1 || chi.rank() % 2 != 0)
        throw domain_error("gspin_iota: GLxGL1(2g) shape required");
    if (!is_eta_invariant(chi)) throw domain_error("gspin_iota: eta-invariant weight required");
    const int g = chi.rank() / 2;
    const long long m0 = chi.a0();
    std::vector<HalfInt> out{HalfInt::whole(m0)};
    for (int i = 0; i < g; ++i) out.push_back(HalfInt::from_twice(2 * chi.coords()[i] - (m0 - 1)));
    return out;
}

// Same map computed along its definition: shift by delta_G, pull back through
// i, subtract delta_GSpin, apply pi^*. Kept as an independent route for tests.
inline std::vector<HalfInt> gspin_iota_composed(const DominantWeight& chi) {
    if (chi.shape().shape != Shape::GLxGL1 || chi.rank() % 2 != 0)
        throw domain_error("gspin_iota_composed: GLxGL1(2g) shape required");
    if (!is_eta_invariant(chi)) throw domain_error("gspin_iota_composed: eta-invariant weight required");
    const int n = chi.rank(), g = n / 2;
    // chi + delta_G, delta_G = (g - 1/2, .., 1/2, -1/2, .., 1/2 - g; 0)
    std::vector<HalfInt> shifted;
    for (int i = 1; i <= n; ++i)
        shifted.push_back(HalfInt::from_twice(2 * chi.coords()[i - 1] + (n + 1 - 2 * i)));
    // i^{-1}: (m_1', .., m_g', m_0' - m_g', ..; m_0') -> (m_0', m_1', .., m_g')
    const HalfInt m0p = HalfInt::whole(chi.a0());
    for (int i = 0; i < g; ++i)
        if (!(shifted[i] + shifted[n - 1 - i] == m0p))
            throw invariant_error("gspin_iota_composed: image not in the eta-fixed lattice");
    const auto dsp = delta_gspin(g);
    std::vector<HalfInt> pre{m0p - HalfInt::whole(dsp[0])};
    for (int i = 0; i < g; ++i) pre.push_back(shifted[i] - HalfInt::whole(dsp[i + 1]));
    // pi^*: (m_0, m_1, .., m_g) -> (m_0; m_i - m_0/2), exact in twice-units
    std::vector<HalfInt> out{pre[0]};
    for (int i = 1; i <= g; ++i) out.push_back(HalfInt::from_twice(pre[i].twice() - pre[0].twice() / 2));
    return out;
}

// ---------------------------------------------------------------------------
// Archimedean parameter data
// ---------------------------------------------------------------------------
struct ArchParam {
    std::vector<HalfInt> entries;  // b_1, .., b_n with b_i + b_{n+1-i} = b_0
    HalfInt b0;
    int epsilon;  // +1 iff the describing set is integral
};

inline ArchParam arch_param(const DominantWeight& chi_in) {
    const DominantWeight chi = chi_in.shape().shape == Shape::Sp ? chi_in.embed_sp_to_pgl() : chi_in;
    if (!chi.is_linear()) throw domain_error("arch_param: unsupported shape");
    if (!is_eta_invariant(chi)) throw domain_error("arch_param: eta-invariant weight required");
    ArchParam p;
    p.entries = chi.chi_plus_rho();
    p.b0 = chi.shape().shape == Shape::GLxGL1 ? HalfInt::whole(chi.weight_w()) : HalfInt::whole(0);
    const int n = chi.rank();
    for (int i = 0; i < n; ++i)
        if (!(p.entries[i] + p.entries[n - 1 - i] == p.b0)) throw invariant_error("arch_param: pairing violated");
    const auto s = describing_set(chi);
    p.epsilon = s.front().is_integral() ? 1 : -1;
    return p;
}

enum class LanglandsTarget { GSp, GSO };

// The coefficient system alone decides the target: type B factors through
// GSp_{2g}(C), type D through GSO_{2g}(C).
inline LanglandsTarget langlands_target(const CharSet& s) {
    const CharType t = classify(s);
    if (t.kind == Kind::B) return LanglandsTarget::GSp;
    if (t.kind == Kind::D) return LanglandsTarget::GSO;
    throw domain_error("langlands_target: type B or D required");
}

// ---------------------------------------------------------------------------
// rho_G = rho_H check for the A_{2g} <-> C_g folding. The roots of H are
// beta = c(alpha) * S_eta(alpha) over representatives of the non-long
// eta-orbits, with c = 2 exactly on the short roots.
// ---------------------------------------------------------------------------
inline bool rho_compat_check(int g) {
    if (g < 1) throw domain_error("rho_compat_check: g >= 1 required");
    const int n = 2 * g + 1;
    const auto rho = rho_linear(n);
    for (int i = 0; i < n; ++i)
        if (!(rho[i] == -rho[n - 1 - i])) return false;  // eta-invariance of rho

    auto etai = [n](int i) { return n + 1 - i; };
    // Sum of the folded positive roots beta, in ambient coordinates (1-based).
    std::vector<long long> sum(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (j == etai(i)) continue;  // long, excluded
            const int pi = etai(j), pj = etai(i);
            if (std::pair(pi, pj) < std::pair(i, j)) continue;  // one representative per orbit
            const long long c = (i == g + 1 || j == g + 1) ? 2 : 1;  // short roots fold with c = 2
            sum[i] += c;
            sum[j] -= c;
            sum[pi] += c;
            sum[pj] -= c;
        }
    }
    // The sum must lie in the eta-fixed lattice, and its half must restrict
    // to the same vector as rho_G under the identification with Z^g.
    if (sum[g + 1] != 0) return false;
    for (int i = 1; i <= n; ++i)
        if (sum[i] != -sum[etai(i)]) return false;
    for (int i = 1; i <= g; ++i)
        if (sum[i] != 2 * rho[i - 1].as_integer()) return false;
    return true;
}

}  // namespace endolift
