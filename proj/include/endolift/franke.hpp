#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "endolift/charset.hpp"
#include "endolift/exact.hpp"
#include "endolift/partition.hpp"
#include "endolift/weight.hpp"

namespace endolift {

// ---------------------------------------------------------------------------
// Block characters: the per-block data (k_i, chi_i) attached to an
// eta-invariant partition S_chi = Sigma_1 u .. u Sigma_r.
// ---------------------------------------------------------------------------
struct BlockCharacter {
    CharSet sigma;
    int j;                         // #Sigma_i
    long long gamma;               // rank of Sigma_i
    long long k;                   // -j_1 - .. - j_{i-1} + j_{i+1} + .. + j_r
    std::vector<long long> chi;    // dominant GL_{j} weight
    Kind kind;                     // C or D
};

// k_i and chi_i for the blocks of a partition of a type-C set, evaluated in
// the given block order. The type-C block takes
//   chi = (b_g - k/2, .., b_1 - k/2, -k/2, -b_1 - k/2, .., -b_g - k/2),
// a type-D block takes
//   chi = (b_g + (1-k)/2, .., b_1 + (1-k)/2, -b_1 - (1+k)/2, .., -b_g - (1+k)/2),
// where the b_nu are read off the positive elements p_nu = b_nu + nu.
inline std::vector<BlockCharacter> block_characters(const CharSet& s_chi, const std::vector<CharSet>& blocks) {
    if (classify(s_chi).kind != Kind::C) throw domain_error("block_characters: type C set required");
    // validate: blocks partition s_chi
    std::vector<HalfInt> all;
    for (const auto& b : blocks)
        for (const auto& x : b.elements()) all.push_back(x);
    std::sort(all.begin(), all.end());
    if (!(all == s_chi.elements())) throw domain_error("block_characters: blocks must partition the set");

    const int r = static_cast<int>(blocks.size());
    std::vector<long long> sizes;
    for (const auto& b : blocks) sizes.push_back(static_cast<long long>(b.size()));

    std::vector<BlockCharacter> out;
    for (int i = 0; i < r; ++i) {
        BlockCharacter bc{blocks[i], static_cast<int>(sizes[i]), 0, 0, {}, Kind::C};
        for (int nu = 0; nu < r; ++nu) bc.k += (nu < i ? -sizes[nu] : (nu > i ? sizes[nu] : 0));
        const CharType t = classify(blocks[i]);
        bc.gamma = t.rank;
        bc.kind = t.kind;
        std::vector<long long> b_desc;  // b_gamma, .., b_1
        {
            const auto pos = blocks[i].positive_part();
            for (long long nu = static_cast<long long>(pos.size()); nu >= 1; --nu)
                b_desc.push_back(pos[nu - 1].as_integer() - nu);
        }
        if (t.kind == Kind::C) {
            if (bc.k % 2 != 0) throw invariant_error("block_characters: type C block with odd k");
            const long long h = bc.k / 2;
            for (long long b : b_desc) bc.chi.push_back(b - h);
            bc.chi.push_back(-h);
            for (auto it = b_desc.rbegin(); it != b_desc.rend(); ++it) bc.chi.push_back(-*it - h);
        } else if (t.kind == Kind::D) {
            if (bc.k % 2 == 0) throw invariant_error("block_characters: type D block with even k");
            for (long long b : b_desc) bc.chi.push_back(b + (-bc.k + 1) / 2);
            for (auto it = b_desc.rbegin(); it != b_desc.rend(); ++it) bc.chi.push_back(-*it + (-bc.k - 1) / 2);
        } else {
            throw domain_error("block_characters: blocks of a type C set must be of type C or D");
        }
        out.push_back(std::move(bc));
    }
    return out;
}

// Index partition of 1..#s induced by a list of blocks of s, through the
// unique order preserving bijection {1, .., n} -> s.
inline NumberedPartition charset_index_partition(const CharSet& s, const std::vector<CharSet>& blocks) {
    std::vector<std::vector<int>> idx;
    for (const auto& b : blocks) {
        std::vector<int> jb;
        for (const auto& x : b.elements()) {
            const auto& e = s.elements();
            const auto it = std::lower_bound(e.begin(), e.end(), x);
            if (it == e.end() || !(*it == x)) throw domain_error("charset_index_partition: block not inside set");
            jb.push_back(static_cast<int>(it - e.begin()) + 1);
        }
        idx.push_back(std::move(jb));
    }
    return NumberedPartition(static_cast<int>(s.size()), std::move(idx));
}

// ---------------------------------------------------------------------------
// Franke terms
// ---------------------------------------------------------------------------
struct FrankeTerm {
    NumberedPartition partition;
    Permutation w;
    long long length;
    int sign;
    std::vector<int> kostant_I;
    std::vector<int> levi_shape;
    std::vector<long long> shifted_weight;               // w(chi + rho) - rho
    std::vector<std::vector<long long>> block_weights;   // shifted weight, sliced per block
    std::vector<BlockCharacter> block_chars;             // filled on lifting terms only
};

// w(chi + rho) - rho by the closed formula b_i = a_{w^{-1}(i)} + i - w^{-1}(i).
inline std::vector<long long> weyl_shift(const std::vector<long long>& coords, const Permutation& w) {
    if (coords.size() != w.image.size()) throw domain_error("weyl_shift: rank mismatch");
    const Permutation wi = w.inverse();
    std::vector<long long> b;
    for (int i = 1; i <= w.n(); ++i) b.push_back(coords[wi(i) - 1] + i - wi(i));
    return b;
}

inline std::vector<long long> weyl_shift(const DominantWeight& chi, const Permutation& w) {
    if (!chi.is_linear()) throw domain_error("weyl_shift: linear shape required");
    return weyl_shift(chi.coords(), w);
}

// Two-step route (permute chi + rho, subtract rho), kept independent of the
// closed formula.
inline std::vector<long long> weyl_shift_two_step(const std::vector<long long>& coords, const Permutation& w) {
    const int n = static_cast<int>(coords.size());
    const auto rho = rho_linear(n);
    const Permutation wi = w.inverse();
    std::vector<long long> b;
    for (int i = 1; i <= n; ++i) {
        const HalfInt v = HalfInt::whole(coords[wi(i) - 1]) + rho[wi(i) - 1] - rho[i - 1];
        b.push_back(v.as_integer());
    }
    return b;
}

namespace detail {

inline FrankeTerm make_term(const std::vector<long long>& coords, NumberedPartition rep) {
    FrankeTerm t{std::move(rep), {}, 0, 1, {}, {}, {}, {}, {}};
    t.w = w_of(t.partition);
    t.length = t.w.length();
    t.sign = t.length % 2 == 0 ? 1 : -1;
    t.kostant_I = kostant_subset(t.partition);
    for (int s : t.partition.block_sizes()) t.levi_shape.push_back(s);
    t.shifted_weight = weyl_shift(coords, t.w);

    // Kostant membership, cone condition and the I-from-w identity; a failure
    // here is an internal error, never user input.
    const Permutation wi = t.w.inverse();
    std::vector<int> i_of_w;
    for (int i = 1; i <= t.w.n() - 1; ++i)
        if (wi(i) < wi(i + 1)) i_of_w.push_back(i);
    if (i_of_w != t.kostant_I) throw invariant_error("franke: I(J) != {alpha : w^-1 alpha > 0}");
    if (!is_admissible_numbering(t.partition, coords)) throw invariant_error("franke: cone condition failed");

    const auto cum = t.partition.cumulative_sizes();
    for (int mu = 1; mu <= t.partition.r(); ++mu) {
        std::vector<long long> bw(t.shifted_weight.begin() + cum[mu - 1], t.shifted_weight.begin() + cum[mu]);
        for (std::size_t i = 0; i + 1 < bw.size(); ++i)
            if (bw[i] < bw[i + 1]) throw invariant_error("franke: block weight not dominant");
        t.block_weights.push_back(std::move(bw));
    }
    return t;
}

}  // namespace detail

// One term per unordered partition of {1, .., n}; the representative carries
// the Kostant data (w_J, I(J), l(w_J)) and the shifted weight.
inline std::vector<FrankeTerm> franke_terms(const DominantWeight& chi) {
    if (!chi.is_linear()) throw domain_error("franke_terms: linear shape required");
    std::vector<FrankeTerm> out;
    for (auto& rep : enumerate_representatives(chi.rank(), chi.coords(), chi.a0(), PartitionFilter::All))
        out.push_back(detail::make_term(chi.coords(), std::move(rep)));
    return out;
}

// The symplectic table: only eta-fixed representatives enter. The proposition
// carries no sign factor; length and sign are still reported so the consumer
// can choose a normalization.
inline std::vector<FrankeTerm> franke_terms_sp(const DominantWeight& chi) {
    if (chi.shape().shape == Shape::Sp) return franke_terms_sp(chi.embed_sp_to_pgl());
    if (chi.shape().shape != Shape::PGL || chi.rank() % 2 == 0)
        throw domain_error("franke_terms_sp: PGL(2g+1) weight required");
    if (!is_eta_invariant(chi)) throw domain_error("franke_terms_sp: eta-invariant weight required");
    std::vector<FrankeTerm> out;
    for (auto& rep : enumerate_representatives(chi.rank(), chi.coords(), 0, PartitionFilter::Fixed))
        out.push_back(detail::make_term(chi.coords(), std::move(rep)));
    return out;
}

// The lifting table: one term per eta-invariant partition of S_chi, numbered
// canonically (block containing 0 first, then descending maximum) so that the
// block characters are reproducible; the concatenation identity
// w_J(chi + rho) - rho = (chi_1 | .. | chi_r) holds blockwise.
inline std::vector<FrankeTerm> lifting_terms(const DominantWeight& chi_in) {
    const DominantWeight chi = chi_in.shape().shape == Shape::Sp ? chi_in.embed_sp_to_pgl() : chi_in;
    if (chi.shape().shape != Shape::PGL || chi.rank() % 2 == 0)
        throw domain_error("lifting_terms: PGL(2g+1) weight required");
    if (!is_eta_invariant(chi)) throw domain_error("lifting_terms: eta-invariant weight required");
    const CharSet s = charset_of(chi).first;
    std::vector<FrankeTerm> out;
    for (const auto& blocks : symmetric_partitions(s)) {
        FrankeTerm t = detail::make_term(chi.coords(), charset_index_partition(s, blocks));
        t.block_chars = block_characters(s, blocks);
        // concatenation identity, enforced on every emitted term
        std::size_t off = 0;
        for (const auto& bc : t.block_chars) {
            for (std::size_t i = 0; i < bc.chi.size(); ++i, ++off)
                if (t.shifted_weight[off] != bc.chi[i])
                    throw invariant_error("lifting_terms: concatenation identity failed");
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace endolift
