#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "endolift/charset.hpp"
#include "endolift/exact.hpp"

namespace endolift {

// ---------------------------------------------------------------------------
// Permutation of {1, .., n}, stored as the one-line image (image[i-1] = w(i)).
// ---------------------------------------------------------------------------
struct Permutation {
    std::vector<int> image;

    int n() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[i - 1]; }

    Permutation inverse() const {
        Permutation r;
        r.image.assign(image.size(), 0);
        for (int i = 1; i <= n(); ++i) r.image[image[i - 1] - 1] = i;
        return r;
    }

    long long length() const {  // inversion count
        long long l = 0;
        for (std::size_t i = 0; i < image.size(); ++i)
            for (std::size_t j = i + 1; j < image.size(); ++j)
                if (image[i] > image[j]) ++l;
        return l;
    }
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    static Permutation identity(int n) {
        Permutation p;
        for (int i = 1; i <= n; ++i) p.image.push_back(i);
        return p;
    }

    // Conjugate by the order reversing involution i -> n+1-i.
    Permutation eta_conjugate() const {
        Permutation r;
        r.image.assign(image.size(), 0);
        const int m = n();
        for (int i = 1; i <= m; ++i) r.image[i - 1] = m + 1 - image[m + 1 - i - 1];
        return r;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// ---------------------------------------------------------------------------
// NumberedPartition: ordered tuple (J_1, .., J_r) of disjoint nonempty blocks
// covering {1, .., n}. An optional label list carries an order isomorphism to
// another totally ordered ground set (e.g. a characteristic set).
// ---------------------------------------------------------------------------
class NumberedPartition {
public:
    NumberedPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        std::size_t total = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw domain_error("NumberedPartition: empty block");
            std::sort(b.begin(), b.end());
            for (int x : b) {
                if (x < 1 || x > n || seen[x]) throw domain_error("NumberedPartition: blocks must partition 1..n");
                seen[x] = 1;
            }
            total += b.size();
        }
        if (total != static_cast<std::size_t>(n)) throw domain_error("NumberedPartition: blocks must cover 1..n");
    }

    int n() const { return n_; }
    int r() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int mu) const { return blocks_[mu - 1]; }  // 1-based

    std::vector<int> block_sizes() const {
        std::vector<int> s;
        for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
        return s;
    }

    // i_mu = #J_1 + ... + #J_mu for mu = 0..r
    std::vector<int> cumulative_sizes() const {
        std::vector<int> c{0};
        for (const auto& b : blocks_) c.push_back(c.back() + static_cast<int>(b.size()));
        return c;
    }

    // The same blocks as an unordered (canonically sorted) partition.
    std::vector<std::vector<int>> unordered() const {
        auto u = blocks_;
        std::sort(u.begin(), u.end());
        return u;
    }

    friend bool operator==(const NumberedPartition& a, const NumberedPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const NumberedPartition& a, const NumberedPartition& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.blocks_ < b.blocks_;
    }

    std::string str() const {
        std::string s;
        for (const auto& b : blocks_) {
            s += s.empty() ? "(" : "|";
            for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        }
        return s + ")";
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

inline int eta_point(int n, int i) { return n + 1 - i; }

inline std::vector<int> eta_block(int n, const std::vector<int>& b) {
    std::vector<int> r;
    for (int x : b) r.push_back(eta_point(n, x));
    std::sort(r.begin(), r.end());
    return r;
}

// eta(J) = (eta(J_r), .., eta(J_1)); an involution.
inline NumberedPartition eta(const NumberedPartition& j) {
    std::vector<std::vector<int>> bl;
    for (int mu = j.r(); mu >= 1; --mu) bl.push_back(eta_block(j.n(), j.block(mu)));
    return NumberedPartition(j.n(), std::move(bl));
}

struct EtaClass {
    bool stable = false;      // eta(J) ~ J (same unordered partition)
    bool fixed = false;       // eta(J) = J as a tuple
    bool invariant = false;   // eta(J_mu) = J_mu for every mu
    bool admissible = false;  // eta swaps a prefix with the mirrored suffix, fixes the middle
    bool chronological = false;
    int admissible_l = -1;  // the l of the admissibility condition, when admissible
};

inline EtaClass classify_eta(const NumberedPartition& j) {
    EtaClass c;
    const NumberedPartition e = eta(j);
    c.fixed = (e == j);
    c.stable = (e.unordered() == j.unordered());
    c.invariant = true;
    for (int mu = 1; mu <= j.r(); ++mu)
        if (eta_block(j.n(), j.block(mu)) != j.block(mu)) {
            c.invariant = false;
            break;
        }
    const int r = j.r();
    for (int l = 0; 2 * l <= r && !c.admissible; ++l) {
        bool ok = true;
        for (int mu = 1; mu <= l && ok; ++mu)
            ok = eta_block(j.n(), j.block(mu)) == j.block(r + 1 - mu);
        for (int mu = l + 1; mu <= r - l && ok; ++mu)
            ok = eta_block(j.n(), j.block(mu)) == j.block(mu);
        if (ok) {
            c.admissible = true;
            c.admissible_l = l;
        }
    }
    c.chronological = true;
    {
        int next = 1;
        for (const auto& b : j.blocks())
            for (int x : b)
                if (x != next++) {
                    c.chronological = false;
                    break;
                }
    }
    return c;
}

// The unique permutation mapping J_mu order preservingly onto the
// chronological block {i_{mu-1}+1, .., i_mu}.
inline Permutation w_of(const NumberedPartition& j) {
    Permutation w;
    w.image.assign(static_cast<std::size_t>(j.n()), 0);
    int next = 1;
    for (const auto& b : j.blocks())
        for (int x : b) w.image[x - 1] = next++;
    return w;
}

// I(J) = Delta - {alpha_{i_1}, .., alpha_{i_{r-1}}}, as indices in 1..n-1.
inline std::vector<int> kostant_subset(const NumberedPartition& j) {
    const auto cum = j.cumulative_sizes();
    std::vector<char> cut(static_cast<std::size_t>(j.n()) + 1, 0);
    for (int mu = 1; mu < j.r(); ++mu) cut[cum[mu]] = 1;
    std::vector<int> is;
    for (int i = 1; i <= j.n() - 1; ++i)
        if (!cut[i]) is.push_back(i);
    return is;
}

// Block means m(J_mu) = (1/#J_mu) * sum_{j in J_mu} (a_j + (n+1)/2 - j).
inline std::vector<Rat> means(const NumberedPartition& j, const std::vector<long long>& coords) {
    if (coords.size() != static_cast<std::size_t>(j.n())) throw domain_error("means: rank mismatch");
    const long long n = j.n();
    std::vector<Rat> m;
    for (const auto& b : j.blocks()) {
        BigInt twice_sum = 0;
        for (int x : b) twice_sum += 2 * coords[x - 1] + (n + 1) - 2 * x;
        m.emplace_back(twice_sum, BigInt(2 * static_cast<long long>(b.size())));
    }
    return m;
}

inline bool is_admissible_numbering(const NumberedPartition& j, const std::vector<long long>& coords) {
    const auto m = means(j, coords);
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i + 1] < m[i]) return false;
    return true;
}

// pi(J): merge the middle blocks of an eta-admissible partition into one,
// producing an eta-fixed partition. If 2l = r, pi(J) = J.
inline NumberedPartition reduce_pi(const NumberedPartition& j) {
    const EtaClass c = classify_eta(j);
    if (!c.admissible) throw domain_error("reduce_pi: partition is not eta-admissible");
    const int l = c.admissible_l, r = j.r();
    if (2 * l == r) return j;
    std::vector<std::vector<int>> bl;
    for (int mu = 1; mu <= l; ++mu) bl.push_back(j.block(mu));
    std::vector<int> mid;
    for (int mu = l + 1; mu <= r - l; ++mu)
        mid.insert(mid.end(), j.block(mu).begin(), j.block(mu).end());
    std::sort(mid.begin(), mid.end());
    bl.push_back(std::move(mid));
    for (int mu = r - l + 1; mu <= r; ++mu) bl.push_back(j.block(mu));
    return NumberedPartition(j.n(), std::move(bl));
}

// K(J): transport the middle blocks through w_{pi(J)} and shift down by i_l,
// giving an eta-invariant partition of {1, .., n - 2 i_l}.
inline NumberedPartition reduce_k(const NumberedPartition& j) {
    const EtaClass c = classify_eta(j);
    if (!c.admissible) throw domain_error("reduce_k: partition is not eta-admissible");
    const int l = c.admissible_l, r = j.r();
    if (2 * l >= r) throw domain_error("reduce_k: no middle blocks (2l = r)");
    const NumberedPartition pj = reduce_pi(j);
    const Permutation wp = w_of(pj);
    const auto cum = j.cumulative_sizes();
    const int il = cum[l];
    const int nt = j.n() - 2 * il;
    std::vector<std::vector<int>> bl;
    for (int mu = l + 1; mu <= r - l; ++mu) {
        std::vector<int> kb;
        for (int x : j.block(mu)) kb.push_back(wp(x) - il);
        std::sort(kb.begin(), kb.end());
        bl.push_back(std::move(kb));
    }
    return NumberedPartition(nt, std::move(bl));
}

namespace detail {

// Deterministic block order: mean ascending, then descending maximum, then
// lexicographic contents. The decomposition needs one admissible representative per
// unordered partition but leaves the choice open.
struct BlockKey {
    Rat mean;
    std::vector<int> block;
};

inline bool tie_before(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.back() != b.back()) return a.back() > b.back();
    return a < b;
}

inline bool key_before(const BlockKey& a, const BlockKey& b) {
    if (a.mean < b.mean) return true;
    if (b.mean < a.mean) return false;
    return tie_before(a.block, b.block);
}

inline Rat block_mean(const std::vector<int>& b, const std::vector<long long>& coords, long long n) {
    BigInt twice_sum = 0;
    for (int x : b) twice_sum += 2 * coords[x - 1] + (n + 1) - 2 * x;
    return Rat(twice_sum, BigInt(2 * static_cast<long long>(b.size())));
}

}  // namespace detail

enum class PartitionFilter { All, Stable, Fixed, Invariant };

// Admissible numbering of one unordered partition, eta-aware when the weight
// is eta-invariant: for eta-stable partitions the two-element block orbits are
// split around the self-symmetric middle so that the numbering comes out
// eta-admissible, and pi then maps representatives to representatives.
inline NumberedPartition representative_numbering(int n, std::vector<std::vector<int>> blocks,
                                                  const std::vector<long long>& coords, long long a0 = 0) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());

    const bool chi_eta_invariant = [&] {
        for (int i = 1; i <= n; ++i)
            if (coords[eta_point(n, i) - 1] != a0 - coords[i - 1]) return false;
        return true;
    }();

    auto key_of = [&](const std::vector<int>& b) {
        return detail::BlockKey{detail::block_mean(b, coords, n), b};
    };

    bool stable = true;
    if (chi_eta_invariant) {
        for (const auto& b : blocks) {
            auto e = eta_block(n, b);
            if (std::find(blocks.begin(), blocks.end(), e) == blocks.end()) {
                stable = false;
                break;
            }
        }
    }

    if (!chi_eta_invariant || !stable) {
        std::vector<detail::BlockKey> keys;
        for (auto& b : blocks) keys.push_back(key_of(b));
        std::sort(keys.begin(), keys.end(), detail::key_before);
        std::vector<std::vector<int>> bl;
        for (auto& k : keys) bl.push_back(std::move(k.block));
        return NumberedPartition(n, std::move(bl));
    }

    // eta-stable with eta-invariant weight: build an eta-admissible numbering.
    std::vector<detail::BlockKey> picked, middle;
    std::vector<char> used(blocks.size(), 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (used[i]) continue;
        auto e = eta_block(n, blocks[i]);
        if (e == blocks[i]) {
            middle.push_back(key_of(blocks[i]));
            used[i] = 1;
            continue;
        }
        auto it = std::find(blocks.begin(), blocks.end(), e);
        used[i] = used[static_cast<std::size_t>(it - blocks.begin())] = 1;
        auto ka = key_of(blocks[i]), kb = key_of(*it);
        picked.push_back(detail::key_before(ka, kb) ? ka : kb);
    }
    std::sort(picked.begin(), picked.end(), detail::key_before);
    std::sort(middle.begin(), middle.end(),
              [](const detail::BlockKey& a, const detail::BlockKey& b) { return detail::tie_before(a.block, b.block); });

    std::vector<std::vector<int>> bl;
    for (const auto& k : picked) bl.push_back(k.block);
    for (const auto& k : middle) bl.push_back(k.block);
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) bl.push_back(eta_block(n, it->block));
    return NumberedPartition(n, std::move(bl));
}

// One admissible numbered representative for every unordered partition of
// {1, .., n}, optionally filtered by eta class.
inline std::vector<NumberedPartition> enumerate_representatives(int n, const std::vector<long long>& coords,
                                                                long long a0 = 0,
                                                                PartitionFilter filter = PartitionFilter::All) {
    if (coords.size() != static_cast<std::size_t>(n)) throw domain_error("enumerate_representatives: rank mismatch");
    std::vector<NumberedPartition> out;
    detail::for_each_set_partition(n, [&](const std::vector<std::vector<int>>& zero_based) {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : zero_based) {
            std::vector<int> v;
            for (int x : b) v.push_back(x + 1);
            blocks.push_back(std::move(v));
        }
        NumberedPartition rep = representative_numbering(n, std::move(blocks), coords, a0);
        const EtaClass c = classify_eta(rep);
        switch (filter) {
            case PartitionFilter::All: break;
            case PartitionFilter::Stable:
                if (!c.stable) return;
                break;
            case PartitionFilter::Fixed:
                if (!c.fixed) return;
                break;
            case PartitionFilter::Invariant:
                if (!c.invariant) return;
                break;
        }
        out.push_back(std::move(rep));
    });
    std::sort(out.begin(), out.end(), [](const NumberedPartition& a, const NumberedPartition& b) {
        if (a.r() != b.r()) return a.r() < b.r();
        return a.blocks() < b.blocks();
    });
    return out;
}

}  // namespace endolift
