#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "endolift/exact.hpp"

namespace endolift {

enum class Kind { B, C, D };

inline char kind_letter(Kind k) { return k == Kind::B ? 'B' : (k == Kind::C ? 'C' : 'D'); }

struct CharType {
    Kind kind;
    long long rank;  // the g of B_g / C_g / D_g

    friend bool operator==(const CharType&, const CharType&) = default;
};

// ---------------------------------------------------------------------------
// CharSet: finite nonempty S in (1/2)Z with -S = S and all pairwise
// differences integral (equivalently, every element in the same coset of Z).
// Elements are kept sorted ascending and duplicate-free.
// ---------------------------------------------------------------------------
class CharSet {
public:
    explicit CharSet(std::vector<HalfInt> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (elems_.empty()) throw domain_error("CharSet: empty set");
        const bool par = elems_.front().twice() % 2 != 0;
        for (const auto& s : elems_) {
            if ((s.twice() % 2 != 0) != par)
                throw domain_error("CharSet: pairwise differences must be integral");
            if (!contains(-s)) throw domain_error("CharSet: set must be symmetric");
        }
    }

    static CharSet from_twice(std::initializer_list<long long> tw) {
        std::vector<HalfInt> v;
        for (long long t : tw) v.push_back(HalfInt::from_twice(t));
        return CharSet(std::move(v));
    }
    static CharSet of_integers(std::initializer_list<long long> ints) {
        std::vector<HalfInt> v;
        for (long long n : ints) v.push_back(HalfInt::whole(n));
        return CharSet(std::move(v));
    }

    const std::vector<HalfInt>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool is_integral() const { return elems_.front().is_integral(); }
    bool contains(HalfInt x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
    HalfInt min() const { return elems_.front(); }
    HalfInt max() const { return elems_.back(); }

    // Elements > 0, ascending.
    std::vector<HalfInt> positive_part() const {
        std::vector<HalfInt> p;
        for (const auto& s : elems_)
            if (s.twice() > 0) p.push_back(s);
        return p;
    }

    friend bool operator==(const CharSet& a, const CharSet& b) { return a.elems_ == b.elems_; }
    friend bool operator<(const CharSet& a, const CharSet& b) { return a.elems_ < b.elems_; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) s += ",";
            s += elems_[i].str();
        }
        return s + "}";
    }

private:
    std::vector<HalfInt> elems_;
};

// Every characteristic set is of exactly one type:
//   B_g : half-integral, #S = 2g      (g >= 1)
//   C_g : 0 in S,        #S = 2g + 1  (g >= 0)
//   D_g : integral, 0 not in S, #S = 2g  (g >= 1)
inline CharType classify(const CharSet& s) {
    const long long n = static_cast<long long>(s.size());
    if (!s.is_integral()) return CharType{Kind::B, n / 2};
    if (s.contains(HalfInt::whole(0))) return CharType{Kind::C, (n - 1) / 2};
    return CharType{Kind::D, n / 2};
}

// E_n = { -(n+1)/2 + i : 1 <= i <= n }, the elementary set of order n.
inline CharSet elementary(long long n) {
    if (n < 1) throw domain_error("elementary: order must be positive");
    std::vector<HalfInt> v;
    for (long long i = 1; i <= n; ++i) v.push_back(HalfInt::from_twice(-(n + 1) + 2 * i));
    return CharSet(std::move(v));
}

// n-admissible: |s - t| >= n for all distinct s, t.
inline bool is_admissible(const CharSet& s, long long n) {
    const auto& e = s.elements();
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i + 1].twice() - e[i].twice() < 2 * n) return false;
    return true;
}

// MW(S, n) = { s + e : s in S, e in E_n }. Since S is n-admissible the map
// (s, e) -> s + e is injective, so #MW(S,n) = n * #S.
inline CharSet mw(const CharSet& s, long long n) {
    if (n < 1) throw domain_error("mw: n must be positive");
    if (!is_admissible(s, n)) throw domain_error("mw: set is not n-admissible");
    std::vector<HalfInt> v;
    const CharSet en = elementary(n);
    for (const auto& a : s.elements())
        for (const auto& e : en.elements()) v.push_back(a + e);
    CharSet r(std::move(v));
    if (r.size() != s.size() * static_cast<std::size_t>(n))
        throw invariant_error("mw: translated copies collided");
    return r;
}

// All pairs (S0, n) with mw(S0, n) == s. Always contains (s, 1). For a fixed
// divisor n of #s the decomposition is unique when it exists: admissibility
// forces the translates to occupy disjoint unit-step intervals, so cutting
// the sorted set into consecutive runs of length n is the only candidate.
inline std::vector<std::pair<CharSet, long long>> mw_factorizations(const CharSet& s) {
    std::vector<std::pair<CharSet, long long>> out;
    const auto& e = s.elements();
    const long long sz = static_cast<long long>(e.size());
    for (long long n = 1; n <= sz; ++n) {
        if (sz % n != 0) continue;
        bool runs_ok = true;
        std::vector<HalfInt> centers;
        for (long long r = 0; r < sz / n && runs_ok; ++r) {
            for (long long i = 1; i < n; ++i)
                if (e[r * n + i].twice() - e[r * n + i - 1].twice() != 2) {
                    runs_ok = false;
                    break;
                }
            if (runs_ok) centers.push_back(HalfInt::from_twice((e[r * n].twice() + e[r * n + n - 1].twice()) / 2));
        }
        if (!runs_ok) continue;
        CharSet seed(std::move(centers));
        if (!is_admissible(seed, n)) continue;
        if (!(mw(seed, n) == s)) continue;
        out.emplace_back(std::move(seed), n);
    }
    return out;
}

namespace detail {

// Visit every set partition of {0, .., m-1} as a block list, via restricted
// growth strings. Blocks come out ordered by their smallest element.
inline void for_each_set_partition(int m, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<int> rgs(m, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == m) {
            int nb = maxv + 1;
            std::vector<std::vector<int>> blocks(nb);
            for (int j = 0; j < m; ++j) blocks[rgs[j]].push_back(j);
            visit(blocks);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (m > 0) rec(1, 0);  // rgs[0] = 0 always
    else visit({});
}

}  // namespace detail

// All partitions of a type-C set into characteristic sets (each block
// symmetric). Enumerated over set partitions of the symmetric atoms
// {0}, {x, -x}. Each partition lists its blocks canonically: the block
// containing 0 first, the rest by descending maximum. The returned list is
// ordered by (block count, canonical block lists).
inline std::vector<std::vector<CharSet>> symmetric_partitions(const CharSet& s) {
    if (classify(s).kind != Kind::C) throw domain_error("symmetric_partitions: type C input required");
    std::vector<std::vector<HalfInt>> atoms;
    atoms.push_back({HalfInt::whole(0)});
    for (const auto& p : s.positive_part()) atoms.push_back({-p, p});

    std::vector<std::vector<CharSet>> result;
    detail::for_each_set_partition(static_cast<int>(atoms.size()), [&](const std::vector<std::vector<int>>& bl) {
        std::vector<CharSet> part;
        for (const auto& b : bl) {
            std::vector<HalfInt> elems;
            for (int ai : b) elems.insert(elems.end(), atoms[ai].begin(), atoms[ai].end());
            part.emplace_back(std::move(elems));
        }
        // canonical order: 0-block first, then descending maximum
        std::sort(part.begin(), part.end(), [](const CharSet& a, const CharSet& b) {
            const bool za = a.contains(HalfInt::whole(0));
            const bool zb = b.contains(HalfInt::whole(0));
            if (za != zb) return za;
            return b.max() < a.max();
        });
        result.push_back(std::move(part));
    });
    std::sort(result.begin(), result.end(), [](const std::vector<CharSet>& a, const std::vector<CharSet>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return result;
}

}  // namespace endolift
