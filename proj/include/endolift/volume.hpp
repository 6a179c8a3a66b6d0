#pragma once

#include <string>

#include "endolift/exact.hpp"

namespace endolift {

enum class VolumeGroup { Sp, SO, Spin };

inline std::string volume_group_name(VolumeGroup g, long long rank) {
    switch (g) {
        case VolumeGroup::Sp: return "Sp_" + std::to_string(2 * rank);
        case VolumeGroup::SO: return "SO_" + std::to_string(2 * rank + 1);
        case VolumeGroup::Spin: return "Spin_" + std::to_string(2 * rank + 1);
    }
    return "?";
}

// vol_St(Sp_2g) = vol(S^{4g-1}) * vol_St(Sp_{2(g-1)}), vol_St(Sp_0) = 1.
inline PiPower vol_st_sp(long long g) {
    if (g < 0) throw domain_error("vol_st_sp: g >= 0 required");
    PiPower v = PiPower::one();
    for (long long k = 1; k <= g; ++k) v = v * sphere_volume(4 * k);
    return v;
}

// vol_St(SO_n) = vol(S^{n-1}) * vol_St(SO_{n-1}), vol_St(SO_1) = 1.
inline PiPower vol_st_so(long long n) {
    if (n < 1) throw domain_error("vol_st_so: n >= 1 required");
    PiPower v = PiPower::one();
    for (long long m = 2; m <= n; ++m) v = v * sphere_volume(m);
    return v;
}

namespace detail {

// Common closed recursion vol_Ch(X_g) = (2^{2g} pi^{2g} / Gamma(2g)) * vol_Ch(X_{g-1}).
inline PiPower vol_ch_closed(const PiPower& base, long long g) {
    PiPower v = base;
    for (long long k = 1; k <= g; ++k)
        v = v * (PiPower(Rat(pow2(2 * k)), 4 * k) / gamma_half(4 * k));
    return v;
}

}  // namespace detail

// Exact Chevalley volume, computed both through the standard-volume
// conversion (2^{g^2} for Sp, 2^{-(g+1)} for SO_{2g+1}) and through the
// closed recursion; the two routes must agree.
inline PiPower vol_ch(VolumeGroup group, long long g) {
    switch (group) {
        case VolumeGroup::Sp: {
            if (g < 0) throw domain_error("vol_ch: g >= 0 required for Sp");
            PiPower conv = vol_st_sp(g) * Rat(pow2(g * g));
            PiPower closed = detail::vol_ch_closed(PiPower::one(), g);
            if (!(conv == closed)) throw invariant_error("vol_ch(Sp): conversion and recursion disagree");
            if (!conv.has_integral_exponent()) throw invariant_error("vol_ch(Sp): non-integral pi exponent");
            return conv;
        }
        case VolumeGroup::SO: {
            if (g < 1) throw domain_error("vol_ch: g >= 1 required for SO_{2g+1}");
            PiPower conv = vol_st_so(2 * g + 1) * Rat(BigInt(1), pow2(g + 1));
            PiPower closed = detail::vol_ch_closed(PiPower(Rat(BigInt(1), BigInt(2)), 0), g);
            if (!(conv == closed)) throw invariant_error("vol_ch(SO): conversion and recursion disagree");
            if (!conv.has_integral_exponent()) throw invariant_error("vol_ch(SO): non-integral pi exponent");
            return conv;
        }
        case VolumeGroup::Spin: {
            if (g < 1) throw domain_error("vol_ch: g >= 1 required for Spin_{2g+1}");
            return vol_ch(VolumeGroup::SO, g) * Rat(2);
        }
    }
    throw domain_error("vol_ch: unknown group");
}

struct VolumeRecord {
    VolumeGroup group;
    long long rank;
    PiPower vol_st;
    PiPower vol_ch_value;
    long long conversion_exponent;  // vol_Ch = 2^e * vol_St
};

inline VolumeRecord volume_record(VolumeGroup group, long long g) {
    VolumeRecord r{group, g, PiPower::one(), PiPower::one(), 0};
    switch (group) {
        case VolumeGroup::Sp:
            r.vol_st = vol_st_sp(g);
            r.conversion_exponent = g * g;
            break;
        case VolumeGroup::SO:
            r.vol_st = vol_st_so(2 * g + 1);
            r.conversion_exponent = -(g + 1);
            break;
        case VolumeGroup::Spin:
            r.vol_st = vol_st_so(2 * g + 1);
            r.conversion_exponent = -g;  // the degree-2 isogeny doubles the SO volume
            break;
    }
    r.vol_ch_value = vol_ch(group, g);
    return r;
}

}  // namespace endolift
