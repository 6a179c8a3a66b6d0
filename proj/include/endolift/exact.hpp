#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace endolift {

using BigInt = boost::multiprecision::cpp_int;

// A documented precondition was violated by the caller / by user input.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; reported, never silently ignored.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// HalfInt: element of (1/2)Z stored as twice its value. Exact throughout;
// no floating point enters any comparison or arithmetic.
// ---------------------------------------------------------------------------
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(long long t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt whole(long long n) { return from_twice(2 * n); }

    constexpr long long twice() const { return twice_; }
    constexpr bool is_integral() const { return twice_ % 2 == 0; }
    // Only valid when is_integral().
    constexpr long long as_integer() const {
        if (!is_integral()) throw domain_error("HalfInt: not integral");
        return twice_ / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    double approx() const { return static_cast<double>(twice_) / 2.0; }

    std::string str() const {
        if (is_integral()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    long long twice_ = 0;
};

// ---------------------------------------------------------------------------
// Rat: arbitrary-precision rational, always reduced, denominator >= 1.
// ---------------------------------------------------------------------------
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rat of_half(HalfInt h) { return Rat(BigInt(h.twice()), BigInt(2)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num_ * b.den_ <= b.num_ * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double approx() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void normalize() {
        if (den_ == 0) throw domain_error("Rat: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_, den_;
};

// ---------------------------------------------------------------------------
// PiPower: exact value coeff * pi^(pi_exp_twice/2), a monomial in sqrt(pi).
// Sums across distinct exponents are deliberately unsupported; every volume
// formula handled here is a monomial.
// ---------------------------------------------------------------------------
class PiPower {
public:
    PiPower() : coeff_(0), pi_exp_twice_(0) {}
    PiPower(Rat coeff, long long pi_exp_twice) : coeff_(std::move(coeff)), pi_exp_twice_(pi_exp_twice) {
        if (coeff_.is_zero()) pi_exp_twice_ = 0;  // canonical zero
    }

    static PiPower one() { return PiPower(Rat(1), 0); }

    const Rat& coeff() const { return coeff_; }
    long long pi_exp_twice() const { return pi_exp_twice_; }
    bool is_zero() const { return coeff_.is_zero(); }
    bool has_integral_exponent() const { return pi_exp_twice_ % 2 == 0; }

    friend PiPower operator*(const PiPower& a, const PiPower& b) {
        return PiPower(a.coeff_ * b.coeff_, a.pi_exp_twice_ + b.pi_exp_twice_);
    }
    friend PiPower operator/(const PiPower& a, const PiPower& b) {
        if (b.is_zero()) throw domain_error("PiPower: division by zero");
        return PiPower(a.coeff_ / b.coeff_, a.pi_exp_twice_ - b.pi_exp_twice_);
    }
    friend PiPower operator*(const PiPower& a, const Rat& r) { return PiPower(a.coeff_ * r, a.pi_exp_twice_); }

    // Addition exists only for matching exponents.
    friend PiPower operator+(const PiPower& a, const PiPower& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.pi_exp_twice_ != b.pi_exp_twice_)
            throw domain_error("PiPower: sum across distinct pi-exponents");
        return PiPower(a.coeff_ + b.coeff_, a.pi_exp_twice_);
    }

    friend bool operator==(const PiPower& a, const PiPower& b) {
        return a.coeff_ == b.coeff_ && a.pi_exp_twice_ == b.pi_exp_twice_;
    }

    // Display convenience only; all logic stays exact.
    double approx() const;

    std::string str() const {
        if (is_zero()) return "0";
        std::string s = coeff_.str();
        if (pi_exp_twice_ != 0) {
            s += "*pi";
            if (pi_exp_twice_ != 2) {
                s += "^(";
                if (pi_exp_twice_ % 2 == 0)
                    s += std::to_string(pi_exp_twice_ / 2);
                else
                    s += std::to_string(pi_exp_twice_) + "/2";
                s += ")";
            }
        }
        return s;
    }

private:
    Rat coeff_;
    long long pi_exp_twice_;
};

inline double PiPower::approx() const {
    constexpr double kPi = 3.14159265358979323846;
    return coeff_.approx() * std::pow(kPi, static_cast<double>(pi_exp_twice_) / 2.0);
}

inline BigInt factorial(long long n) {
    if (n < 0) throw domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt pow2(long long e) {
    if (e < 0) throw domain_error("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(e);
}

// Gamma at twice_arg/2 for twice_arg >= 1. Gamma(m) = (m-1)!, and the
// half-integral values follow from Gamma(1/2) = sqrt(pi) via the doubling
// formula: Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi).
inline PiPower gamma_half(long long twice_arg) {
    if (twice_arg < 1) throw domain_error("gamma_half: argument must be positive");
    if (twice_arg % 2 == 0) {
        return PiPower(Rat(factorial(twice_arg / 2 - 1)), 0);
    }
    long long m = (twice_arg - 1) / 2;
    Rat c(factorial(2 * m), pow2(2 * m) * factorial(m));
    return PiPower(c, 1);
}

// Euclidean volume of the unit sphere S^(n-1): 2 * pi^(n/2) / Gamma(n/2).
inline PiPower sphere_volume(long long n) {
    if (n < 1) throw domain_error("sphere_volume: n must be positive");
    return PiPower(Rat(2), n) / gamma_half(n);
}

}  // namespace endolift
