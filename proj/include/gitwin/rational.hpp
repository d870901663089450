#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gitwin {

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational number over int64 coordinates.
///
/// Always stored in lowest terms with a positive denominator, so equality is
/// structural. Intermediate products go through __int128 and overflow of the
/// reduced result throws arithmetic_error instead of wrapping.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return from128((__int128)x.num_ * y.den_ + (__int128)y.num_ * x.den_,
                       (__int128)x.den_ * y.den_);
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        return from128((__int128)x.num_ * y.den_ - (__int128)y.num_ * x.den_,
                       (__int128)x.den_ * y.den_);
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return from128((__int128)x.num_ * y.num_, (__int128)x.den_ * y.den_);
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num_ == 0) throw arithmetic_error("rational division by zero");
        return from128((__int128)x.num_ * y.den_, (__int128)x.den_ * y.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& y) { return *this = *this + y; }
    Rat& operator-=(const Rat& y) { return *this = *this - y; }
    Rat& operator*=(const Rat& y) { return *this = *this * y; }
    Rat& operator/=(const Rat& y) { return *this = *this / y; }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return (__int128)x.num_ * y.den_ < (__int128)y.num_ * x.den_;
    }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p" or "p/q"; throws arithmetic_error on malformed input.
    static Rat parse(const std::string& text);

    /// Largest integer k with k <= *this.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    /// Nearest integer, halves rounded down.
    long long round_half_down() const { return (*this - Rat(1, 2)).ceil(); }

  private:
    long long num_;
    long long den_;

    void assign(long long n, long long d) {
        if (d == 0) throw arithmetic_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw arithmetic_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        const __int128 lim = (__int128)INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw arithmetic_error("rational overflow");
        Rat r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
};

inline Rat Rat::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        size_t used = 0;
        long long n = std::stoll(text.substr(0, slash), &used);
        if (slash == std::string::npos) {
            if (used != text.size()) throw arithmetic_error("trailing characters in rational");
            return Rat(n);
        }
        if (used != slash) throw arithmetic_error("trailing characters in rational");
        std::string dpart = text.substr(slash + 1);
        long long d = std::stoll(dpart, &used);
        if (used != dpart.size()) throw arithmetic_error("trailing characters in rational");
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw arithmetic_error("malformed rational: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw arithmetic_error("rational out of range: '" + text + "'");
    }
}

} // namespace gitwin
