#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace lamina {

// Exact arithmetic everywhere below the floating-point eigenvalue layer.
using Int = boost::multiprecision::cpp_int;

enum class errc {
    invalid_denominator,
    domain,
    precondition,
    degenerate_input,
    unsupported_shape,
    incompatible_majors,
    resource_limit,
    shape,
    empty_input,
    io,
    internal,
};

/// Library error carrying a machine-readable code; the CLI maps these to
/// exit status 1, as opposed to usage errors (exit status 2).
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

/// Reduced fraction over arbitrary-precision integers. Comparisons
/// cross-multiply, which is an order of magnitude faster here than the
/// division-ladder comparison the stock rational wrapper performs; set
/// lookups and chord-crossing predicates dominate the workload.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(const Int& v) : num_(v), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(int n, int d) : num_(n), den_(d) { normalize(); }

    /// Exact value of a finite double (binary expansion).
    explicit Rat(double v) : den_(1) {
        int exp = 0;
        double m = std::frexp(v, &exp);
        num_ = static_cast<long long>(std::ldexp(m, 53));
        exp -= 53;
        if (exp > 0)
            num_ <<= exp;
        else
            den_ <<= -exp;
        normalize();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rat& o) const {
        if (den_ == o.den_) return num_ < o.num_;
        return num_ * o.den_ < o.num_ * den_;
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) fail(errc::invalid_denominator, "division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

  private:
    void normalize() {
        if (den_ == 0) fail(errc::invalid_denominator, "zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_, den_;
};

inline const Int& numerator(const Rat& x) { return x.num(); }
inline const Int& denominator(const Rat& x) { return x.den(); }

inline Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed
    Int q = a / b, r = a % b;
    if (r < 0) --q;
    return q;
}

inline Rat frac_mod1(const Rat& x) {
    Int f = floor_div(numerator(x), denominator(x));
    if (f == 0) return x;
    return x - Rat(f);
}

inline double to_double(const Rat& x) {
    return numerator(x).convert_to<double>() / denominator(x).convert_to<double>();
}

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

} // namespace lamina
