#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rsum {

/// Exact rational on 64-bit components, always kept reduced with positive
/// denominator. Desk-scale only: operands here come from set sizes and small
/// parameter fractions, far away from overflow.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }
    Rational(long long num) : num_(num), den_(1) {}

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const { return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rational operator-(const Rational& o) const { return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "n", "n/d" or a plain decimal like "0.25".
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            long long n = std::stoll(text.substr(0, slash));
            long long d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            long long den = 1;
            for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            return Rational(std::stoll(digits), den);
        }
        return Rational(std::stoll(text));
    }

private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace rsum
