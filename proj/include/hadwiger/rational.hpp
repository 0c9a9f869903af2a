#ifndef HADWIGER_RATIONAL_HPP
#define HADWIGER_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hadwiger {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
public:
    constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den)
    {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr std::int64_t floor() const
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0)
            --q;
        return q;
    }
    constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend constexpr Rational operator+(const Rational& a, const Rational& b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b)
    {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b)
    {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr auto operator<=>(const Rational& a, const Rational& b)
    {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r)
    {
        os << r.num_;
        if (r.den_ != 1)
            os << '/' << r.den_;
        return os;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace hadwiger

#endif // HADWIGER_RATIONAL_HPP
