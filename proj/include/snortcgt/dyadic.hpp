#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational numerator / 2^exponent, kept reduced: the numerator
// is odd unless the exponent is 0. All arithmetic is exact; there is no
// floating point on any value path.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long n) : num_(n) {}  // NOLINT: integers convert implicitly
    explicit Dyadic(BigInt n) : num_(std::move(n)) {}

    static Dyadic fraction(BigInt numerator, unsigned exponent);

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }
    bool is_integer() const { return exp_ == 0; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Dyadic operator-() const;
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

    // Exact division by two; stays dyadic.
    Dyadic half() const { return fraction(num_, exp_ + 1); }

    int compare(const Dyadic& o) const;
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return a.compare(b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return a.compare(b) >= 0; }

    static Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
    static Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }
    static Dyadic average(const Dyadic& a, const Dyadic& b) { return (a + b).half(); }

    BigInt floor() const;
    BigInt ceil() const;

    // "3", "-13/4"; fractions are reduced, denominators are powers of two.
    std::string str() const;
    static std::optional<Dyadic> parse(std::string_view text);

    double to_double() const;  // plotting only, never on a value path

private:
    BigInt num_ = 0;
    unsigned exp_ = 0;
    void reduce();
};

// The simplest dyadic rational strictly inside the open interval (lo, hi):
// the integer closest to zero if one exists, otherwise the unique fraction
// with the smallest power-of-two denominator. Requires lo < hi.
Dyadic simplest_between(const Dyadic& lo, const Dyadic& hi);

}  // namespace cgt
