#include "snortcgt/dyadic.hpp"

#include <cctype>
#include <stdexcept>

namespace cgt {

namespace {

BigInt pow2(unsigned k) {
    BigInt one = 1;
    return one << k;
}

}  // namespace

void Dyadic::reduce() {
    while (exp_ > 0 && num_ % 2 == 0) {
        num_ /= 2;
        --exp_;
    }
}

Dyadic Dyadic::fraction(BigInt numerator, unsigned exponent) {
    Dyadic d;
    d.num_ = std::move(numerator);
    d.exp_ = exponent;
    d.reduce();
    return d;
}

Dyadic Dyadic::operator-() const {
    Dyadic d;
    d.num_ = -num_;
    d.exp_ = exp_;
    return d;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    BigInt n = a.num_ * pow2(e - a.exp_) + b.num_ * pow2(e - b.exp_);
    return Dyadic::fraction(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    return a + (-b);
}

int Dyadic::compare(const Dyadic& o) const {
    unsigned e = std::max(exp_, o.exp_);
    BigInt lhs = num_ * pow2(e - exp_);
    BigInt rhs = o.num_ * pow2(e - o.exp_);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

BigInt Dyadic::floor() const {
    if (exp_ == 0) return num_;
    BigInt d = pow2(exp_);
    BigInt q = num_ / d;
    if (num_ < 0 && num_ % d != 0) --q;
    return q;
}

BigInt Dyadic::ceil() const {
    if (exp_ == 0) return num_;
    BigInt d = pow2(exp_);
    BigInt q = num_ / d;
    if (num_ > 0 && num_ % d != 0) ++q;
    return q;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + pow2(exp_).str();
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](BigInt& out) -> bool {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return false;
        out = BigInt(std::string(text.substr(start, i - start)));
        return true;
    };
    BigInt num;
    if (!digits(num)) return std::nullopt;
    unsigned exp = 0;
    if (i < text.size() && text[i] == '/') {
        ++i;
        BigInt den;
        if (!digits(den)) return std::nullopt;
        if (den <= 0) return std::nullopt;
        while (den % 2 == 0) {
            den /= 2;
            ++exp;
        }
        if (den != 1) return std::nullopt;  // denominator must be a power of two
    }
    if (i != text.size()) return std::nullopt;
    if (neg) num = -num;
    return fraction(std::move(num), exp);
}

double Dyadic::to_double() const {
    double n = num_.convert_to<double>();
    return n / static_cast<double>(1ULL << std::min(exp_, 62u));
}

Dyadic simplest_between(const Dyadic& lo, const Dyadic& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
    // Integer of smallest magnitude first.
    if (lo.sign() < 0 && hi.sign() > 0) return Dyadic(0);
    if (lo.sign() >= 0) {
        Dyadic z((BigInt)(lo.floor() + 1));
        if (z < hi) return z;
    } else {
        Dyadic z((BigInt)(hi.ceil() - 1));
        if (z > lo) return z;
    }
    // No integer inside: search for the smallest denominator 2^k.
    for (unsigned k = 1;; ++k) {
        // floor(lo * 2^k) + 1 is the smallest candidate above lo at level k.
        Dyadic scaled = Dyadic::fraction(lo.numerator() * (BigInt(1) << k), lo.exponent());
        BigInt m = scaled.floor() + 1;
        Dyadic cand = Dyadic::fraction(m, k);
        if (cand < hi) return cand;
    }
}

}  // namespace cgt
