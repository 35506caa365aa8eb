#pragma once

#include <gmpxx.h>

#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace omegacalc {

using Integer = mpz_class;

// Exact rational scalar. Always kept in lowest terms with a positive
// denominator, so equality is plain representation equality and printing is
// canonical. Wraps mpq_class because the raw (num, den) constructor of GMP
// does *not* canonicalize and most mpq functions silently require canonical
// operands.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    // Accepts "num" or "num/den" with optional leading '-'.
    explicit Rational(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            v_ = mpq_class(Integer(s));
        } else {
            *this = Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        }
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_), raw_tag{}); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(int e) const {
        if (e == 0) return Rational(1);
        Rational base = *this;
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0^negative");
            base = Rational(1) / base;
            e = -e;
        }
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.v_ = mpq_class(n, d); // already canonical: gcd(n,d)=1 is preserved by powers
        return r;
    }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : v_(std::move(q)) {}
    mpq_class v_;
};

// n! with a grow-only memo table. std::deque keeps references stable while
// the table grows, so the returned reference survives later calls.
inline const Integer& factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    static std::deque<Integer> memo{Integer(1)};
    while (static_cast<int>(memo.size()) <= n) {
        memo.push_back(memo.back() * static_cast<long>(memo.size()));
    }
    return memo[static_cast<size_t>(n)];
}

inline Rational rfact(int n) { return Rational(factorial(n)); }

// C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace omegacalc
