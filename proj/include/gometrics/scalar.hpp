#ifndef GOMETRICS_SCALAR_HPP
#define GOMETRICS_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace gometrics {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or a decimal literal ("1.0851961") into an exact rational.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty number");
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("malformed rational '" + text + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("malformed decimal '" + text + "'");
    if (digits.front() == '+')
        digits.erase(0, 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
        throw std::invalid_argument("malformed decimal '" + text + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

/// Exact square root of a rational that is a perfect square; nullopt-style flag otherwise.
inline bool rational_sqrt(const Rational& q, Rational& root)
{
    if (sgn(q) < 0)
        return false;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt D), D squarefree and positive.
template <int D>
class QuadraticNumber {
    static_assert(D > 1, "radicand must exceed 1");

public:
    QuadraticNumber() = default;
    QuadraticNumber(int a) : a_(a) {}
    QuadraticNumber(long a) : a_(a) {}
    QuadraticNumber(const Rational& a) : a_(a) {}
    QuadraticNumber(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static QuadraticNumber root() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadraticNumber& operator+=(const QuadraticNumber& o)
    {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadraticNumber& operator-=(const QuadraticNumber& o)
    {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadraticNumber& operator*=(const QuadraticNumber& o)
    {
        Rational a = a_ * o.a_ + D * (b_ * o.b_);
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = a;
        b_ = b;
        return *this;
    }
    QuadraticNumber& operator/=(const QuadraticNumber& o)
    {
        Rational norm = o.a_ * o.a_ - D * (o.b_ * o.b_);
        if (sgn(norm) == 0)
            throw std::domain_error("division by zero in Q(sqrt D)");
        QuadraticNumber conj(o.a_ / norm, -o.b_ / norm);
        return *this *= conj;
    }

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
    friend QuadraticNumber operator-(const QuadraticNumber& x) { return {Rational(-x.a_), Rational(-x.b_)}; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

    /// Exact sign of a + b*sqrt(D).
    int sign() const
    {
        const int sa = sgn(a_);
        const int sb = sgn(b_);
        if (sb == 0)
            return sa;
        if (sa == 0 || sa == sb)
            return sb;
        // opposite signs: compare a^2 with D b^2
        Rational lhs = a_ * a_;
        Rational rhs = D * (b_ * b_);
        const int c = cmp(lhs, rhs);
        if (c == 0)
            return 0;
        return c > 0 ? sa : sb;
    }

    friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return y < x; }
    friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(y < x); }
    friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x < y); }

    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(D)); }

    std::string str() const
    {
        if (is_rational())
            return a_.get_str();
        std::string out;
        if (sgn(a_) != 0)
            out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
        if (b_ == 1)
            out += "sqrt(" + std::to_string(D) + ")";
        else if (b_ == -1)
            out += "-sqrt(" + std::to_string(D) + ")";
        else
            out += b_.get_str() + "*sqrt(" + std::to_string(D) + ")";
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

private:
    Rational a_{0};
    Rational b_{0};
};

using Surd3 = QuadraticNumber<3>;

/// Per-scalar capabilities used by the generic algorithms.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";
    static double from_rational(const Rational& q) { return q.get_d(); }
    static double to_double(double x) { return x; }
    static double sqrt(double x) { return std::sqrt(x); }
    static int sign(double x) { return (x > 0) - (x < 0); }
    static std::string str(double x)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

template <>
struct scalar_traits<long double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "extended";
    static long double from_rational(const Rational& q) { return static_cast<long double>(q.get_d()); }
    static double to_double(long double x) { return static_cast<double>(x); }
    static long double sqrt(long double x) { return std::sqrt(x); }
    static int sign(long double x) { return (x > 0) - (x < 0); }
    static std::string str(long double x) { return scalar_traits<double>::str(static_cast<double>(x)); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";
    static Rational from_rational(const Rational& q) { return q; }
    static double to_double(const Rational& x) { return x.get_d(); }
    static Rational sqrt(const Rational& x)
    {
        Rational r;
        if (!rational_sqrt(x, r))
            throw std::domain_error("square root of " + x.get_str() + " is not rational");
        return r;
    }
    static int sign(const Rational& x) { return sgn(x); }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <int D>
struct scalar_traits<QuadraticNumber<D>> {
    using value_type = QuadraticNumber<D>;
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";
    static value_type from_rational(const Rational& q) { return value_type(q); }
    static double to_double(const value_type& x) { return x.to_double(); }
    /// Square root of a rational q that is a square in Q or D times a square.
    static value_type sqrt(const value_type& x)
    {
        if (!x.is_rational())
            throw std::domain_error("square root of irrational " + x.str() + " is not supported");
        Rational r;
        if (rational_sqrt(x.rational_part(), r))
            return value_type(r);
        Rational scaled = x.rational_part() / D;
        if (rational_sqrt(scaled, r))
            return value_type(Rational(0), r);
        throw std::domain_error("square root of " + x.str() + " leaves Q(sqrt " + std::to_string(D) + ")");
    }
    static int sign(const value_type& x) { return x.sign(); }
    static std::string str(const value_type& x) { return x.str(); }
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <class T>
T from_rational(const Rational& q)
{
    return scalar_traits<T>::from_rational(q);
}

template <class T>
T from_int(long n)
{
    return scalar_traits<T>::from_rational(Rational(n));
}

template <class T>
double to_double(const T& x)
{
    return scalar_traits<T>::to_double(x);
}

template <class T>
std::string scalar_string(const T& x)
{
    return scalar_traits<T>::str(x);
}

template <class T>
int sign_of(const T& x)
{
    return scalar_traits<T>::sign(x);
}

template <class T>
bool is_zero_exact(const T& x)
{
    return sign_of(x) == 0;
}

} // namespace gometrics

#endif // GOMETRICS_SCALAR_HPP
