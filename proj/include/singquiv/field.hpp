#pragma once

// Exact scalar fields. Every algorithm in the library is a template over one
// of these two policy classes; elements are plain values and all arithmetic
// goes through the field object.

#include <cstdint>
#include <gmpxx.h>
#include <random>
#include <stdexcept>
#include <string>

namespace singquiv {

/// Integers modulo an odd prime p < 2^31.
class PrimeField {
public:
    using value_type = std::uint32_t;
    static constexpr std::uint32_t kDefaultModulus = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultModulus) : p_(p)
    {
        if (p < 3 || p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("prime field modulus must be an odd prime below 2^31, got " +
                                        std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }
    std::string name() const { return "prime:" + std::to_string(p_); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    value_type add(value_type a, value_type b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// a - b*c
    value_type sub_mul(value_type a, value_type b, value_type c) const { return sub(a, mul(b, c)); }
    value_type inv(value_type a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return static_cast<value_type>(t < 0 ? t + p_ : t);
    }

    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }

    value_type random(std::mt19937_64& rng) const { return static_cast<value_type>(rng() % p_); }

    /// Symmetric representative, so small negative integers print as such.
    std::string to_string(value_type a) const
    {
        if (a > p_ / 2)
            return "-" + std::to_string(p_ - a);
        return std::to_string(a);
    }

private:
    static bool is_prime(std::uint32_t n)
    {
        if (n % 2 == 0)
            return n == 2;
        for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
            if (n % d == 0)
                return false;
        return true;
    }

    std::uint32_t p_;
};

/// Arbitrary-precision rationals (GMP).
class RationalField {
public:
    using value_type = mpq_class;

    std::string name() const { return "rational"; }

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long long v) const
    {
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
        return value_type(z);
    }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type sub_mul(const value_type& a, const value_type& b, const value_type& c) const
    {
        return a - b * c;
    }
    value_type inv(const value_type& a) const
    {
        if (sgn(a) == 0)
            throw std::domain_error("inverse of zero");
        return 1 / a;
    }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    /// Uniform integer in [-2^15, 2^15].
    value_type random(std::mt19937_64& rng) const
    {
        constexpr long long span = 1 << 15;
        return from_int(static_cast<long long>(rng() % (2 * span + 1)) - span);
    }

    std::string to_string(const value_type& a) const { return a.get_str(); }
};

} // namespace singquiv
