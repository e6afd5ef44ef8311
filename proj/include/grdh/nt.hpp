#pragma once

#include <gmpxx.h>

#include <vector>

namespace grdh::nt {

/// Exact power of a prime dividing an integer. The valuation of 0 is
/// infinite and compares greater than every finite valuation; it is a
/// distinguished state, never a sentinel integer.
class Valuation {
public:
    static Valuation finite(unsigned long v) { return Valuation(false, v); }
    static Valuation infinite() { return Valuation(true, 0); }

    bool is_infinite() const { return infinite_; }

    /// Finite value; calling this on an infinite valuation is a logic error.
    unsigned long value() const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

private:
    Valuation(bool inf, unsigned long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    unsigned long v_;
};

struct PrimePower {
    mpz_class prime;
    unsigned long exponent;
};

/// Prime-power decomposition of a positive integer: primes strictly
/// increasing, every exponent >= 1, and the product reconstructs the value.
class Factorization {
public:
    const mpz_class& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

private:
    friend Factorization factorize(const mpz_class& n);
    mpz_class value_;
    std::vector<PrimePower> factors_;
};

/// Deterministic trial division up to sqrt(n). n >= 2.
Factorization factorize(const mpz_class& n);

/// Trial-division primality test.
bool is_prime(const mpz_class& n);

/// Euler totient; phi(1) = 1. n >= 1.
mpz_class euler_phi(const mpz_class& n);

/// gcd of all values together with n; the gcd of the empty list with n is n.
mpz_class gcd_many(const std::vector<mpz_class>& values, const mpz_class& n);

/// Largest r with p^r | a, or the infinite valuation when a = 0.
/// p must be prime.
Valuation p_valuation(const mpz_class& p, const mpz_class& a);

/// All positive divisors of n in increasing order. n >= 1.
std::vector<mpz_class> divisors(const mpz_class& n);

/// Least prime factor of n. n >= 2.
mpz_class smallest_prime_divisor(const mpz_class& n);

/// Canonical representative of v modulo n, in [0, n). n >= 1.
mpz_class mod_reduce(const mpz_class& v, const mpz_class& n);

} // namespace grdh::nt
