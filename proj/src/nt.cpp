#include "grdh/nt.hpp"

#include <algorithm>
#include <stdexcept>

namespace grdh::nt {

unsigned long Valuation::value() const {
    if (infinite_) throw std::logic_error("Valuation::value: valuation is infinite");
    return v_;
}

Factorization factorize(const mpz_class& n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    Factorization out;
    out.value_ = n;
    mpz_class rest = n;
    auto strip = [&](const mpz_class& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0) out.factors_.push_back({p, e});
    };
    strip(2);
    for (mpz_class d = 3; d * d <= rest; d += 2) strip(d);
    if (rest > 1) out.factors_.push_back({rest, 1});
    return out;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (mpz_class d = 3; d * d <= n; d += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    }
    return true;
}

mpz_class euler_phi(const mpz_class& n) {
    if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
    if (n == 1) return 1;
    mpz_class phi = 1;
    for (const auto& pp : factorize(n).factors()) {
        mpz_class ppow;
        mpz_pow_ui(ppow.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
        phi *= ppow * (pp.prime - 1);
    }
    return phi;
}

mpz_class gcd_many(const std::vector<mpz_class>& values, const mpz_class& n) {
    mpz_class g = abs(n);
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

Valuation p_valuation(const mpz_class& p, const mpz_class& a) {
    if (!is_prime(p)) throw std::domain_error("p_valuation: p must be prime");
    if (a == 0) return Valuation::infinite();
    unsigned long r = 0;
    mpz_class rest = abs(a);
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++r;
    }
    return Valuation::finite(r);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<mpz_class> out{1};
    if (n > 1) {
        for (const auto& pp : factorize(n).factors()) {
            const std::size_t base = out.size();
            mpz_class ppow = 1;
            for (unsigned long e = 1; e <= pp.exponent; ++e) {
                ppow *= pp.prime;
                for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * ppow);
            }
        }
        std::sort(out.begin(), out.end());
    }
    return out;
}

mpz_class smallest_prime_divisor(const mpz_class& n) {
    if (n < 2) throw std::domain_error("smallest_prime_divisor: n must be >= 2");
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (mpz_class d = 3; d * d <= n; d += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return d;
    }
    return n;
}

mpz_class mod_reduce(const mpz_class& v, const mpz_class& n) {
    if (n < 1) throw std::domain_error("mod_reduce: modulus must be >= 1");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace grdh::nt
