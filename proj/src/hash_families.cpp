#include "grdh/hash_families.hpp"

#include <numeric>
#include <stdexcept>

#include "grdh/nt.hpp"

namespace grdh::families {

FamilyParams::FamilyParams(Flavor flavor, mpz_class modulus, std::vector<mpz_class> constraints)
    : flavor_(flavor), modulus_(std::move(modulus)), constraints_(std::move(constraints)) {}

FamilyParams FamilyParams::mmh_star(const mpz_class& prime, std::size_t k) {
    if (k < 1) throw std::domain_error("FamilyParams: k must be >= 1");
    if (!nt::is_prime(prime)) throw std::domain_error("FamilyParams: MMH* needs a prime modulus");
    return FamilyParams(Flavor::MmhStar, prime, std::vector<mpz_class>(k, 1));
}

FamilyParams FamilyParams::rdh(const mpz_class& modulus, std::size_t k) {
    if (k < 1) throw std::domain_error("FamilyParams: k must be >= 1");
    if (modulus < 2) throw std::domain_error("FamilyParams: modulus must be >= 2");
    return FamilyParams(Flavor::Rdh, modulus, std::vector<mpz_class>(k, 1));
}

FamilyParams FamilyParams::grdh(const mpz_class& modulus, std::size_t k,
                                std::vector<mpz_class> constraints) {
    if (k < 1) throw std::domain_error("FamilyParams: k must be >= 1");
    if (modulus < 2) throw std::domain_error("FamilyParams: modulus must be >= 2");
    if (constraints.size() != k)
        throw std::domain_error("FamilyParams: constraint vector must have length k");
    for (const auto& t : constraints) {
        if (t < 1 || !mpz_divisible_p(modulus.get_mpz_t(), t.get_mpz_t()))
            throw std::domain_error("FamilyParams: every t_i must be a positive divisor of n");
    }
    return FamilyParams(Flavor::Grdh, modulus, std::move(constraints));
}

bool FamilyParams::unit_constraints() const {
    for (const auto& t : constraints_) {
        if (t != 1) return false;
    }
    return true;
}

bool key_valid(const FamilyParams& params, const HashKey& key) {
    if (key.x.size() != params.word_count()) return false;
    const mpz_class& n = params.modulus();
    for (std::size_t i = 0; i < key.x.size(); ++i) {
        if (key.x[i] < 0 || key.x[i] >= n) return false;
        if (params.flavor() == Flavor::MmhStar) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), key.x[i].get_mpz_t(), n.get_mpz_t());
        if (g == 0) g = n;  // gcd(0, n) = n
        if (g != params.constraints()[i]) return false;
    }
    return true;
}

mpz_class hash(const FamilyParams& params, const HashKey& key, const Message& msg) {
    if (!key_valid(params, key)) throw std::domain_error("hash: key violates the family constraints");
    if (msg.m.size() != params.word_count())
        throw std::domain_error("hash: message must have length k");
    const mpz_class& n = params.modulus();
    mpz_class acc = 0;
    for (std::size_t i = 0; i < msg.m.size(); ++i) {
        if (msg.m[i] < 0 || msg.m[i] >= n)
            throw std::domain_error("hash: message entries must be reduced into [0, n)");
        acc += msg.m[i] * key.x[i];
    }
    return nt::mod_reduce(acc, n);
}

mpz_class key_space_size(const FamilyParams& params) {
    if (params.flavor() == Flavor::MmhStar) {
        mpz_class size;
        mpz_pow_ui(size.get_mpz_t(), params.modulus().get_mpz_t(), params.word_count());
        return size;
    }
    mpz_class size = 1;
    for (const auto& t : params.constraints()) size *= nt::euler_phi(params.modulus() / t);
    return size;
}

std::uint64_t uniform_below(RandomSource& rng, std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("uniform_below: bound must be >= 1");
    if (bound == 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t r = rng.next_u64();
        if (r < limit) return r % bound;
    }
}

HashKey sample_key(const FamilyParams& params, RandomSource& rng) {
    if (!params.modulus().fits_ulong_p())
        throw std::domain_error("sample_key: modulus too large for sampling");
    const unsigned long n = params.modulus().get_ui();
    HashKey key;
    key.x.reserve(params.word_count());
    for (std::size_t i = 0; i < params.word_count(); ++i) {
        if (params.flavor() == Flavor::MmhStar) {
            key.x.emplace_back(uniform_below(rng, n));
            continue;
        }
        const unsigned long t = params.constraints()[i].get_ui();
        const unsigned long q = n / t;
        unsigned long u;
        do {
            u = static_cast<unsigned long>(uniform_below(rng, q));
        } while (std::gcd(u, q) != 1);  // gcd(0, 1) = 1, so q = 1 yields u = 0
        key.x.emplace_back(mpz_class(t) * u);
    }
    return key;
}

std::vector<HashKey> enumerate_keys(const FamilyParams& params, unsigned long cap) {
    if (key_space_size(params) > cap)
        throw ResourceError("enumerate_keys: key space exceeds the enumeration cap");
    const unsigned long n = params.modulus().get_ui();
    const std::size_t k = params.word_count();

    std::vector<std::vector<unsigned long>> values(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (params.flavor() == Flavor::MmhStar) {
            values[i].resize(n);
            std::iota(values[i].begin(), values[i].end(), 0UL);
        } else {
            const unsigned long t = params.constraints()[i].get_ui();
            for (unsigned long x = 0; x < n; ++x) {
                if (std::gcd(x, n) == t || (x == 0 && t == n)) values[i].push_back(x);
            }
        }
    }

    std::vector<HashKey> out;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        HashKey key;
        key.x.reserve(k);
        for (std::size_t i = 0; i < k; ++i) key.x.emplace_back(values[i][idx[i]]);
        out.push_back(std::move(key));
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < values[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

} // namespace grdh::families
