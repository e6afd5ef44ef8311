#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "grdh/errors.hpp"

namespace grdh::families {

/// MmhStar: prime modulus, keys range over all of Z_p^k.
/// Rdh:     keys range over the units, gcd(x_i, n) = 1.
/// Grdh:    keys satisfy gcd(x_i, n) = t_i for given divisors t_i of n.
enum class Flavor { MmhStar, Rdh, Grdh };

class FamilyParams {
public:
    static FamilyParams mmh_star(const mpz_class& prime, std::size_t k);
    static FamilyParams rdh(const mpz_class& modulus, std::size_t k);
    static FamilyParams grdh(const mpz_class& modulus, std::size_t k,
                             std::vector<mpz_class> constraints);

    Flavor flavor() const { return flavor_; }
    const mpz_class& modulus() const { return modulus_; }
    std::size_t word_count() const { return constraints_.size(); }
    const std::vector<mpz_class>& constraints() const { return constraints_; }
    bool unit_constraints() const;  // all t_i == 1

private:
    FamilyParams(Flavor flavor, mpz_class modulus, std::vector<mpz_class> constraints);
    Flavor flavor_;
    mpz_class modulus_;
    std::vector<mpz_class> constraints_;
};

struct HashKey {
    std::vector<mpz_class> x;
};

struct Message {
    std::vector<mpz_class> m;
};

/// True iff the key satisfies the family's per-coordinate constraint.
bool key_valid(const FamilyParams& params, const HashKey& key);

/// Inner-product hash: sum of m_i * x_i mod n. The key must be valid and the
/// message entries reduced into [0, n).
mpz_class hash(const FamilyParams& params, const HashKey& key, const Message& msg);

/// Number of valid keys: n^k for MmhStar, prod phi(n/t_i) otherwise.
mpz_class key_space_size(const FamilyParams& params);

/// Injected randomness source; deterministic seedable default below.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual std::uint64_t next_u64() = 0;
};

class Mt19937Source final : public RandomSource {
public:
    explicit Mt19937Source(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next_u64() override { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Unbiased uniform draw from [0, bound). bound >= 1.
std::uint64_t uniform_below(RandomSource& rng, std::uint64_t bound);

/// Uniform key. Constrained coordinates are built as x_i = t_i * u_i with u_i
/// a uniform unit of Z_(n/t_i); the scaling is a bijection onto
/// {x : gcd(x, n) = t_i}, so the key is uniform over the whole key space.
HashKey sample_key(const FamilyParams& params, RandomSource& rng);

/// All valid keys in lexicographic order. Refuses when the key space exceeds
/// the cap.
std::vector<HashKey> enumerate_keys(const FamilyParams& params,
                                    unsigned long cap = kDefaultEnumCap);

} // namespace grdh::families
