#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "grdh/errors.hpp"
#include "grdh/nt.hpp"

namespace grdh::congruence {

/// One restricted linear congruence
///
///   a_1 x_1 + ... + a_k x_k = b  (mod n),   gcd(x_i, n) = t_i  (1 <= i <= k).
///
/// Coefficients and the target are reduced into [0, n) on construction; every
/// t_i must be a positive divisor of n, and k >= 1.
class CongruenceInstance {
public:
    CongruenceInstance(mpz_class modulus,
                       std::vector<mpz_class> coeffs,
                       mpz_class target,
                       std::vector<mpz_class> constraints);

    const mpz_class& modulus() const { return modulus_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& target() const { return target_; }
    const std::vector<mpz_class>& constraints() const { return constraints_; }
    std::size_t arity() const { return coeffs_.size(); }
    bool all_coeffs_zero() const;

private:
    mpz_class modulus_;
    std::vector<mpz_class> coeffs_;
    mpz_class target_;
    std::vector<mpz_class> constraints_;
};

/// Per-prime data driving the solution-count product: p^r exactly divides the
/// modulus; m is the first power level at which some a_i t_i escapes
/// divisibility by p; e counts the escaping coordinates. m is infinite exactly
/// when every coefficient is zero, and e is 0 in that case.
struct PrimeLocalData {
    mpz_class p;
    unsigned long r = 0;
    nt::Valuation m = nt::Valuation::infinite();
    unsigned long e = 0;
};

/// m = 1 + min_i v_p(a_i t_i); e = #indices attaining the minimum valuation.
/// Vectors must have equal length k >= 1.
PrimeLocalData prime_local(const mpz_class& p,
                           unsigned long r,
                           const std::vector<mpz_class>& coeffs,
                           const std::vector<mpz_class>& constraints);

using SolutionCount = mpz_class;

/// The five mutually exhaustive reasons a restricted congruence with a
/// nonzero coefficient can have no solutions, plus None.
enum class UnsolvableKind { None, CaseI, CaseII, CaseIII, CaseIV, CaseV };

struct UnsolvableCase {
    UnsolvableKind kind = UnsolvableKind::None;
    std::optional<mpz_class> witness_prime;  // absent for None
};

/// Exact number of solutions of the restricted congruence, via the per-prime
/// product formula. All-zero coefficient vectors are handled separately
/// (prod phi(n/t_i) when b = 0, otherwise 0). Intermediate arithmetic is
/// exact rational; the result is asserted to be a nonnegative integer.
SolutionCount count_restricted(const CongruenceInstance& inst);

/// First matching no-solution case, scanning primes in increasing order and,
/// per prime, cases in order I..V. Requires some coefficient nonzero.
/// kind == None exactly when count_restricted(inst) > 0.
UnsolvableCase unsolvable_case(const CongruenceInstance& inst);

/// Number of solutions of the unrestricted congruence over all of Z_n^k:
/// l * n^(k-1) when l = gcd(a_1, ..., a_k, n) divides b, otherwise 0.
SolutionCount count_unrestricted(const mpz_class& modulus,
                                 const std::vector<mpz_class>& coeffs,
                                 const mpz_class& target);

/// Brute-force oracle: every solution vector in lexicographic order.
/// Refuses to run when n^k exceeds the cap.
std::vector<std::vector<mpz_class>> enumerate_solutions(const CongruenceInstance& inst,
                                                        unsigned long cap = kDefaultEnumCap);

/// Generalized knapsack over Z_n with solutions drawn from the units:
/// true iff a_1 x_1 + ... + a_k x_k = b (mod n) has a solution with every
/// x_i in Z_n^*. Requires some coefficient nonzero mod n.
bool knapsack_solvable(const mpz_class& modulus,
                       const std::vector<mpz_class>& coeffs,
                       const mpz_class& target);

namespace detail {

/// How a prime p | n enters the count product for a given target valuation.
enum class PrimeBranch {
    Obstruction,   // no solutions
    Divisible,     // m <= r and p^m | b
    ExactlyBelow,  // m <= r and p^(m-1) exactly divides b
    Unit,          // m > r and p^r | b: factor 1
};

PrimeBranch classify_branch(unsigned long r,
                            const nt::Valuation& m,
                            const nt::Valuation& target_valuation);

/// The per-prime factor p^(m-r-1) * (1 - (-1)^j / (p-1)^j) with j = e-1 on
/// the Divisible branch and j = e on the ExactlyBelow branch.
mpq_class branch_factor(const mpz_class& p,
                        unsigned long r,
                        unsigned long m,
                        unsigned long e,
                        PrimeBranch branch);

} // namespace detail

} // namespace grdh::congruence
