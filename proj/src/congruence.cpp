#include "grdh/congruence.hpp"

#include <numeric>
#include <stdexcept>

namespace grdh::congruence {

namespace {

// p-adic valuation for a prime taken from a Factorization (no primality check).
nt::Valuation valuation_unchecked(const mpz_class& p, const mpz_class& a) {
    if (a == 0) return nt::Valuation::infinite();
    unsigned long r = 0;
    mpz_class rest = a;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++r;
    }
    return nt::Valuation::finite(r);
}

} // namespace

CongruenceInstance::CongruenceInstance(mpz_class modulus,
                                       std::vector<mpz_class> coeffs,
                                       mpz_class target,
                                       std::vector<mpz_class> constraints)
    : modulus_(std::move(modulus)),
      coeffs_(std::move(coeffs)),
      target_(std::move(target)),
      constraints_(std::move(constraints)) {
    if (modulus_ < 2) throw std::domain_error("CongruenceInstance: modulus must be >= 2");
    if (coeffs_.empty()) throw std::domain_error("CongruenceInstance: need at least one unknown");
    if (constraints_.size() != coeffs_.size())
        throw std::domain_error("CongruenceInstance: coefficient/constraint length mismatch");
    for (auto& a : coeffs_) a = nt::mod_reduce(a, modulus_);
    target_ = nt::mod_reduce(target_, modulus_);
    for (const auto& t : constraints_) {
        if (t < 1 || !mpz_divisible_p(modulus_.get_mpz_t(), t.get_mpz_t()))
            throw std::domain_error("CongruenceInstance: every t_i must be a positive divisor of n");
    }
}

bool CongruenceInstance::all_coeffs_zero() const {
    for (const auto& a : coeffs_) {
        if (a != 0) return false;
    }
    return true;
}

PrimeLocalData prime_local(const mpz_class& p,
                           unsigned long r,
                           const std::vector<mpz_class>& coeffs,
                           const std::vector<mpz_class>& constraints) {
    if (coeffs.empty() || coeffs.size() != constraints.size())
        throw std::domain_error("prime_local: coefficient/constraint length mismatch");
    nt::Valuation min_val = nt::Valuation::infinite();
    unsigned long hits = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const nt::Valuation v = valuation_unchecked(p, coeffs[i] * constraints[i]);
        if (v < min_val) {
            min_val = v;
            hits = 1;
        } else if (v == min_val && !v.is_infinite()) {
            ++hits;
        }
    }
    PrimeLocalData out;
    out.p = p;
    out.r = r;
    if (min_val.is_infinite()) {
        out.m = nt::Valuation::infinite();
        out.e = 0;
    } else {
        out.m = nt::Valuation::finite(min_val.value() + 1);
        out.e = hits;
    }
    return out;
}

namespace detail {

PrimeBranch classify_branch(unsigned long r,
                            const nt::Valuation& m,
                            const nt::Valuation& target_valuation) {
    if (!m.is_infinite() && m.value() <= r) {
        if (target_valuation >= m) return PrimeBranch::Divisible;
        if (target_valuation == nt::Valuation::finite(m.value() - 1)) return PrimeBranch::ExactlyBelow;
        return PrimeBranch::Obstruction;
    }
    if (target_valuation >= nt::Valuation::finite(r)) return PrimeBranch::Unit;
    return PrimeBranch::Obstruction;
}

mpq_class branch_factor(const mpz_class& p,
                        unsigned long r,
                        unsigned long m,
                        unsigned long e,
                        PrimeBranch branch) {
    if (branch == PrimeBranch::Unit) return mpq_class(1);
    if (branch == PrimeBranch::Obstruction) return mpq_class(0);
    const unsigned long j = (branch == PrimeBranch::Divisible) ? e - 1 : e;
    mpz_class pm1_pow;  // (p-1)^j
    mpz_class pm1 = p - 1;
    mpz_pow_ui(pm1_pow.get_mpz_t(), pm1.get_mpz_t(), j);
    const bool subtract = (j % 2 == 0);  // (-1)^j = +1
    mpz_class numer = subtract ? mpz_class(pm1_pow - 1) : mpz_class(pm1_pow + 1);
    // m <= r here, so p^(m-r-1) contributes p^(r+1-m) to the denominator.
    mpz_class ppow;
    mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), r + 1 - m);
    mpq_class q(numer, pm1_pow * ppow);
    q.canonicalize();
    return q;
}

} // namespace detail

SolutionCount count_restricted(const CongruenceInstance& inst) {
    const mpz_class& n = inst.modulus();
    mpz_class constrained_space = 1;  // prod phi(n/t_i)
    for (const auto& t : inst.constraints()) constrained_space *= nt::euler_phi(n / t);

    if (inst.all_coeffs_zero()) {
        return inst.target() == 0 ? constrained_space : mpz_class(0);
    }

    mpq_class product(constrained_space);
    for (const auto& pp : nt::factorize(n).factors()) {
        const PrimeLocalData local = prime_local(pp.prime, pp.exponent, inst.coeffs(), inst.constraints());
        const nt::Valuation vb = valuation_unchecked(pp.prime, inst.target());
        const auto branch = detail::classify_branch(local.r, local.m, vb);
        if (branch == detail::PrimeBranch::Obstruction) return 0;
        if (branch == detail::PrimeBranch::Unit) continue;
        product *= detail::branch_factor(local.p, local.r, local.m.value(), local.e, branch);
    }

    if (product.get_den() != 1 || product.get_num() < 0)
        throw InternalError("count_restricted: product formula did not yield a nonnegative integer");
    return product.get_num();
}

UnsolvableCase unsolvable_case(const CongruenceInstance& inst) {
    if (inst.all_coeffs_zero())
        throw std::domain_error("unsolvable_case: needs a nonzero coefficient");
    for (const auto& pp : nt::factorize(inst.modulus()).factors()) {
        const PrimeLocalData local = prime_local(pp.prime, pp.exponent, inst.coeffs(), inst.constraints());
        const nt::Valuation vb = valuation_unchecked(pp.prime, inst.target());
        const unsigned long m = local.m.value();  // finite: some a_i != 0
        const bool m_below = m <= local.r;
        if (m_below && vb < nt::Valuation::finite(m - 1))
            return {UnsolvableKind::CaseI, pp.prime};
        if (!m_below && vb < nt::Valuation::finite(local.r))
            return {UnsolvableKind::CaseII, pp.prime};
        if (m_below) {
            const bool divisible = vb >= local.m;
            const bool exactly_below = vb == nt::Valuation::finite(m - 1);
            if (local.e == 1 && divisible) return {UnsolvableKind::CaseIII, pp.prime};
            if (pp.prime == 2 && local.e % 2 == 1 && divisible)
                return {UnsolvableKind::CaseIV, pp.prime};
            if (pp.prime == 2 && local.e % 2 == 0 && exactly_below)
                return {UnsolvableKind::CaseV, pp.prime};
        }
    }
    return {UnsolvableKind::None, std::nullopt};
}

SolutionCount count_unrestricted(const mpz_class& modulus,
                                 const std::vector<mpz_class>& coeffs,
                                 const mpz_class& target) {
    if (modulus < 2) throw std::domain_error("count_unrestricted: modulus must be >= 2");
    if (coeffs.empty()) throw std::domain_error("count_unrestricted: need at least one unknown");
    std::vector<mpz_class> reduced;
    reduced.reserve(coeffs.size());
    for (const auto& a : coeffs) reduced.push_back(nt::mod_reduce(a, modulus));
    const mpz_class l = nt::gcd_many(reduced, modulus);
    if (!mpz_divisible_p(nt::mod_reduce(target, modulus).get_mpz_t(), l.get_mpz_t())) return 0;
    mpz_class count;
    mpz_pow_ui(count.get_mpz_t(), modulus.get_mpz_t(), coeffs.size() - 1);
    return l * count;
}

std::vector<std::vector<mpz_class>> enumerate_solutions(const CongruenceInstance& inst,
                                                        unsigned long cap) {
    const std::size_t k = inst.arity();
    mpz_class space;
    mpz_pow_ui(space.get_mpz_t(), inst.modulus().get_mpz_t(), k);
    if (space > cap)
        throw ResourceError("enumerate_solutions: n^k exceeds the enumeration cap");

    const unsigned long n = inst.modulus().get_ui();
    const unsigned long b = inst.target().get_ui();
    std::vector<unsigned long> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = inst.coeffs()[i].get_ui();

    // Per-coordinate admissible values {x in [0,n) : gcd(x,n) = t_i}, ascending.
    std::vector<std::vector<unsigned long>> values(k);
    for (std::size_t i = 0; i < k; ++i) {
        const unsigned long t = inst.constraints()[i].get_ui();
        for (unsigned long x = 0; x < n; ++x) {
            if (std::gcd(x, n) == t) values[i].push_back(x);
        }
    }

    std::vector<std::vector<mpz_class>> out;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        unsigned long sum = 0;
        for (std::size_t i = 0; i < k; ++i) sum = (sum + a[i] * values[i][idx[i]]) % n;
        if (sum == b) {
            std::vector<mpz_class> sol(k);
            for (std::size_t i = 0; i < k; ++i) sol[i] = values[i][idx[i]];
            out.push_back(std::move(sol));
        }
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < values[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

bool knapsack_solvable(const mpz_class& modulus,
                       const std::vector<mpz_class>& coeffs,
                       const mpz_class& target) {
    const CongruenceInstance inst(modulus, coeffs, target,
                                  std::vector<mpz_class>(coeffs.size(), 1));
    if (inst.all_coeffs_zero())
        throw std::domain_error("knapsack_solvable: needs a nonzero coefficient");
    return unsolvable_case(inst).kind == UnsolvableKind::None;
}

} // namespace grdh::congruence
