// Adjoining n-th roots of frozen variables, the composite over all frozen
// variables, floor-free (homogeneous) exchange polynomials and generalized
// coefficients.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gca/seed.hpp"

namespace gca {

enum class AdjoinMode { total, lcm };

std::string_view adjoin_mode_name(AdjoinMode mode);
// Throws InputError for anything other than "total" or "lcm".
AdjoinMode parse_adjoin_mode(std::string_view text);
// D = prod d_i in total mode, lcm(d_i) in lcm mode.
std::int64_t adjoin_exponent(const DivisorVector& d, AdjoinMode mode);

struct RootStep {
    std::size_t frozen = 0;
    std::int64_t n = 1;
};

// A seed over a table where some frozen symbols were replaced by root
// symbols, together with the embedding phi from the original table
// (f_j -> root^n, every other symbol fixed).
class AdjoinedSeed {
public:
    AdjoinedSeed(TablePtr base_table, GeneralizedSeed seed, std::vector<Monomial> phi, std::vector<RootStep> steps);

    const TablePtr& base_table() const { return base_table_; }
    const GeneralizedSeed& seed() const { return seed_; }
    const std::vector<Monomial>& phi_images() const { return phi_; }
    const std::vector<RootStep>& steps() const { return steps_; }

    AdjoinedSeed with_seed(GeneralizedSeed seed) const;

private:
    TablePtr base_table_;
    GeneralizedSeed seed_;
    std::vector<Monomial> phi_;
    std::vector<RootStep> steps_;
};

// Name of the symbol standing for the n-th root of `name`.
std::string root_symbol_name(const std::string& name, std::int64_t n);

// Replaces frozen j by an n-th root. Throws IndexOutOfRange or InputError
// when n < 1.
AdjoinedSeed adjoin_root(const GeneralizedSeed& seed, std::size_t j, std::int64_t n);
AdjoinedSeed adjoin_root(const AdjoinedSeed& seed, std::size_t j, std::int64_t n);
// Adjoins the adjoin_exponent-th root of every frozen variable.
AdjoinedSeed tau_tilde(const GeneralizedSeed& seed, AdjoinMode mode = AdjoinMode::total);

LaurentPolynomial phi(const AdjoinedSeed& adjoined, const LaurentPolynomial& p);
Monomial phi(const AdjoinedSeed& adjoined, const Monomial& m);

AdjoinedSeed mutate_adjoined(const AdjoinedSeed& adjoined, std::size_t k);

// Mutates both seeds along seq and checks after every prefix that phi
// carries cluster monomials, coefficient-stable products and cluster
// variables of the original seed to those of the adjoined seed.
CheckResult transport_check(const GeneralizedSeed& seed, const AdjoinedSeed& adjoined,
                            const std::vector<std::size_t>& seq);

// Checks v^[r] = (v^[1])^r on both sides for every r, which makes the
// exchange polynomial homogeneous of degree d_k in
// (u_> v_>^[1], u_< v_<^[1]).
CheckResult homogeneity_check(const GeneralizedSeed& seed, std::size_t k);
// u_> v_>^[1] / (u_< v_<^[1]). Throws HomogeneityFailure when the exchange
// polynomial of direction k is not floor-free.
Monomial tau_variable(const AdjoinedSeed& adjoined, std::size_t k);
// Coefficients of tau_k^r in theta_k / (u_< v_<^[1])^{d_k}; throws
// HomogeneityFailure when the exchange polynomial is not floor-free.
std::vector<Monomial> eta_coefficients(const GeneralizedSeed& seed, std::size_t k);

struct GeneralizedCoefficientTable {
    TablePtr table;
    // rho[k][r] for r = 0..d_k.
    std::vector<std::vector<Monomial>> rho;
};

// The current coefficient strings of an adjoined seed.
GeneralizedCoefficientTable rho(const AdjoinedSeed& adjoined);
// rho_kr = phi(p_kr) * q_kr^{-n/d_k} with q's frozen symbols read as root
// symbols, where n is the exponent used by `adjoined` (which must adjoin the
// same root to every frozen variable of `seed`).
GeneralizedCoefficientTable rho_formula(const GeneralizedSeed& seed, const AdjoinedSeed& adjoined);

}  // namespace gca
