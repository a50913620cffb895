#ifndef ZML_TESTS_COMMON_HPP
#define ZML_TESTS_COMMON_HPP

#include <string>
#include <vector>

#include "zml.hpp"

namespace zml_test {

struct oracle_zero {
    int n;
    double gamma;
    double abs_zeta_prime;
};

// n, gamma_n, |zeta'(rho_n)| for n <= 1600 (tools/oracle/zeros_oracle.py).
const std::vector<oracle_zero>& oracle_zeros();

// Zeros on (0, 10^4], computed once per process.
const zml::zero_list& zeros_1e4();

const zml::prime_table& primes_1e6();

} // namespace zml_test

#endif
