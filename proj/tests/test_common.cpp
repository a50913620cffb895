#include "common.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zml_test {

const std::vector<oracle_zero>& oracle_zeros()
{
    static const std::vector<oracle_zero> rows = [] {
        std::ifstream in(std::string(ZML_TEST_DATA) + "/oracle_zeros.csv");
        if (!in) {
            throw std::runtime_error("missing oracle_zeros.csv");
        }
        std::vector<oracle_zero> out;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            oracle_zero z{};
            char comma = 0;
            ss >> z.n >> comma >> z.gamma >> comma >> z.abs_zeta_prime;
            out.push_back(z);
        }
        return out;
    }();
    return rows;
}

const zml::zero_list& zeros_1e4()
{
    static const zml::zero_list z = zml::find_zeros(0.0, 1e4);
    return z;
}

const zml::prime_table& primes_1e6()
{
    static const zml::prime_table t = zml::sieve_primes(1000000);
    return t;
}

} // namespace zml_test
