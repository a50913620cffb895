#ifndef ZML_HPP
#define ZML_HPP

#include "zml/compensated_sum.hpp"
#include "zml/conjecture.hpp"
#include "zml/errors.hpp"
#include "zml/gamma.hpp"
#include "zml/landau.hpp"
#include "zml/majorant.hpp"
#include "zml/moments.hpp"
#include "zml/parallel.hpp"
#include "zml/primes.hpp"
#include "zml/random_model.hpp"
#include "zml/reference_zeros.hpp"
#include "zml/report.hpp"
#include "zml/verify.hpp"
#include "zml/zero_io.hpp"
#include "zml/zeros.hpp"
#include "zml/zeta.hpp"

#endif // ZML_HPP
