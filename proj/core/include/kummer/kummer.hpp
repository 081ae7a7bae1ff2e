#pragma once

#include "kummer/applications.hpp"
#include "kummer/arith.hpp"
#include "kummer/bernoulli.hpp"
#include "kummer/errors.hpp"
#include "kummer/padic.hpp"
#include "kummer/pairs.hpp"
#include "kummer/primes.hpp"
#include "kummer/rational.hpp"
#include "kummer/zeta.hpp"
