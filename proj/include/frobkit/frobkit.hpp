#ifndef FROBKIT_FROBKIT_HPP
#define FROBKIT_FROBKIT_HPP

#include "frobkit/dmodule.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/frobenius_root.hpp"
#include "frobkit/groebner.hpp"
#include "frobkit/ideal.hpp"
#include "frobkit/monomial.hpp"
#include "frobkit/parse.hpp"
#include "frobkit/polynomial.hpp"
#include "frobkit/prime_field.hpp"
#include "frobkit/rational.hpp"
#include "frobkit/ring.hpp"
#include "frobkit/semigroup.hpp"
#include "frobkit/test_ideal.hpp"

#endif
