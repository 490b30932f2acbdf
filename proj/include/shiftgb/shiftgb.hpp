#pragma once

#include "shiftgb/circulant.hpp"
#include "shiftgb/combinatorics.hpp"
#include "shiftgb/completion.hpp"
#include "shiftgb/error.hpp"
#include "shiftgb/field.hpp"
#include "shiftgb/groebner.hpp"
#include "shiftgb/matrix.hpp"
#include "shiftgb/monomial.hpp"
#include "shiftgb/polynomial.hpp"
#include "shiftgb/rng.hpp"
#include "shiftgb/serialize.hpp"
