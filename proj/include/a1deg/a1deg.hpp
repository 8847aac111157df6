#pragma once

#include "a1deg/bezoutian.hpp"
#include "a1deg/degree.hpp"
#include "a1deg/error.hpp"
#include "a1deg/field.hpp"
#include "a1deg/function_field.hpp"
#include "a1deg/grassmannian.hpp"
#include "a1deg/groebner.hpp"
#include "a1deg/gw.hpp"
#include "a1deg/integer.hpp"
#include "a1deg/io.hpp"
#include "a1deg/matrix.hpp"
#include "a1deg/parse.hpp"
#include "a1deg/polynomial.hpp"
#include "a1deg/quotient.hpp"
#include "a1deg/scalar.hpp"
#include "a1deg/univariate.hpp"
