#pragma once

#include "exactla/scalar.hpp"
#include "exactla/matrix.hpp"
#include "exactla/poly.hpp"
#include "exactla/f2.hpp"
#include "exactla/snf.hpp"
#include "exactla/lp.hpp"
