#pragma once

#include "skewbound/errors.hpp"
#include "skewbound/gf2.hpp"
#include "skewbound/linear.hpp"
#include "skewbound/quotient_ring.hpp"
#include "skewbound/symmetric.hpp"
#include "skewbound/steenrod.hpp"
#include "skewbound/catalog.hpp"
#include "skewbound/bound.hpp"
#include "skewbound/oracle.hpp"
#include "skewbound/expr.hpp"
