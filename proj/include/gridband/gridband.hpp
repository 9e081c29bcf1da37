#ifndef GRIDBAND_GRIDBAND_HPP
#define GRIDBAND_GRIDBAND_HPP

#include "gridband/bandwidth.hpp"
#include "gridband/coeffs.hpp"
#include "gridband/grid.hpp"
#include "gridband/hales.hpp"
#include "gridband/matrix_market.hpp"
#include "gridband/oracle.hpp"
#include "gridband/types.hpp"
#include "gridband/vertex.hpp"

#endif  // GRIDBAND_GRIDBAND_HPP
