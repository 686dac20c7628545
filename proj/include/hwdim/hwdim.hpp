#pragma once

#include "hwdim/arith.hpp"
#include "hwdim/classify.hpp"
#include "hwdim/dims.hpp"
#include "hwdim/duality.hpp"
#include "hwdim/enumerate.hpp"
#include "hwdim/heightmin.hpp"
#include "hwdim/lie_type.hpp"
#include "hwdim/polynomial.hpp"
#include "hwdim/reference_tables.hpp"
#include "hwdim/root_system.hpp"
