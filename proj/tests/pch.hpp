#pragma once

#include <gtest/gtest.h>

#include "hwdim/hwdim.hpp"
#include "hwdim/json_io.hpp"
#include "hwdim/suites.hpp"
