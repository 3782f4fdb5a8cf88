#pragma once

#include "symzeta/core.hpp"
#include "symzeta/special_functions.hpp"
#include "symzeta/partitions.hpp"
#include "symzeta/symmetric_zeta.hpp"
#include "symzeta/apoint_locator.hpp"
#include "symzeta/asymptotic_report.hpp"
#include "symzeta/io.hpp"
