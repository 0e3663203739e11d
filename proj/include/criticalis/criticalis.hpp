#pragma once

// Umbrella header.

#include "criticalis/builtin.hpp"
#include "criticalis/critical.hpp"
#include "criticalis/enumerate.hpp"
#include "criticalis/error.hpp"
#include "criticalis/groebner.hpp"
#include "criticalis/matrix.hpp"
#include "criticalis/polyring.hpp"
#include "criticalis/scan.hpp"
#include "criticalis/sgraph.hpp"
#include "criticalis/verify.hpp"
