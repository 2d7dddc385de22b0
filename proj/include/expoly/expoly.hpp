#pragma once

// Everything except the corpus runner, which also needs nlohmann/json.

#include "expoly/construct.hpp"
#include "expoly/duality.hpp"
#include "expoly/errors.hpp"
#include "expoly/exactla.hpp"
#include "expoly/exppoly.hpp"
#include "expoly/growth.hpp"
#include "expoly/normalize.hpp"
#include "expoly/ode.hpp"
#include "expoly/poly.hpp"
#include "expoly/scalar.hpp"
#include "expoly/textio.hpp"
