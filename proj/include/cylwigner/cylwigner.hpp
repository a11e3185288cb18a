#pragma once

#include "cylwigner/dynamics.hpp"
#include "cylwigner/errors.hpp"
#include "cylwigner/io.hpp"
#include "cylwigner/quadrature.hpp"
#include "cylwigner/specfun.hpp"
#include "cylwigner/states.hpp"
#include "cylwigner/thermal.hpp"
#include "cylwigner/verify.hpp"
#include "cylwigner/wigner.hpp"
