#pragma once

#include "catalog.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "lie.hpp"
#include "operator_matrix.hpp"
#include "param_poly.hpp"
#include "quantize.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "yang_baxter.hpp"
