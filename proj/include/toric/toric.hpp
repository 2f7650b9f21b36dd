#pragma once

#include "toric/charclass.hpp"
#include "toric/detection.hpp"
#include "toric/error.hpp"
#include "toric/expr.hpp"
#include "toric/genera.hpp"
#include "toric/io.hpp"
#include "toric/localization.hpp"
#include "toric/matrix.hpp"
#include "toric/poly.hpp"
#include "toric/polytope.hpp"
#include "toric/rational.hpp"
