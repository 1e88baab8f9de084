#pragma once

#include "matjul/boettcher.hpp"
#include "matjul/classification.hpp"
#include "matjul/green_boettcher.hpp"
#include "matjul/io.hpp"
#include "matjul/log_complex.hpp"
#include "matjul/mat2.hpp"
#include "matjul/matrix_polynomial.hpp"
#include "matjul/polynomial.hpp"
#include "matjul/power_series.hpp"
#include "matjul/render.hpp"
#include "matjul/scalar_dynamics.hpp"
#include "matjul/slice.hpp"
#include "matjul/spectrum.hpp"
#include "matjul/verify.hpp"
