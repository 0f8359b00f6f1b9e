// krallm1.hpp: everything except the command-line dispatch.

#pragma once

#include "krallm1/errors.hpp"
#include "krallm1/scalar.hpp"
#include "krallm1/pochhammer.hpp"
#include "krallm1/laurent_poly.hpp"
#include "krallm1/qjacobi.hpp"
#include "krallm1/rep_coeff.hpp"
#include "krallm1/minus_one_params.hpp"
#include "krallm1/moments.hpp"
#include "krallm1/minus_one.hpp"
#include "krallm1/l0_operator.hpp"
#include "krallm1/low_degree.hpp"
#include "krallm1/quadrature.hpp"
#include "krallm1/epsilon_scan.hpp"
#include "krallm1/matrix_op.hpp"
#include "krallm1/report.hpp"
#include "krallm1/verify.hpp"
