#pragma once

#include "weylgb/ahyp/ahyp.hpp"
#include "weylgb/ahyp/int_matrix.hpp"
#include "weylgb/arith/cgroebner.hpp"
#include "weylgb/arith/cpoly.hpp"
#include "weylgb/arith/exponents.hpp"
#include "weylgb/arith/monomial_ideal.hpp"
#include "weylgb/arith/monomial_order.hpp"
#include "weylgb/arith/param_scalar.hpp"
#include "weylgb/arith/rational.hpp"
#include "weylgb/arith/term_format.hpp"
#include "weylgb/check.hpp"
#include "weylgb/errors.hpp"
#include "weylgb/lauricella/characteristic.hpp"
#include "weylgb/lauricella/identities.hpp"
#include "weylgb/lauricella/operators.hpp"
#include "weylgb/lauricella/param_set.hpp"
#include "weylgb/lauricella/puiseux.hpp"
#include "weylgb/lauricella/singular_locus.hpp"
#include "weylgb/lauricella/sqrt_poly.hpp"
#include "weylgb/text/parser.hpp"
#include "weylgb/weyl/initial_form.hpp"
#include "weylgb/weyl/weyl_element.hpp"
#include "weylgb/weyl/weyl_groebner.hpp"
#include "weylgb/weyl/weyl_order.hpp"
