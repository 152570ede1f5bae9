#pragma once

// Exact Gysin pushforwards for flag manifolds G/T -> G/H: root systems, Weyl
// groups, sparse rational polynomial algebra, fixed-point localization, and
// the closed-form / localization / divided-difference routes with
// cross-validation.

#include "flagpush/cartan.hpp"
#include "flagpush/errors.hpp"
#include "flagpush/localize.hpp"
#include "flagpush/poly.hpp"
#include "flagpush/poly_parse.hpp"
#include "flagpush/ratfun.hpp"
#include "flagpush/rational.hpp"
#include "flagpush/rng.hpp"
#include "flagpush/rootsys.hpp"
#include "flagpush/verify.hpp"
#include "flagpush/weyl.hpp"
#include "flagpush/weyl_action.hpp"
