#pragma once

#include "ecalc/affine.hpp"
#include "ecalc/sharp.hpp"
#include "ecalc/characters.hpp"
#include "ecalc/dual_side.hpp"
#include "ecalc/eisenstein.hpp"
#include "ecalc/error.hpp"
#include "ecalc/local_integrals.hpp"
#include "ecalc/rational.hpp"
#include "ecalc/render.hpp"
#include "ecalc/root_datum.hpp"
#include "ecalc/weyl.hpp"
#include "ecalc/zeta.hpp"
