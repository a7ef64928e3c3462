#ifndef ROTOR_OTTO_ROTOR_OTTO_HPP_
#define ROTOR_OTTO_ROTOR_OTTO_HPP_

#include "rotor_otto/axis.hpp"
#include "rotor_otto/classical.hpp"
#include "rotor_otto/cycle.hpp"
#include "rotor_otto/qelectric.hpp"
#include "rotor_otto/qmagnetic.hpp"
#include "rotor_otto/serialize.hpp"
#include "rotor_otto/specfun.hpp"
#include "rotor_otto/sweep.hpp"
#include "rotor_otto/units.hpp"

#endif  // ROTOR_OTTO_ROTOR_OTTO_HPP_
