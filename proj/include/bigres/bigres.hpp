#ifndef BIGRES_BIGRES_HPP
#define BIGRES_BIGRES_HPP

#include "bettimath.hpp"
#include "complexes.hpp"
#include "groebner.hpp"
#include "module.hpp"
#include "polynomial.hpp"
#include "resolution.hpp"
#include "ring.hpp"
#include "serialization.hpp"
#include "singularity.hpp"

#endif
