/**
 * @file dyncons.hpp
 * @brief Umbrella header.
 */
#pragma once

#include "dyncons/analysis.hpp"
#include "dyncons/bifurcation.hpp"
#include "dyncons/errors.hpp"
#include "dyncons/integrator.hpp"
#include "dyncons/jacobian.hpp"
#include "dyncons/models.hpp"
#include "dyncons/oracle.hpp"
#include "dyncons/schemes.hpp"
