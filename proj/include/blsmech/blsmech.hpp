#pragma once

#include "blsmech/design.hpp"
#include "blsmech/error.hpp"
#include "blsmech/experiment.hpp"
#include "blsmech/fixtures.hpp"
#include "blsmech/kinematics.hpp"
#include "blsmech/mechanics.hpp"
#include "blsmech/oracles.hpp"
#include "blsmech/plot.hpp"
#include "blsmech/quadrature.hpp"
#include "blsmech/report.hpp"
#include "blsmech/units.hpp"
#include "blsmech/verification.hpp"
