#pragma once

#include "darboux/entropy_momentum.hpp"
#include "darboux/entropy_position.hpp"
#include "darboux/model.hpp"
#include "darboux/quadrature.hpp"
#include "darboux/specfun.hpp"
#include "darboux/states.hpp"
#include "darboux/transform.hpp"
