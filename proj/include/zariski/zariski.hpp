#pragma once

#include "zariski/cone_model.hpp"
#include "zariski/cutkosky.hpp"
#include "zariski/engine.hpp"
#include "zariski/errors.hpp"
#include "zariski/fixtures.hpp"
#include "zariski/linalg.hpp"
#include "zariski/quad_ext.hpp"
#include "zariski/rational.hpp"
