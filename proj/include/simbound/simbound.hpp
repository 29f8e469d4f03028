#pragma once

#include "simbound/action.hpp"
#include "simbound/bounds.hpp"
#include "simbound/cohomology.hpp"
#include "simbound/covering.hpp"
#include "simbound/delta_set.hpp"
#include "simbound/errors.hpp"
#include "simbound/f2.hpp"
#include "simbound/group.hpp"
#include "simbound/io.hpp"
#include "simbound/rational.hpp"
#include "simbound/signflip.hpp"
#include "simbound/spaces.hpp"
