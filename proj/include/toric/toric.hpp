#pragma once

#include "toric/autstructure.hpp"
#include "toric/classgroup.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/fanauto.hpp"
#include "toric/integer.hpp"
#include "toric/intlin.hpp"
#include "toric/roots.hpp"
#include "toric/symbolic.hpp"
