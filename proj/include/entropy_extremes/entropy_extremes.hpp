#pragma once

#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/order.hpp"
#include "entropy_extremes/prob_vec.hpp"
#include "entropy_extremes/extremal.hpp"
#include "entropy_extremes/bounds.hpp"
#include "entropy_extremes/channel.hpp"
#include "entropy_extremes/region.hpp"
#include "entropy_extremes/io.hpp"
#include "entropy_extremes/verify.hpp"
