#pragma once

#include "tkit/bitset.hpp"
#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/instance.hpp"
#include "tkit/io.hpp"
#include "tkit/knapsack.hpp"
#include "tkit/kthreshold.hpp"
#include "tkit/oracle.hpp"
#include "tkit/rational.hpp"
#include "tkit/split.hpp"
#include "tkit/threshold.hpp"
