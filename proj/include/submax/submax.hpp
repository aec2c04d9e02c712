#pragma once

#include "submax/brute_force.hpp"
#include "submax/checks.hpp"
#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/experiment.hpp"
#include "submax/functions.hpp"
#include "submax/generators.hpp"
#include "submax/greedy.hpp"
#include "submax/instance.hpp"
#include "submax/monte_carlo.hpp"
#include "submax/offline.hpp"
#include "submax/policy_game.hpp"
#include "submax/rank.hpp"
#include "submax/report.hpp"
#include "submax/rng.hpp"
#include "submax/secretary.hpp"
#include "submax/secretary_matroid.hpp"
#include "submax/secretary_partition.hpp"
#include "submax/stream.hpp"
#include "submax/subset.hpp"
#include "submax/unconstrained.hpp"
#include "submax/value_oracle.hpp"
