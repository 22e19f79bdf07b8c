#pragma once

#include "spikelss/config.hpp"
#include "spikelss/core_types.hpp"
#include "spikelss/error.hpp"
#include "spikelss/lss_clt.hpp"
#include "spikelss/montecarlo.hpp"
#include "spikelss/mp_solver.hpp"
#include "spikelss/report.hpp"
#include "spikelss/rng.hpp"
#include "spikelss/spike_asymptotics.hpp"
#include "spikelss/stat_tests.hpp"
#include "spikelss/test_function.hpp"
#include "spikelss/tracy_widom.hpp"
#include "spikelss/unit_circle.hpp"
