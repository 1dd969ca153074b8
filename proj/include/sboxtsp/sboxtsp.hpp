#pragma once

#include "chaos.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "report.hpp"
#include "sbox.hpp"
#include "sweep.hpp"
#include "tsp.hpp"
