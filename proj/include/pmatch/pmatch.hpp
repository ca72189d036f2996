#pragma once

#include "pmatch/classify.hpp"
#include "pmatch/error.hpp"
#include "pmatch/experiment.hpp"
#include "pmatch/generate.hpp"
#include "pmatch/geometry.hpp"
#include "pmatch/io.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/report.hpp"
#include "pmatch/svg.hpp"
#include "pmatch/witness.hpp"
