#pragma once

#include "monoreg/bayes.hpp"
#include "monoreg/binning.hpp"
#include "monoreg/isotonic.hpp"
#include "monoreg/kernel.hpp"
#include "monoreg/percentile_bootstrap.hpp"
#include "monoreg/quantile.hpp"
#include "monoreg/rng.hpp"
#include "monoreg/sample.hpp"
#include "monoreg/simulation.hpp"
#include "monoreg/slse.hpp"
#include "monoreg/smoothed_bootstrap.hpp"
#include "monoreg/step_function.hpp"
#include "monoreg/types.hpp"
