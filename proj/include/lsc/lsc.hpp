#ifndef LSC_LSC_HPP
#define LSC_LSC_HPP

#include "lsc/cluster.hpp"
#include "lsc/core.hpp"
#include "lsc/data.hpp"
#include "lsc/dtw.hpp"
#include "lsc/eval.hpp"
#include "lsc/metric.hpp"
#include "lsc/parallel.hpp"
#include "lsc/preprocess.hpp"
#include "lsc/random.hpp"
#include "lsc/report.hpp"
#include "lsc/svg.hpp"

#endif  // LSC_LSC_HPP
