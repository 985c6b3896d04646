#pragma once

#include "textbin/baselines.hpp"
#include "textbin/benchmark.hpp"
#include "textbin/config.hpp"
#include "textbin/edge_boxes.hpp"
#include "textbin/edge_detect.hpp"
#include "textbin/errors.hpp"
#include "textbin/image.hpp"
#include "textbin/metrics.hpp"
#include "textbin/netpbm.hpp"
#include "textbin/pipeline.hpp"
#include "textbin/preprocess.hpp"
#include "textbin/sliding_window.hpp"
#include "textbin/synth.hpp"
