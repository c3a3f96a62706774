#pragma once

/* Umbrella header. */

#include "biblioscope/collab.hpp"
#include "biblioscope/config.hpp"
#include "biblioscope/corpus.hpp"
#include "biblioscope/errors.hpp"
#include "biblioscope/geography.hpp"
#include "biblioscope/indicators.hpp"
#include "biblioscope/normalize.hpp"
#include "biblioscope/overlay.hpp"
#include "biblioscope/publisher.hpp"
#include "biblioscope/reports.hpp"
#include "biblioscope/store.hpp"
#include "biblioscope/tagfile.hpp"
#include "biblioscope/text.hpp"
