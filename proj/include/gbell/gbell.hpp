#pragma once

#include "gbell/batch.hpp"
#include "gbell/bounds.hpp"
#include "gbell/construct.hpp"
#include "gbell/errors.hpp"
#include "gbell/interlace.hpp"
#include "gbell/isolate.hpp"
#include "gbell/laguerre.hpp"
#include "gbell/phi.hpp"
#include "gbell/poly.hpp"
#include "gbell/random.hpp"
#include "gbell/rational.hpp"
#include "gbell/report.hpp"
#include "gbell/series.hpp"
#include "gbell/stirling.hpp"
#include "gbell/suites.hpp"
