#pragma once

#include "ringlab/error.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/polarity.hpp"
#include "ringlab/theorems.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/verify.hpp"
#include "ringlab/report_io.hpp"
