#pragma once

#include "defring/padic.hpp"
#include "defring/freegroup.hpp"
#include "defring/series.hpp"
#include "defring/presentation.hpp"
#include "defring/dsl.hpp"
#include "defring/fox.hpp"
#include "defring/matrix.hpp"
#include "defring/deform.hpp"
#include "defring/linalg.hpp"
#include "defring/verify.hpp"
#include "defring/report.hpp"
