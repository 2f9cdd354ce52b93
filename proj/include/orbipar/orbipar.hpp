#pragma once

#include "orbipar/abgroup.hpp"
#include "orbipar/covers.hpp"
#include "orbipar/cyclotomic.hpp"
#include "orbipar/error.hpp"
#include "orbipar/example_s3.hpp"
#include "orbipar/finitegroup.hpp"
#include "orbipar/json_io.hpp"
#include "orbipar/orbifold.hpp"
#include "orbipar/parabolic.hpp"
#include "orbipar/rational.hpp"
#include "orbipar/report.hpp"
#include "orbipar/reptheory.hpp"
