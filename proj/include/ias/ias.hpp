#pragma once

#include "convert.hpp"
#include "curve.hpp"
#include "dalembert.hpp"
#include "model.hpp"
#include "io.hpp"
#include "normal_forms.hpp"
#include "pipeline.hpp"
#include "plane_number.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "singular.hpp"
#include "surface.hpp"
#include "trace.hpp"
#include "verify.hpp"
