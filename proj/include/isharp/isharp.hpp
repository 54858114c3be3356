#pragma once

#include "errors.hpp"
#include "slopes.hpp"
#include "value.hpp"
#include "knots.hpp"
#include "dataset.hpp"
#include "invariants.hpp"
#include "dim_domain.hpp"
#include "surgery.hpp"
#include "verify.hpp"
