#pragma once

// Umbrella header.
#include "chdyn/complex.hpp"
#include "chdyn/errors.hpp"
#include "chdyn/families.hpp"
#include "chdyn/image_io.hpp"
#include "chdyn/lemmas.hpp"
#include "chdyn/plane.hpp"
#include "chdyn/polynomial.hpp"
#include "chdyn/rational_map.hpp"
#include "chdyn/report.hpp"
#include "chdyn/roots.hpp"
#include "chdyn/special_params.hpp"
#include "chdyn/trichotomy.hpp"
