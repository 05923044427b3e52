#pragma once

// Everything in one include.

#include "parity_forge/checks.hpp"
#include "parity_forge/cli.hpp"
#include "parity_forge/colored_partitions.hpp"
#include "parity_forge/dissection.hpp"
#include "parity_forge/errors.hpp"
#include "parity_forge/registry.hpp"
#include "parity_forge/report.hpp"
#include "parity_forge/ring.hpp"
#include "parity_forge/series.hpp"
#include "parity_forge/series_io.hpp"
#include "parity_forge/special_series.hpp"
