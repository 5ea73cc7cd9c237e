#pragma once

// Umbrella header for the core library (no JSON dependency).
#include "catalog.hpp"
#include "cyclotomic.hpp"
#include "eddim.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "exceptional_table.hpp"
#include "expression.hpp"
#include "molien.hpp"
#include "numbers.hpp"
#include "series.hpp"
#include "spectra.hpp"
#include "turn.hpp"
#include "verify.hpp"
#include "version.hpp"
