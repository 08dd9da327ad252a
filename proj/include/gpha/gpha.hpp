#pragma once

#include "gpha/array.hpp"
#include "gpha/autocorr.hpp"
#include "gpha/cocycle.hpp"
#include "gpha/cyclotomic.hpp"
#include "gpha/errors.hpp"
#include "gpha/extension.hpp"
#include "gpha/forge.hpp"
#include "gpha/group.hpp"
#include "gpha/harness.hpp"
#include "gpha/matrix.hpp"
#include "gpha/rds.hpp"
#include "gpha/spectra.hpp"
