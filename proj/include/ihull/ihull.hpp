#ifndef IHULL_IHULL_HPP
#define IHULL_IHULL_HPP

#include "ihull/rational.hpp"
#include "ihull/errors.hpp"
#include "ihull/interval.hpp"
#include "ihull/series.hpp"
#include "ihull/enclosures.hpp"
#include "ihull/elementary.hpp"
#include "ihull/format.hpp"
#include "ihull/parse.hpp"
#include "ihull/cover.hpp"
#include "ihull/grid_oracle.hpp"
#include "ihull/hull.hpp"
#include "ihull/spaces.hpp"
#include "ihull/scenarios.hpp"

#endif
