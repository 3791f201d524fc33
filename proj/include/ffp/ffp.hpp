#pragma once

#include "ffp/asymptotics.hpp"
#include "ffp/config.hpp"
#include "ffp/errors.hpp"
#include "ffp/families.hpp"
#include "ffp/ffpoly.hpp"
#include "ffp/identities.hpp"
#include "ffp/one_over_d.hpp"
#include "ffp/pair_sums.hpp"
#include "ffp/partitions.hpp"
#include "ffp/permutations.hpp"
#include "ffp/random.hpp"
#include "ffp/rational.hpp"
#include "ffp/series.hpp"
#include "ffp/verify.hpp"
