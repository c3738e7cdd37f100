#pragma once

#include "binhopf/enumerate.hpp"
#include "binhopf/error.hpp"
#include "binhopf/hopf.hpp"
#include "binhopf/io.hpp"
#include "binhopf/limits.hpp"
#include "binhopf/linear.hpp"
#include "binhopf/pairing.hpp"
#include "binhopf/prelie.hpp"
#include "binhopf/rational.hpp"
#include "binhopf/tree.hpp"
