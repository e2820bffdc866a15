#pragma once

#include "laguerre/bijections.hpp"
#include "laguerre/contfrac.hpp"
#include "laguerre/digraph.hpp"
#include "laguerre/history.hpp"
#include "laguerre/history_profile.hpp"
#include "laguerre/multipoly.hpp"
#include "laguerre/permutation.hpp"
#include "laguerre/render.hpp"
#include "laguerre/theta.hpp"
#include "laguerre/verify.hpp"
