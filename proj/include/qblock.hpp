#pragma once

#include "qblock/blocks.hpp"
#include "qblock/canon.hpp"
#include "qblock/classrec.hpp"
#include "qblock/engine.hpp"
#include "qblock/enumerate.hpp"
#include "qblock/errors.hpp"
#include "qblock/graph.hpp"
#include "qblock/perm_group.hpp"
#include "qblock/qexpr.hpp"
#include "qblock/wl.hpp"
