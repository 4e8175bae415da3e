#pragma once

#include "cover.hpp"
#include "gen.hpp"
#include "group.hpp"
#include "inner_cover.hpp"
#include "instance.hpp"
#include "instance_io.hpp"
#include "mesh_cover.hpp"
#include "operators.hpp"
#include "pair_function.hpp"
#include "report_io.hpp"
#include "space.hpp"
#include "step_function.hpp"
#include "verify.hpp"
