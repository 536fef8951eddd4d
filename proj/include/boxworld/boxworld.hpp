#ifndef BOXWORLD_BOXWORLD_HPP
#define BOXWORLD_BOXWORLD_HPP

#include "boxworld/rational.hpp"
#include "boxworld/linalg.hpp"
#include "boxworld/system.hpp"
#include "boxworld/effects.hpp"
#include "boxworld/gram.hpp"
#include "boxworld/state.hpp"
#include "boxworld/cone.hpp"
#include "boxworld/polytope.hpp"
#include "boxworld/transforms.hpp"
#include "boxworld/group.hpp"
#include "boxworld/search.hpp"
#include "boxworld/theorems.hpp"
#include "boxworld/bell.hpp"
#include "boxworld/io.hpp"

#endif  // BOXWORLD_BOXWORLD_HPP
