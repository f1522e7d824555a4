#pragma once

#include "wordkit/avoidance.hpp"
#include "wordkit/construct.hpp"
#include "wordkit/errors.hpp"
#include "wordkit/exact.hpp"
#include "wordkit/morphic.hpp"
#include "wordkit/quaternion.hpp"
#include "wordkit/serialize.hpp"
#include "wordkit/witness.hpp"
#include "wordkit/word.hpp"
