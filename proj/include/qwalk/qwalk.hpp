// qwalk.hpp -- umbrella header.
#pragma once

#include "qwalk/barrier.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/ctqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/transport.hpp"
#include "qwalk/walk.hpp"
