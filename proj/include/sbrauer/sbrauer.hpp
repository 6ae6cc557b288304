#ifndef SBRAUER_SBRAUER_HPP
#define SBRAUER_SBRAUER_HPP

#include "sbrauer/arith.hpp"
#include "sbrauer/bsgs.hpp"
#include "sbrauer/diagram.hpp"
#include "sbrauer/error.hpp"
#include "sbrauer/groups.hpp"
#include "sbrauer/hyperoct.hpp"
#include "sbrauer/perm.hpp"
#include "sbrauer/report.hpp"

#endif
