#pragma once

// Umbrella header.

#include "dcsg/closure.hpp"
#include "dcsg/interval.hpp"
#include "dcsg/oracle.hpp"
#include "dcsg/report.hpp"
#include "dcsg/semigroup.hpp"
