#pragma once

#include "qgauss/arith.hpp"
#include "qgauss/characters.hpp"
#include "qgauss/closedform.hpp"
#include "qgauss/cyclo.hpp"
#include "qgauss/gauss.hpp"
#include "qgauss/oracle.hpp"
#include "qgauss/report.hpp"
#include "qgauss/selftest.hpp"
#include "qgauss/verify.hpp"
