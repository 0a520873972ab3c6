// Umbrella header.

#pragma once

#include "grpd/classes.hpp"
#include "grpd/combinat.hpp"
#include "grpd/commutant.hpp"
#include "grpd/cyclotomic.hpp"
#include "grpd/error.hpp"
#include "grpd/galgebra.hpp"
#include "grpd/gelfand.hpp"
#include "grpd/gkd.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/groupoid_checks.hpp"
#include "grpd/matrix.hpp"
#include "grpd/perm.hpp"
#include "grpd/rational.hpp"
#include "grpd/report.hpp"
#include "grpd/rook.hpp"
#include "grpd/schurweyl.hpp"
#include "grpd/serialize.hpp"
#include "grpd/simples.hpp"
#include "grpd/sparse.hpp"
#include "grpd/specht.hpp"
#include "grpd/wreath.hpp"
