#ifndef GOMETRICS_HPP
#define GOMETRICS_HPP

#include "gometrics/scalar.hpp"
#include "gometrics/matrix.hpp"
#include "gometrics/linalg.hpp"
#include "gometrics/errors.hpp"
#include "gometrics/rootsys.hpp"
#include "gometrics/liealg.hpp"
#include "gometrics/subspace.hpp"
#include "gometrics/metrics.hpp"
#include "gometrics/gocheck.hpp"
#include "gometrics/ricci.hpp"
#include "gometrics/spaces.hpp"
#include "gometrics/serialize.hpp"

#endif // GOMETRICS_HPP
