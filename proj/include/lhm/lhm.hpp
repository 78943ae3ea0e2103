#ifndef LHM_LHM_HPP
#define LHM_LHM_HPP

#include "lhm/config.hpp"
#include "lhm/constants.hpp"
#include "lhm/csv.hpp"
#include "lhm/density_matrix.hpp"
#include "lhm/errors.hpp"
#include "lhm/liouvillian.hpp"
#include "lhm/params.hpp"
#include "lhm/response.hpp"
#include "lhm/steady_state.hpp"
#include "lhm/svg.hpp"
#include "lhm/sweep.hpp"

#endif
