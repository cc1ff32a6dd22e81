#pragma once

#include "dcf/config.hpp"
#include "dcf/conserved.hpp"
#include "dcf/dynamics.hpp"
#include "dcf/errors.hpp"
#include "dcf/maps.hpp"
#include "dcf/ode.hpp"
#include "dcf/oracle.hpp"
#include "dcf/params.hpp"
#include "dcf/pipelines.hpp"
#include "dcf/specfun.hpp"
#include "dcf/spectra.hpp"
#include "dcf/state.hpp"
#include "dcf/wavefn.hpp"
