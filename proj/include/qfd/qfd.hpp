/// Umbrella header for the whole library.
#pragma once

#include "qfd/closed_forms.hpp"
#include "qfd/config.hpp"
#include "qfd/errors.hpp"
#include "qfd/fock.hpp"
#include "qfd/matrix.hpp"
#include "qfd/measures.hpp"
#include "qfd/random_states.hpp"
#include "qfd/states.hpp"
#include "qfd/sweep.hpp"
#include "qfd/verify.hpp"
