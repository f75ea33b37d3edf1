#pragma once

#include "convring/code.hpp"
#include "convring/errors.hpp"
#include "convring/first_order.hpp"
#include "convring/io.hpp"
#include "convring/poly.hpp"
#include "convring/ring.hpp"
#include "convring/state_space.hpp"
