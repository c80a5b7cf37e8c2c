#pragma once

// Umbrella header.

#include "ks7/errors.hpp"
#include "ks7/exactq.hpp"
#include "ks7/bundles.hpp"
#include "ks7/kreck_stolz.hpp"
#include "ks7/classify.hpp"
#include "ks7/verify.hpp"
#include "ks7/io.hpp"
