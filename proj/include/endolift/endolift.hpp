#pragma once

#include "endolift/charset.hpp"
#include "endolift/exact.hpp"
#include "endolift/franke.hpp"
#include "endolift/json.hpp"
#include "endolift/lift.hpp"
#include "endolift/partition.hpp"
#include "endolift/volume.hpp"
#include "endolift/weight.hpp"
