#pragma once

#include "superpoint/error.hpp"
#include "superpoint/field.hpp"
#include "superpoint/matrix.hpp"
#include "superpoint/algebra.hpp"
#include "superpoint/module.hpp"
#include "superpoint/resolution.hpp"
#include "superpoint/pipoint.hpp"
#include "superpoint/variety.hpp"
#include "superpoint/random.hpp"
#include "superpoint/io.hpp"
