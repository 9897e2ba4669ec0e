#pragma once

#include "gray27/point_set.hpp"
#include "gray27/geometry.hpp"
#include "gray27/hyperplanes.hpp"
#include "gray27/hyperplane_scan.hpp"
#include "gray27/group.hpp"
#include "gray27/catalog.hpp"
#include "gray27/gf2.hpp"
#include "gray27/veldkamp.hpp"
#include "gray27/model.hpp"
#include "gray27/tables.hpp"
#include "gray27/export.hpp"
#include "gray27/render.hpp"
#include "gray27/verify.hpp"
