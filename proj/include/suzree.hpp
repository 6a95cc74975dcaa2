#pragma once

#include "suzree/arith.hpp"
#include "suzree/cyclotomic.hpp"
#include "suzree/aurifeuille.hpp"
#include "suzree/adjacency_data.hpp"
#include "suzree/primegraph.hpp"
#include "suzree/report.hpp"
