#pragma once

#include "knotlab/bracket.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/error.hpp"
#include "knotlab/evgraph.hpp"
#include "knotlab/generate.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/planar.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/shadow.hpp"
#include "knotlab/skein.hpp"
#include "knotlab/lab/catalog.hpp"
#include "knotlab/lab/checks.hpp"
#include "knotlab/lab/report.hpp"
#include "knotlab/lab/suites.hpp"
