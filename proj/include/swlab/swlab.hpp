#pragma once

#include "swlab/bits.hpp"
#include "swlab/complex.hpp"
#include "swlab/dual_blocks.hpp"
#include "swlab/error.hpp"
#include "swlab/homology.hpp"
#include "swlab/io/corpus.hpp"
#include "swlab/io/facet_format.hpp"
#include "swlab/io/report_json.hpp"
#include "swlab/oracle.hpp"
#include "swlab/parallel.hpp"
#include "swlab/pipeline.hpp"
#include "swlab/riemannian/chart.hpp"
#include "swlab/riemannian/constants.hpp"
#include "swlab/riemannian/geodesic.hpp"
#include "swlab/riemannian/models.hpp"
#include "swlab/riemannian/probes.hpp"
#include "swlab/subdivision.hpp"
