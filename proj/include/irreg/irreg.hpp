#pragma once

#include "irreg/error.hpp"
#include "irreg/graph.hpp"
#include "irreg/io.hpp"
#include "irreg/spectral.hpp"
#include "irreg/measures.hpp"
#include "irreg/generators.hpp"
#include "irreg/isomorphism.hpp"
#include "irreg/enumeration.hpp"
#include "irreg/verification.hpp"
#include "irreg/report_io.hpp"
