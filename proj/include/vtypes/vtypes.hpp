#pragma once

#include "vtypes/canonical.hpp"
#include "vtypes/classifier.hpp"
#include "vtypes/constructions.hpp"
#include "vtypes/enumerator.hpp"
#include "vtypes/expected.hpp"
#include "vtypes/fixtures.hpp"
#include "vtypes/graph.hpp"
#include "vtypes/graph6.hpp"
#include "vtypes/primitives.hpp"
#include "vtypes/search.hpp"
#include "vtypes/verifier.hpp"
