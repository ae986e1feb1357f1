#pragma once

#include "raag/graph.hpp"
#include "raag/embedding.hpp"
#include "raag/classify.hpp"
#include "raag/double.hpp"
#include "raag/certificate.hpp"
#include "raag/constructions.hpp"
#include "raag/decision.hpp"
#include "raag/io.hpp"
