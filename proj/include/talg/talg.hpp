#pragma once

#include "talg/bimodule.hpp"
#include "talg/element.hpp"
#include "talg/extensions.hpp"
#include "talg/laurent_matrix.hpp"
#include "talg/monomial.hpp"
#include "talg/omega1.hpp"
#include "talg/rational.hpp"
#include "talg/report.hpp"
#include "talg/sampling.hpp"
#include "talg/seminorms.hpp"
#include "talg/truncated_matrix.hpp"
#include "talg/weights.hpp"
