#pragma once

#include "topolift/domains.hpp"
#include "topolift/errors.hpp"
#include "topolift/features.hpp"
#include "topolift/io.hpp"
#include "topolift/liftings.hpp"
#include "topolift/operators.hpp"
#include "topolift/queries.hpp"
#include "topolift/registry.hpp"
