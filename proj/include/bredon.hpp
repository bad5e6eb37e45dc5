#pragma once

#include "bredon/bredon.hpp"
#include "bredon/error.hpp"
#include "bredon/finite_oracle.hpp"
#include "bredon/fox_calculus.hpp"
#include "bredon/free_group.hpp"
#include "bredon/hempel.hpp"
#include "bredon/int_linalg.hpp"
#include "bredon/json.hpp"
#include "bredon/presentation.hpp"
