#pragma once

#include "piqec/amp_damping.hpp"
#include "piqec/identities.hpp"
#include "piqec/json_io.hpp"
#include "piqec/kl.hpp"
#include "piqec/oracle.hpp"
#include "piqec/picode.hpp"
#include "piqec/pr_system.hpp"
#include "piqec/radical.hpp"
#include "piqec/radical_sum.hpp"
#include "piqec/rational.hpp"
