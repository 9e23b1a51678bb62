#pragma once

#include "janowski/bounds.hpp"
#include "janowski/errors.hpp"
#include "janowski/harness.hpp"
#include "janowski/inversion.hpp"
#include "janowski/params.hpp"
#include "janowski/rational.hpp"
#include "janowski/schwarz.hpp"
#include "janowski/serialize.hpp"
#include "janowski/series.hpp"
#include "janowski/starlike.hpp"
