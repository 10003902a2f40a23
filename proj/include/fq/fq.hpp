#pragma once

#include "fq/audio.hpp"
#include "fq/errors.hpp"
#include "fq/export.hpp"
#include "fq/pitch.hpp"
#include "fq/quantizer.hpp"
#include "fq/reference.hpp"
#include "fq/scale.hpp"
