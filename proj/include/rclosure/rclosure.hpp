#pragma once

// Umbrella header for the full library. The trace JSON codec lives in
// <rclosure/trace_json.hpp> and is not pulled in here because it depends on
// the vendored nlohmann/json header.

#include <rclosure/coloring.hpp>
#include <rclosure/counterexamples.hpp>
#include <rclosure/encoder.hpp>
#include <rclosure/errors.hpp>
#include <rclosure/instance_gen.hpp>
#include <rclosure/prng.hpp>
#include <rclosure/ramsey.hpp>
#include <rclosure/rational.hpp>
#include <rclosure/sequence.hpp>
#include <rclosure/space.hpp>
