// Copyright 2026 The panobench authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "panobench/analysis.hpp"
#include "panobench/correlation.hpp"
#include "panobench/dataset.hpp"
#include "panobench/distortion.hpp"
#include "panobench/errors.hpp"
#include "panobench/experiment.hpp"
#include "panobench/features.hpp"
#include "panobench/fixtures.hpp"
#include "panobench/geometry.hpp"
#include "panobench/image.hpp"
#include "panobench/image_io.hpp"
#include "panobench/manifest.hpp"
#include "panobench/parallel.hpp"
#include "panobench/procedural.hpp"
#include "panobench/report.hpp"
#include "panobench/rng.hpp"
#include "panobench/scorers.hpp"
#include "panobench/synth.hpp"
#include "panobench/viewport_gen.hpp"
