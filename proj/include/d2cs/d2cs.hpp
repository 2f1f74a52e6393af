/*
 * Copyright 2026 The d2cs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "d2cs/big_count.hpp"
#include "d2cs/commands.hpp"
#include "d2cs/enum_all.hpp"
#include "d2cs/error.hpp"
#include "d2cs/formulas.hpp"
#include "d2cs/generators.hpp"
#include "d2cs/graph.hpp"
#include "d2cs/io.hpp"
#include "d2cs/oracle.hpp"
#include "d2cs/reconcile.hpp"
#include "d2cs/schordal.hpp"
#include "d2cs/vertex_set.hpp"
