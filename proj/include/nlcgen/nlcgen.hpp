/* Copyright 2026 The nlcgen Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef NLCGEN_NLCGEN_HPP
#define NLCGEN_NLCGEN_HPP

#include "nlcgen/bitseq.hpp"
#include "nlcgen/complexity.hpp"
#include "nlcgen/gen_debruijn.hpp"
#include "nlcgen/gen_large.hpp"
#include "nlcgen/gen_small.hpp"
#include "nlcgen/op_counter.hpp"
#include "nlcgen/oracle.hpp"
#include "nlcgen/shift_class.hpp"
#include "nlcgen/shift_profile.hpp"
#include "nlcgen/structure.hpp"

#endif  // NLCGEN_NLCGEN_HPP
