// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KMR_GROUNDFIELD_EXPR_H_
#define KMR_GROUNDFIELD_EXPR_H_

#include <string>

#include "kmr/groundfield/rat_func.h"

namespace kmr {

// Parses expressions such as "(t1 + 2*t2)/(t3 - 1)^2". Variables are t1..td,
// integer literals are reduced mod p, and "[c0,c1,...]@m" denotes a ground
// element at level m. ParseError on malformed input.
RatFunc parse_ratfunc(const std::string& text, const Tower& tower, int num_vars);

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_EXPR_H_
