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

#ifndef KMR_KMILNOR_JSON_IO_H_
#define KMR_KMILNOR_JSON_IO_H_

#include "kmr/groundfield/json_io.h"
#include "kmr/kmilnor/certificate.h"

namespace kmr {

Json to_json(const Symbol& s);
Json to_json(const FormalSymbol& s);
Json to_json(const ParshinChain& c);
Json to_json(const Certificate& c);

Symbol symbol_from_json(const Json& j, const Tower& t, int num_vars);
ParshinChain chain_from_json(const Json& j, const Tower& t, int num_vars);
Certificate certificate_from_json(const Json& j, const Tower& t, int num_vars);

}  // namespace kmr

#endif  // KMR_KMILNOR_JSON_IO_H_
