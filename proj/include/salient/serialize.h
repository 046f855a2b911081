// Copyright 2026 The salientpref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON encodings of specs and reports. Non-finite reals are written as
// strings ("inf", "-inf", "nan") so reports stay valid JSON and round-trip.

#ifndef SALIENT_SERIALIZE_H_
#define SALIENT_SERIALIZE_H_

#include <string>

#include "json.hpp"
#include "salient/diagnostics.h"
#include "salient/estimator.h"
#include "salient/features.h"
#include "salient/selection.h"
#include "salient/theory.h"

namespace salient {

using Json = nlohmann::ordered_json;

Json RealToJson(double x);
double RealFromJson(const Json& j);
Json VectorToJson(const Vector& v);
Vector VectorFromJson(const Json& j);

// {"kind": "full" | "top_t" | "random_exactly_k" | "random_bernoulli",
//  "t" | "k" | "p": ..., "seed": ...}. Throws ParseError on a bad object.
Json SelectionToJson(const SelectionSpec& spec);
SelectionSpec SelectionFromJson(const Json& j);
SelectionSpec ParseSelection(const std::string& text);

Json FitResultToJson(const FitResult& r);
FitResult FitResultFromJson(const Json& j);

Json TheoryToJson(const TheoryReport& r);
TheoryReport TheoryFromJson(const Json& j);
Json Corollary1ToJson(const Corollary1Report& r);
Json Corollary2ToJson(const Corollary2Report& r);
Json Corollary3ToJson(const Corollary3Report& r);
Json GuaranteeToJson(const GuaranteeCheck& r);

Json TransitivityToJson(const TransitivityReport& r,
                        const std::vector<std::string>& item_ids);
Json InconsistencyToJson(const InconsistencyResult& r);

// Two-space indented dump followed by a newline.
std::string Dump(const Json& j);
void SaveJson(const std::string& path, const Json& j);
Json LoadJson(const std::string& path);

}  // namespace salient

#endif  // SALIENT_SERIALIZE_H_
