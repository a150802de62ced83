#pragma once

#include <json.hpp>

#include "adjrep/adjoint.hpp"
#include "adjrep/characters.hpp"
#include "adjrep/forests.hpp"
#include "adjrep/partition.hpp"
#include "adjrep/symfunc.hpp"

// JSON encodings. Readers throw std::invalid_argument on malformed input.
//
//   Partition            [3,1,1]
//   SymFunc              {"basis":"schur","terms":[{"partition":[4,2],"coeff":"3/1"}]}
//   ClassFunction        {"n":3,"values":[{"class":[2,1],"value":"0/1"}]}
//   LoopAugmentedForest  {"n":5,"parent":[0,1,1,0,4],"loops":[4]}
//                        (1-indexed, parent 0 = root)
//   PartialTransformation {"n":3,"image":{"1":2}}   (1-indexed)

namespace adjrep {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const ClassFunction& chi);
ClassFunction class_function_from_json(const Json& j);

Json to_json(const LoopAugmentedForest& forest);
LoopAugmentedForest forest_from_json(const Json& j);

Json to_json(const PartialTransformation& f);
PartialTransformation partial_transformation_from_json(const Json& j);

/// {"n":4,"kind":"mat","formula":...,"orbit":...,"bruteforce":...,
///  "match":true,"millis":0.4}
Json to_json(const VerifyRecord& record);
VerifyRecord verify_record_from_json(const Json& j);

/// {"records":[...],"additivity":[{"n":2,"holds":true}],"all_match":bool}
Json to_json(const VerifyReport& report);

} // namespace adjrep
