// Copyright 2026 The dwall Authors
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


#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "dwall/embedding.hpp"
#include "dwall/encoding.hpp"
#include "dwall/hardware.hpp"
#include "dwall/problems.hpp"

namespace dwall {

/// Text formats shared by the CLI and the tests. Every dump_* output ends with
/// a newline and is a pure function of its input; every parse_* throws
/// ParseError on malformed or inconsistent input.

/// {"n", "h": [[i, v]...], "j": [[i, j, v]...], "offset", "variables": [...]}.
/// Only nonzero fields are listed. Variables are
/// {"id", "kind": "dw"|"onehot", "m", "qubits": [lo, hi], "lambda"} with the
/// half-open qubit range [lo, hi). Doubles are written in shortest
/// round-trip form, so dump(parse(dump(p))) == dump(p).
std::string dump_model(const EncodedProblem& p);
std::string dump_model(const IsingModel& model);
EncodedProblem parse_model(std::string_view text);

using Instance = std::variant<ColoringInstance, SchedulingInstance, UnstructuredInstance>;

/// {"type": "coloring", "n", "colors", "edges"},
/// {"type": "scheduling", "events": [{"tmin", "tmax", "dur"}], "conflicts"} or
/// {"type": "unstructured", "sizes", "pairs": [{"k", "l", "e": rows}]}.
std::string dump_instance(const Instance& inst);
Instance parse_instance(std::string_view text);
EncodedProblem encode_instance(const Instance& inst, EncodingKind kind, Lambda lambda = std::nullopt);

/// {"family", "L", "n", "edges"} with edges sorted.
std::string dump_graph(const HardwareGraph& g);
HardwareGraph parse_graph(std::string_view text);

/// Graph JSON is read as is; model JSON contributes its interaction graph.
HardwareGraph parse_source_graph(std::string_view text);

/// {"chains": {"0": [...], ...}, "ratio", "params": {...}}.
std::string dump_embedding(const Embedding& e, double ratio, const EmbedParams& params);
Embedding parse_embedding(std::string_view text);

std::string read_text_file(const std::string& path);
/// "-" writes to stdout.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace dwall
