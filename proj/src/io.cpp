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


#include "dwall/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dwall/errors.hpp"

namespace dwall {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string finish(const Json& j) { return j.dump() + "\n"; }

// Runs `body`, reporting anything it throws as a ParseError prefixed by `what`.
template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ParseError(message);
}

const Json& field(const Json& obj, const char* key) {
    require(obj.is_object(), std::string("expected an object holding \"") + key + "\"");
    const auto it = obj.find(key);
    require(it != obj.end(), std::string("missing field \"") + key + "\"");
    return *it;
}

int get_int(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    require(v.is_number_integer(), std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

double get_double(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    require(v.is_number(), std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

const Json& get_array(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    require(v.is_array(), std::string("field \"") + key + "\" must be an array");
    return v;
}

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [a, b] : edges) out.push_back({a, b});
    return out;
}

// Normalised (a < b), sorted and deduplicated; endpoints checked against n.
std::vector<Edge> edges_from_json(const Json& arr, int n, const char* what) {
    std::vector<Edge> edges;
    for (const Json& e : arr) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
                std::string(what) + ": each entry must be [a, b]");
        int a = e[0].get<int>();
        int b = e[1].get<int>();
        require(a != b, std::string(what) + ": self-loop on " + std::to_string(a));
        require(a >= 0 && b >= 0 && a < n && b < n,
                std::string(what) + ": endpoint out of range in [" + std::to_string(a) + ", " + std::to_string(b) + "]");
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

Json model_json(const IsingModel& model) {
    Json j;
    j["n"] = model.num_qubits();
    Json h = Json::array();
    for (int q = 0; q < model.num_qubits(); ++q)
        if (model.fields()[static_cast<std::size_t>(q)] != 0.0) h.push_back({q, model.fields()[static_cast<std::size_t>(q)]});
    j["h"] = std::move(h);
    Json couplers = Json::array();
    for (const auto& [key, value] : model.couplers()) couplers.push_back({key.first, key.second, value});
    j["j"] = std::move(couplers);
    j["offset"] = model.offset();
    return j;
}

EncodingKind kind_from_json(const std::string& text) {
    if (text == "dw") return EncodingKind::DomainWall;
    if (text == "onehot") return EncodingKind::OneHot;
    throw ParseError("unknown variable kind \"" + text + "\"");
}

double matrix_entry(const Json& rows, int i, int j) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    const Json& x = row[static_cast<std::size_t>(j)];
    require(x.is_number(), "matrix entries must be numbers");
    return x.get<double>();
}

}  // namespace

std::string dump_model(const IsingModel& model) {
    Json j = model_json(model);
    j["variables"] = Json::array();
    return finish(j);
}

std::string dump_model(const EncodedProblem& p) {
    Json j = model_json(p.model);
    Json vars = Json::array();
    for (const VariableHandle& v : p.variables) {
        Json jv;
        jv["id"] = v.id;
        jv["kind"] = v.kind == EncodingKind::DomainWall ? "dw" : "onehot";
        jv["m"] = v.m;
        jv["qubits"] = {v.first_qubit, v.end_qubit()};
        jv["lambda"] = v.lambda;
        vars.push_back(std::move(jv));
    }
    j["variables"] = std::move(vars);
    return finish(j);
}

EncodedProblem parse_model(std::string_view text) {
    return guarded("model", [&] {
        const Json j = parse_json(text);
        const int n = get_int(j, "n");
        require(n >= 0, "model: negative qubit count");
        EncodedProblem p;
        p.model = IsingModel(n);

        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (const Json& e : get_array(j, "h")) {
            require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number(),
                    "model: each field must be [i, v]");
            const int q = e[0].get<int>();
            require(q >= 0 && q < n, "model: field index " + std::to_string(q) + " out of range");
            require(!seen[static_cast<std::size_t>(q)], "model: duplicate field on qubit " + std::to_string(q));
            seen[static_cast<std::size_t>(q)] = true;
            p.model.add_field(q, e[1].get<double>());
        }
        std::set<QubitPair> pairs;
        for (const Json& e : get_array(j, "j")) {
            require(e.is_array() && e.size() == 3 && e[0].is_number_integer() && e[1].is_number_integer() &&
                        e[2].is_number(),
                    "model: each coupler must be [i, j, v]");
            const int a = e[0].get<int>();
            const int b = e[1].get<int>();
            require(a >= 0 && b < n && a < b, "model: coupler [" + std::to_string(a) + ", " + std::to_string(b) +
                                                  "] must satisfy 0 <= i < j < n");
            require(pairs.emplace(a, b).second,
                    "model: duplicate coupler [" + std::to_string(a) + ", " + std::to_string(b) + "]");
            p.model.add_coupler(a, b, e[2].get<double>());
        }
        p.model.add_offset(get_double(j, "offset"));

        int next_free = 0;
        for (const Json& jv : get_array(j, "variables")) {
            VariableHandle v;
            v.id = get_int(jv, "id");
            require(v.id == static_cast<int>(p.variables.size()), "model: variable ids must be 0, 1, 2, ...");
            const Json& kind = field(jv, "kind");
            require(kind.is_string(), "model: variable kind must be a string");
            v.kind = kind_from_json(kind.get<std::string>());
            v.m = get_int(jv, "m");
            require(v.m >= 2, "model: variable " + std::to_string(v.id) + " has m < 2");
            const Json& range = get_array(jv, "qubits");
            require(range.size() == 2 && range[0].is_number_integer() && range[1].is_number_integer(),
                    "model: qubits must be [lo, hi]");
            v.first_qubit = range[0].get<int>();
            require(range[1].get<int>() == v.end_qubit(),
                    "model: variable " + std::to_string(v.id) + " qubit range does not match its kind and m");
            require(v.first_qubit >= next_free && v.end_qubit() <= n,
                    "model: variable " + std::to_string(v.id) + " overlaps another or leaves the model");
            next_free = v.end_qubit();
            v.lambda = get_double(jv, "lambda");
            p.variables.push_back(v);
        }
        p.interaction_load.assign(p.variables.size(), 0.0);
        return p;
    });
}

std::string dump_instance(const Instance& inst) {
    Json j;
    if (const auto* c = std::get_if<ColoringInstance>(&inst)) {
        j["type"] = "coloring";
        j["n"] = c->n_vertices;
        j["colors"] = c->n_colors;
        j["edges"] = edges_to_json(c->edges);
    } else if (const auto* s = std::get_if<SchedulingInstance>(&inst)) {
        j["type"] = "scheduling";
        Json events = Json::array();
        for (const Event& e : s->events) events.push_back(Json{{"tmin", e.t_min}, {"tmax", e.t_max}, {"dur", e.duration}});
        j["events"] = std::move(events);
        j["conflicts"] = edges_to_json(s->conflicts);
    } else {
        const auto& u = std::get<UnstructuredInstance>(inst);
        j["type"] = "unstructured";
        j["sizes"] = u.sizes;
        Json pairs = Json::array();
        for (const auto& pair : u.pairs) {
            Json rows = Json::array();
            for (int r = 0; r < pair.a.rows(); ++r) {
                Json row = Json::array();
                for (int c = 0; c < pair.a.cols(); ++c) row.push_back(pair.a(r, c));
                rows.push_back(std::move(row));
            }
            pairs.push_back(Json{{"k", pair.k}, {"l", pair.l}, {"e", std::move(rows)}});
        }
        j["pairs"] = std::move(pairs);
    }
    return finish(j);
}

Instance parse_instance(std::string_view text) {
    return guarded("instance", [&]() -> Instance {
        const Json j = parse_json(text);
        const Json& type = field(j, "type");
        require(type.is_string(), "instance: type must be a string");
        const std::string t = type.get<std::string>();
        if (t == "coloring") {
            ColoringInstance c;
            c.n_vertices = get_int(j, "n");
            c.n_colors = get_int(j, "colors");
            require(c.n_vertices >= 0, "coloring: negative vertex count");
            require(c.n_colors >= 2, "coloring: at least 2 colours required");
            c.edges = edges_from_json(get_array(j, "edges"), c.n_vertices, "coloring edges");
            return c;
        }
        if (t == "scheduling") {
            SchedulingInstance s;
            for (const Json& e : get_array(j, "events")) {
                Event ev;
                ev.t_min = get_int(e, "tmin");
                ev.t_max = get_int(e, "tmax");
                ev.duration = get_int(e, "dur");
                require(ev.t_max >= ev.t_min, "scheduling: event with tmax < tmin");
                require(ev.duration >= 1, "scheduling: event duration must be >= 1");
                s.events.push_back(ev);
            }
            s.conflicts = edges_from_json(get_array(j, "conflicts"), static_cast<int>(s.events.size()),
                                          "scheduling conflicts");
            return s;
        }
        if (t == "unstructured") {
            UnstructuredInstance u;
            for (const Json& m : get_array(j, "sizes")) {
                require(m.is_number_integer() && m.get<int>() >= 2, "unstructured: sizes must be integers >= 2");
                u.sizes.push_back(m.get<int>());
            }
            const int nv = static_cast<int>(u.sizes.size());
            for (const Json& jp : get_array(j, "pairs")) {
                UnstructuredInstance::Pair pair;
                pair.k = get_int(jp, "k");
                pair.l = get_int(jp, "l");
                require(pair.k >= 0 && pair.l < nv && pair.k < pair.l, "unstructured: pair needs 0 <= k < l < #vars");
                const int rows = u.sizes[static_cast<std::size_t>(pair.k)];
                const int cols = u.sizes[static_cast<std::size_t>(pair.l)];
                const Json& e = get_array(jp, "e");
                require(static_cast<int>(e.size()) == rows, "unstructured: table has the wrong number of rows");
                pair.a = ValueMatrix(rows, cols);
                for (int r = 0; r < rows; ++r) {
                    require(e[static_cast<std::size_t>(r)].is_array() &&
                                static_cast<int>(e[static_cast<std::size_t>(r)].size()) == cols,
                            "unstructured: table has the wrong number of columns");
                    for (int c = 0; c < cols; ++c) pair.a(r, c) = matrix_entry(e, r, c);
                }
                u.pairs.push_back(std::move(pair));
            }
            return u;
        }
        throw ParseError("instance: unknown type \"" + t + "\"");
    });
}

EncodedProblem encode_instance(const Instance& inst, EncodingKind kind, Lambda lambda) {
    if (const auto* c = std::get_if<ColoringInstance>(&inst)) return build_coloring(*c, kind, lambda);
    if (const auto* s = std::get_if<SchedulingInstance>(&inst)) return build_scheduling(*s, kind, lambda);
    return build_unstructured(std::get<UnstructuredInstance>(inst), kind, lambda);
}

std::string dump_graph(const HardwareGraph& g) {
    Json j;
    j["family"] = std::string(to_string(g.family()));
    j["L"] = g.size_param();
    j["n"] = g.num_vertices();
    j["edges"] = edges_to_json(g.edges());
    return finish(j);
}

HardwareGraph parse_graph(std::string_view text) {
    return guarded("graph", [&] {
        const Json j = parse_json(text);
        const Json& fam = field(j, "family");
        require(fam.is_string(), "graph: family must be a string");
        const GraphFamily family = parse_family(fam.get<std::string>());
        const int n = get_int(j, "n");
        require(n >= 0, "graph: negative vertex count");
        return HardwareGraph(n, edges_from_json(get_array(j, "edges"), n, "graph edges"), family, get_int(j, "L"));
    });
}

HardwareGraph parse_source_graph(std::string_view text) {
    const Json j = parse_json(text);
    if (j.is_object() && j.contains("family")) return parse_graph(text);
    return interaction_graph(parse_model(text));
}

std::string dump_embedding(const Embedding& e, double ratio, const EmbedParams& params) {
    Json j;
    Json chains = Json::object();
    for (std::size_t u = 0; u < e.chains.size(); ++u) chains[std::to_string(u)] = e.chains[u];
    j["chains"] = std::move(chains);
    j["ratio"] = ratio;
    j["params"] = Json{{"max_tries", params.max_tries},
                       {"seed", params.seed},
                       {"rounds", params.rounds},
                       {"max_no_improvement", params.max_no_improvement},
                       {"tighten_rounds", params.tighten_rounds}};
    return finish(j);
}

Embedding parse_embedding(std::string_view text) {
    return guarded("embedding", [&] {
        const Json j = parse_json(text);
        const Json& chains = field(j, "chains");
        require(chains.is_object(), "embedding: chains must be an object");
        Embedding e;
        e.chains.resize(chains.size());
        std::vector<bool> seen(chains.size(), false);
        for (const auto& [key, value] : chains.items()) {
            std::size_t pos = 0;
            long u = -1;
            try {
                u = std::stol(key, &pos);
            } catch (const std::exception&) {
            }
            require(pos == key.size() && u >= 0 && static_cast<std::size_t>(u) < chains.size(),
                    "embedding: chain keys must be 0..n-1, got \"" + key + "\"");
            require(!seen[static_cast<std::size_t>(u)], "embedding: duplicate chain " + key);
            seen[static_cast<std::size_t>(u)] = true;
            require(value.is_array(), "embedding: chain " + key + " must be an array");
            std::vector<int> chain;
            for (const Json& q : value) {
                require(q.is_number_integer() && q.get<int>() >= 0, "embedding: chain entries must be qubit indices");
                chain.push_back(q.get<int>());
            }
            std::sort(chain.begin(), chain.end());
            e.chains[static_cast<std::size_t>(u)] = std::move(chain);
        }
        return e;
    });
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dwall
