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


#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "dwall/embedding.hpp"
#include "dwall/errors.hpp"
#include "dwall/experiment.hpp"
#include "dwall/io.hpp"
#include "dwall/mixers.hpp"
#include "dwall/verify.hpp"

using namespace dwall;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;

std::vector<EncodingKind> encodings_from(const std::string& text) {
    if (text == "both") return {EncodingKind::DomainWall, EncodingKind::OneHot};
    return {parse_encoding(text)};
}

std::vector<GraphFamily> targets_from(const std::string& text) {
    if (text == "both") return {GraphFamily::Chimera, GraphFamily::Pegasus};
    const GraphFamily f = parse_family(text);
    if (f == GraphFamily::Arbitrary) throw ParseError("target must be chimera, pegasus or both");
    return {f};
}

std::string solve_report(const EncodedProblem& p, const GroundSet& g) {
    nlohmann::ordered_json j;
    j["energy"] = g.energy;
    j["degeneracy"] = g.degeneracy;
    j["gap"] = g.spectrum_gap;
    j["truncated"] = g.truncated;
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (const auto& s : g.states) {
        nlohmann::ordered_json st;
        st["bits"] = bits_of(s);
        if (!p.variables.empty()) {
            const auto values = decode_all(p, s);
            st["values"] = values ? nlohmann::ordered_json(*values) : nlohmann::ordered_json(nullptr);
        }
        states.push_back(std::move(st));
    }
    j["states"] = std::move(states);
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domain-wall and one-hot Ising encodings, exact checks and embedding experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "dwall 1.0.0");

    std::string out_path = "-";

    auto* gen = app.add_subcommand("gen-instance", "Generate a random problem instance as JSON");
    std::string gen_family = "scheduling";
    int gen_size = 4;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family, "three-color, n-color or scheduling")->capture_default_str();
    gen->add_option("--size", gen_size, "Vertices (three-color), colours (n-color) or events")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "Instance seed")->capture_default_str();
    gen->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* enc = app.add_subcommand("encode", "Encode an instance into an Ising model");
    std::string enc_input;
    std::string enc_kind = "dw";
    std::optional<double> enc_lambda;
    enc->add_option("instance", enc_input, "Instance JSON")->required();
    enc->add_option("--encoding", enc_kind, "dw or onehot")->capture_default_str();
    enc->add_option("--lambda", enc_lambda, "Core strength for every variable (default: per-variable recommendation)");
    enc->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* solve = app.add_subcommand("solve-exact", "Exhaustive ground-state search of a model");
    std::string solve_input;
    std::size_t solve_max_states = 64;
    solve->add_option("model", solve_input, "Model JSON")->required();
    solve->add_option("--max-states", solve_max_states, "Ground states to list")->capture_default_str();
    solve->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* verify = app.add_subcommand("verify", "Property checks");
    verify->require_subcommand(1);
    auto* verify_mixer = verify->add_subcommand("mixer", "Subspace preservation of the domain-wall mixer");
    int mixer_m = 4;
    verify_mixer->add_option("--m", mixer_m, "Variable size")->required()->check(CLI::Range(2, kMaxMixerCheckM));
    verify_mixer->add_option("-o,--output", out_path, "Output file, - for stdout");
    auto* verify_all_cmd = verify->add_subcommand("all", "Run every module's property suite");
    std::string mutation = "none";
    std::uint64_t verify_seed = 1;
    verify_all_cmd->add_option("--mutate", mutation, "none, onehot-core or mixer-sign")->capture_default_str();
    verify_all_cmd->add_option("--seed", verify_seed, "Seed of the randomised properties")->capture_default_str();
    verify_all_cmd->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* hw = app.add_subcommand("hwgraph", "Write a hardware graph as JSON");
    std::string hw_family;
    int hw_L = 0;
    hw->add_option("family", hw_family, "chimera or pegasus")->required()->check(CLI::IsMember({"chimera", "pegasus"}));
    hw->add_option("--L", hw_L, "Size parameter")->required()->check(CLI::PositiveNumber);
    hw->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* emb = app.add_subcommand("embed", "Minor-embed a model or graph into a target graph");
    std::string emb_source;
    std::string emb_target;
    EmbedParams emb_params;
    emb->add_option("source", emb_source, "Model JSON or graph JSON")->required();
    emb->add_option("target", emb_target, "Graph JSON")->required();
    emb->add_option("--tries", emb_params.max_tries, "Randomised tries")->check(CLI::PositiveNumber)->capture_default_str();
    emb->add_option("--seed", emb_params.seed, "Seed")->capture_default_str();
    emb->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* exp = app.add_subcommand("experiment", "Minimum hardware size sweep, one CSV row per observation");
    ExperimentSpec spec;
    std::string exp_family = "scheduling";
    std::string exp_encoding = "both";
    std::string exp_target = "both";
    exp->add_option("--family", exp_family, "three-color, n-color or scheduling")->capture_default_str();
    exp->add_option("--sizes", spec.sizes, "Problem sizes, comma separated")->required()->delimiter(',');
    exp->add_option("--instances", spec.instances, "Instances per size")->check(CLI::PositiveNumber)->capture_default_str();
    exp->add_option("--encoding", exp_encoding, "dw, onehot or both")->capture_default_str();
    exp->add_option("--target", exp_target, "chimera, pegasus or both")->capture_default_str();
    exp->add_option("--seed", spec.master_seed, "Master seed")->capture_default_str();
    exp->add_option("--tries", spec.tries, "Embedding tries per size")->check(CLI::PositiveNumber)->capture_default_str();
    exp->add_option("--ceiling", spec.ceiling, "Largest hardware size attempted")->capture_default_str();
    exp->add_option("-o,--output", out_path, "Output file, - for stdout");

    auto* sum = app.add_subcommand("summarize", "Per (size, encoding, target) min/max/mean of an experiment CSV");
    std::string sum_input;
    sum->add_option("csv", sum_input, "Experiment CSV")->required();
    sum->add_option("-o,--output", out_path, "Output file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*gen) {
            const Instance inst = generate_instance(parse_problem_family(gen_family), gen_size, gen_seed);
            write_text_file(out_path, dump_instance(inst));
        } else if (*enc) {
            const Instance inst = parse_instance(read_text_file(enc_input));
            const EncodedProblem p = encode_instance(inst, parse_encoding(enc_kind), enc_lambda);
            for (const auto& w : lambda_warnings(p)) std::cerr << "warning: " << w << '\n';
            write_text_file(out_path, dump_model(p));
        } else if (*solve) {
            const EncodedProblem p = parse_model(read_text_file(solve_input));
            BruteForceOptions options;
            options.max_states = solve_max_states;
            write_text_file(out_path, solve_report(p, brute_force(p.model, options)));
        } else if (*verify_mixer) {
            const SubspaceReport r = check_subspace_preservation(mixer_m);
            write_text_file(out_path, std::string(r.passed() ? "PASS " : "FAIL ") + r.summary() + "\n" +
                                          r.valid_block_csv());
            return r.passed() ? kOk : kPropertyFailure;
        } else if (*verify_all_cmd) {
            const VerifyReport r = verify_all(parse_mutation(mutation), verify_seed);
            write_text_file(out_path, r.to_text());
            return r.passed() ? kOk : kPropertyFailure;
        } else if (*hw) {
            write_text_file(out_path, dump_graph(make_target(parse_family(hw_family), hw_L)));
        } else if (*emb) {
            const HardwareGraph source = parse_source_graph(read_text_file(emb_source));
            const HardwareGraph target = parse_graph(read_text_file(emb_target));
            const auto e = find_embedding(source, target, emb_params);
            if (!e) {
                std::cerr << "no embedding found in " << emb_params.max_tries << " tries\n";
                return kPropertyFailure;
            }
            write_text_file(out_path, dump_embedding(*e, embedding_ratio(*e, source, target), emb_params));
        } else if (*exp) {
            spec.family = parse_problem_family(exp_family);
            spec.encodings = encodings_from(exp_encoding);
            spec.targets = targets_from(exp_target);
            write_text_file(out_path, to_csv(run_experiment(spec)));
        } else if (*sum) {
            write_text_file(out_path, summary_csv(summarize(parse_results(read_text_file(sum_input)))));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kOk;
}
