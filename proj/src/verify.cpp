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


#include "dwall/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "dwall/embedding.hpp"
#include "dwall/errors.hpp"
#include "dwall/experiment.hpp"
#include "dwall/hardware.hpp"
#include "dwall/mixers.hpp"
#include "dwall/problems.hpp"
#include "dwall/rng.hpp"

namespace dwall {

namespace {

using Check = std::function<bool(std::string&)>;

IsingModel random_model(SplitMix64& rng, int n) {
    IsingModel m(n);
    for (int q = 0; q < n; ++q) m.add_field(q, static_cast<double>(rng.uniform_int(-3, 3)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.uniform() < 0.4) m.add_coupler(a, b, static_cast<double>(rng.uniform_int(-3, 3)) * 0.5);
    m.add_offset(rng.uniform() - 0.5);
    return m;
}

bool same_ground(const GroundSet& a, const GroundSet& b) {
    return std::abs(a.energy - b.energy) <= kEnergyTolerance && a.indices == b.indices &&
           a.degeneracy == b.degeneracy && std::abs(a.spectrum_gap - b.spectrum_gap) <= kEnergyTolerance;
}

// Ground states of a standalone core decode to exactly the values 0..m-1.
bool core_manifold(EncodingKind kind, int m, Mutation mutation, std::string& detail) {
    EncodedProblem p;
    const VariableHandle v = add_variable(p, kind, m, 1.0);
    if (kind == EncodingKind::OneHot && mutation == Mutation::OneHotCoreCoefficient)
        for (int q = v.first_qubit; q < v.end_qubit(); ++q) p.model.add_field(q, -v.lambda);
    const GroundSet g = brute_force(p.model);
    std::set<int> values;
    for (const auto& s : g.states) {
        const auto value = decode(v, s);
        if (!value) {
            detail = "m=" + std::to_string(m) + ": invalid ground state " + bits_of(s);
            return false;
        }
        values.insert(*value);
    }
    if (g.degeneracy != static_cast<std::uint64_t>(m) || static_cast<int>(values.size()) != m) {
        detail = "m=" + std::to_string(m) + ": " + std::to_string(g.degeneracy) + " ground states";
        return false;
    }
    const bool has_invalid_states = g.degeneracy < (std::uint64_t{1} << p.model.num_qubits());
    if (has_invalid_states && !(g.spectrum_gap > kEnergyTolerance)) {
        detail = "m=" + std::to_string(m) + ": no gap above the manifold";
        return false;
    }
    return true;
}

PauliOperatorSum sign_flipped_mixer(int m) {
    const int n = m - 1;
    PauliOperatorSum op;
    op.n_qubits = n;
    for (int i = 0; i < n; ++i) {
        for (int side : {-1, +1}) {
            PauliTerm t;
            t.coefficient = 1.0;
            t.factors[i] = Pauli::X;
            const int j = i + side;
            if (j < 0)
                t.coefficient = -1.0;
            else if (j < n)
                t.factors[j] = Pauli::Z;
            op.add(t);
        }
    }
    return op;
}

std::vector<std::vector<int>> decoded_ground(const Instance& inst, const EncodedProblem& p, const GroundSet& g,
                                             std::string& detail) {
    std::vector<std::vector<int>> out;
    for (const auto& s : g.states) {
        std::optional<std::vector<int>> x;
        if (const auto* sched = std::get_if<SchedulingInstance>(&inst))
            x = decode_schedule(*sched, p, s);
        else
            x = decode_all(p, s);
        if (!x) {
            detail = "invalid ground state " + bits_of(s);
            return {};
        }
        out.push_back(std::move(*x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ColoringInstance small_coloring(SplitMix64& rng) {
    ColoringInstance c;
    c.n_vertices = static_cast<int>(rng.uniform_int(2, 4));
    c.n_colors = 3;
    c.edges = gen_erdos_renyi(c.n_vertices, 0.6, rng.next());
    return c;
}

SchedulingInstance small_schedule(SplitMix64& rng) {
    SchedulingInstance s;
    const int n = static_cast<int>(rng.uniform_int(2, 3));
    for (int i = 0; i < n; ++i) {
        Event e;
        e.t_min = static_cast<int>(rng.uniform_int(0, 3));
        e.t_max = e.t_min + static_cast<int>(rng.uniform_int(1, 3));
        e.duration = static_cast<int>(rng.uniform_int(1, 3));
        s.events.push_back(e);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < 0.75) s.conflicts.emplace_back(i, j);
    return s;
}

}  // namespace

Mutation parse_mutation(std::string_view text) {
    if (text == "none") return Mutation::None;
    if (text == "onehot-core") return Mutation::OneHotCoreCoefficient;
    if (text == "mixer-sign") return Mutation::MixerSignFlip;
    throw ParseError("unknown mutation '" + std::string(text) + "'");
}

bool VerifyReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name;
        if (!r.detail.empty()) out << " [" << r.detail << "]";
        out << '\n';
    }
    return out.str();
}

bool optima_agree(const Instance& inst, EncodingKind kind, std::string& detail) {
    const EncodedProblem p = encode_instance(inst, kind);
    const GroundSet g = brute_force(p.model);
    if (g.truncated) {
        detail = "ground set truncated";
        return false;
    }
    const auto decoded = decoded_ground(inst, p, g, detail);
    if (decoded.empty()) return false;
    ClassicalOptimum opt = std::visit([](const auto& x) { return classical_optimum(x); }, inst);
    std::sort(opt.argmin.begin(), opt.argmin.end());
    if (decoded != opt.argmin) {
        detail = std::to_string(decoded.size()) + " encoded optima vs " + std::to_string(opt.argmin.size()) +
                 " classical optima";
        return false;
    }
    return true;
}

VerifyReport verify_all(Mutation mutation, std::uint64_t seed) {
    VerifyReport report;
    const auto run = [&](const char* module, const char* name, const Check& check) {
        PropertyResult r{module, name, false, {}};
        try {
            r.passed = check(r.detail);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        report.results.push_back(std::move(r));
    };

    run("ising", "parallel brute force matches serial reference", [&](std::string& detail) {
        SplitMix64 rng(derive_seed(seed, 1, 0));
        for (int t = 0; t < 20; ++t) {
            const IsingModel m = random_model(rng, 1 + t % 12);
            if (!same_ground(brute_force(m), serial::brute_force(m))) {
                detail = "model " + std::to_string(t);
                return false;
            }
        }
        return true;
    });
    run("ising", "merge adds energies", [&](std::string& detail) {
        SplitMix64 rng(derive_seed(seed, 1, 1));
        for (int t = 0; t < 20; ++t) {
            const IsingModel a = random_model(rng, 6);
            const IsingModel b = random_model(rng, 4);
            std::vector<int> map{0, 2, 4, 6};
            const IsingModel c = merge(a, b, map);
            const SpinAssignment s = spins_from_index(rng.next() & 0x7f, 7);
            SpinAssignment sa(s.begin(), s.begin() + 6);
            SpinAssignment sb{s[0], s[2], s[4], s[6]};
            if (std::abs(energy(c, s) - energy(a, sa) - energy(b, sb)) > kEnergyTolerance) {
                detail = "case " + std::to_string(t);
                return false;
            }
        }
        return true;
    });
    run("ising", "model JSON round trip", [&](std::string& detail) {
        SplitMix64 rng(derive_seed(seed, 1, 2));
        for (int t = 0; t < 10; ++t) {
            EncodedProblem p;
            add_domain_wall_variable(p, 3 + t % 3, 1.0 + rng.uniform());
            add_one_hot_variable(p, 2 + t % 4, 1.0 + rng.uniform());
            const int n = p.model.num_qubits();
            for (int q = 0; q < n; ++q) p.model.add_field(q, rng.uniform() - 0.5);
            for (int q = 1; q < n; ++q) p.model.add_coupler(q - 1, q, rng.uniform() * 1e-3);
            p.model.add_offset(1.0 / 3.0);
            const std::string text = dump_model(p);
            const EncodedProblem back = parse_model(text);
            if (!(back.model == p.model) || back.variables != p.variables || dump_model(back) != text) {
                detail = "case " + std::to_string(t);
                return false;
            }
        }
        return true;
    });

    run("encoding", "domain-wall core has exactly m ground states", [&](std::string& detail) {
        for (int m = 2; m <= 8; ++m)
            if (!core_manifold(EncodingKind::DomainWall, m, mutation, detail)) return false;
        return true;
    });
    run("encoding", "one-hot core has exactly m ground states", [&](std::string& detail) {
        for (int m = 2; m <= 8; ++m)
            if (!core_manifold(EncodingKind::OneHot, m, mutation, detail)) return false;
        return true;
    });
    run("encoding", "interaction terms reproduce the value table", [&](std::string& detail) {
        SplitMix64 rng(derive_seed(seed, 2, 0));
        for (int t = 0; t < 50; ++t) {
            const EncodingKind kind = t % 2 ? EncodingKind::OneHot : EncodingKind::DomainWall;
            EncodedProblem p;
            const int mk = static_cast<int>(rng.uniform_int(2, 5));
            const int ml = static_cast<int>(rng.uniform_int(2, 5));
            const VariableHandle vk = add_variable(p, kind, mk, 1.0);
            const VariableHandle vl = add_variable(p, kind, ml, 1.0);
            ValueMatrix e(mk, ml);
            for (int i = 0; i < mk; ++i)
                for (int j = 0; j < ml; ++j) e(i, j) = 4.0 * rng.uniform() - 2.0;
            const IsingModel terms = interaction_terms(vk, vl, e);
            for (int i = 0; i < mk; ++i)
                for (int j = 0; j < ml; ++j) {
                    const std::vector<int> values{i, j};
                    const double got = energy(terms, encode_values(p, values));
                    if (std::abs(got - e(i, j)) > kEnergyTolerance) {
                        detail = "case " + std::to_string(t) + " entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
                        return false;
                    }
                }
        }
        return true;
    });
    run("encoding", "order constraint ground states are increasing pairs", [&](std::string& detail) {
        const EncodedProblem p = build_k_hot_ensemble(2, 4, 1.0, 1.0);
        const GroundSet g = brute_force(p.model);
        std::set<std::vector<int>> seen;
        for (const auto& s : g.states) {
            const auto x = decode_all(p, s);
            if (!x || (*x)[0] >= (*x)[1]) {
                detail = "bad ground state " + bits_of(s);
                return false;
            }
            seen.insert(*x);
        }
        if (g.degeneracy != 6 || seen.size() != 6) {
            detail = std::to_string(g.degeneracy) + " ground states";
            return false;
        }
        return true;
    });

    run("problems", "encoded optima equal classical optima", [&](std::string& detail) {
        SplitMix64 rng(derive_seed(seed, 3, 0));
        for (int t = 0; t < 10; ++t) {
            Instance inst;
            switch (t % 3) {
                case 0:
                    inst = small_coloring(rng);
                    break;
                case 1:
                    inst = small_schedule(rng);
                    break;
                default: {
                    const std::vector<int> sizes{2 + t % 3, 3, 2};
                    inst = gen_unstructured(sizes, -1.0, 1.0, rng.next());
                }
            }
            for (EncodingKind kind : {EncodingKind::DomainWall, EncodingKind::OneHot})
                if (!optima_agree(inst, kind, detail)) {
                    detail = "case " + std::to_string(t) + " (" + std::string(to_string(kind)) + "): " + detail;
                    return false;
                }
        }
        return true;
    });
    run("problems", "instance JSON round trip", [&](std::string& detail) {
        for (ProblemFamily f : {ProblemFamily::ThreeColor, ProblemFamily::NColor, ProblemFamily::Scheduling}) {
            const Instance inst = generate_instance(f, 4, derive_seed(seed, 3, 1));
            const std::string text = dump_instance(inst);
            if (dump_instance(parse_instance(text)) != text) {
                detail = std::string(to_string(f));
                return false;
            }
        }
        return true;
    });

    run("mixers", "mixer conserves the domain-wall number", [&](std::string& detail) {
        for (int m = 2; m <= kMaxMixerCheckM; ++m) {
            VariableHandle v;
            v.m = m;
            const SubspaceReport r = mutation == Mutation::MixerSignFlip
                                         ? check_subspace_preservation(v, sign_flipped_mixer(m))
                                         : check_subspace_preservation(v);
            if (!r.passed()) {
                detail = "m=" + std::to_string(m);
                std::istringstream lines(r.summary());
                for (std::string line; std::getline(lines, line);)
                    if (line.rfind("FAIL ", 0) == 0 && line != "OVERALL FAIL") detail += "; " + line.substr(5);
                return false;
            }
        }
        return true;
    });

    run("hardware", "chimera vertex and edge counts", [&](std::string& detail) {
        for (int L = 1; L <= 8; ++L) {
            const HardwareGraph g = chimera(L);
            if (g.num_vertices() != 8 * L * L ||
                g.num_edges() != static_cast<std::size_t>(16 * L * L + 8 * L * (L - 1)) || g.max_degree() > 6) {
                detail = "L=" + std::to_string(L);
                return false;
            }
        }
        return true;
    });
    run("hardware", "pegasus vertex count and degree bound", [&](std::string& detail) {
        for (int L = 2; L <= 8; ++L) {
            const HardwareGraph g = pegasus(L);
            if (g.num_vertices() != 8 * (L - 1) * (3 * L - 1) || g.max_degree() > 15) {
                detail = "L=" + std::to_string(L);
                return false;
            }
        }
        return true;
    });
    run("hardware", "graph JSON round trip", [&](std::string& detail) {
        for (const HardwareGraph& g : {chimera(2), pegasus(3)}) {
            const std::string text = dump_graph(g);
            if (!(parse_graph(text) == g) || dump_graph(parse_graph(text)) != text) {
                detail = std::string(to_string(g.family()));
                return false;
            }
        }
        return true;
    });

    run("embedding", "returned embeddings are valid and reproducible", [&](std::string& detail) {
        SplitMix64 rng(derive_seed(seed, 4, 0));
        const HardwareGraph target = chimera(4);
        for (int t = 0; t < 6; ++t) {
            const int n = static_cast<int>(rng.uniform_int(4, 10));
            const HardwareGraph source(n, gen_erdos_renyi(n, 0.5, rng.next()));
            EmbedParams params;
            params.seed = rng.next();
            const auto e = find_embedding(source, target, params);
            if (!e) continue;
            const EmbeddingCheck c = validate(*e, source, target);
            if (!c.valid) {
                detail = "case " + std::to_string(t) + ": " + c.violations.front();
                return false;
            }
            if (find_embedding(source, target, params) != e) {
                detail = "case " + std::to_string(t) + ": second run differs";
                return false;
            }
        }
        return true;
    });
    run("embedding", "K4 fits a single chimera cell", [&](std::string& detail) {
        const SizeSearchResult r = min_embeddable_size(complete_graph(4), GraphFamily::Chimera);
        if (r.L != 1) {
            detail = r.L ? "L=" + std::to_string(*r.L) : "no embedding";
            return false;
        }
        return true;
    });

    run("cli", "experiment CSV round trip and order-free summary", [&](std::string& detail) {
        ExperimentSpec spec;
        spec.family = ProblemFamily::ThreeColor;
        spec.sizes = {3, 4};
        spec.instances = 2;
        spec.targets = {GraphFamily::Chimera};
        spec.master_seed = seed;
        spec.tries = 2;
        const auto rows = run_experiment(spec);
        const std::string csv = to_csv(rows);
        if (parse_results(csv) != rows) {
            detail = "CSV round trip";
            return false;
        }
        if (run_experiment(spec) != rows) {
            detail = "rerun differs";
            return false;
        }
        auto reversed = rows;
        std::reverse(reversed.begin(), reversed.end());
        if (summary_csv(summarize(reversed)) != summary_csv(summarize(rows))) {
            detail = "summary depends on row order";
            return false;
        }
        return true;
    });
    return report;
}

}  // namespace dwall
