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


#include "dwall/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include <omp.h>

#include "dwall/errors.hpp"
#include "dwall/hardware.hpp"
#include "dwall/problems.hpp"
#include "dwall/rng.hpp"

namespace dwall {

namespace {

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string csv_safe(std::string text) {
    std::replace_if(text.begin(), text.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; }, ';');
    return text;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

Stat stat_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    Stat s;
    s.min = values.front();
    s.max = values.back();
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    return s;
}

void append_stat(std::ostringstream& out, const std::optional<Stat>& s) {
    if (s)
        out << ',' << format_double(s->min) << ',' << format_double(s->max) << ',' << format_double(s->mean);
    else
        out << ",,,";
}

}  // namespace

std::string_view to_string(ProblemFamily family) {
    switch (family) {
        case ProblemFamily::ThreeColor:
            return "three-color";
        case ProblemFamily::NColor:
            return "n-color";
        case ProblemFamily::Scheduling:
            return "scheduling";
    }
    return "unknown";
}

ProblemFamily parse_problem_family(std::string_view text) {
    if (text == "three-color") return ProblemFamily::ThreeColor;
    if (text == "n-color") return ProblemFamily::NColor;
    if (text == "scheduling") return ProblemFamily::Scheduling;
    throw ParseError("unknown problem family '" + std::string(text) + "'");
}

Instance generate_instance(ProblemFamily family, int size, std::uint64_t seed) {
    switch (family) {
        case ProblemFamily::ThreeColor: {
            if (size < 1) throw DomainError("three-color: size must be >= 1");
            ColoringInstance c;
            c.n_vertices = size;
            c.n_colors = 3;
            c.edges = gen_erdos_renyi(size, 0.5, seed);
            return c;
        }
        case ProblemFamily::NColor: {
            if (size < 2) throw DomainError("n-color: size must be >= 2");
            ColoringInstance c;
            c.n_vertices = 2 * size;
            c.n_colors = size;
            c.edges = gen_erdos_renyi(2 * size, 0.75, seed);
            return c;
        }
        case ProblemFamily::Scheduling:
            if (size < 2) throw DomainError("scheduling: size must be >= 2");
            return gen_scheduling(size, seed);
    }
    throw DomainError("generate_instance: unknown family");
}

void ExperimentSpec::validate() const {
    if (sizes.empty()) throw DomainError("experiment: no sizes given");
    if (encodings.empty()) throw DomainError("experiment: no encodings given");
    if (targets.empty()) throw DomainError("experiment: no targets given");
    if (instances < 1) throw DomainError("experiment: instances must be >= 1");
    if (tries < 1) throw DomainError("experiment: tries must be >= 1");
    const int min_size = family == ProblemFamily::ThreeColor ? 1 : 2;
    for (int s : sizes)
        if (s < min_size)
            throw DomainError("experiment: size " + std::to_string(s) + " too small for " +
                              std::string(to_string(family)));
    for (GraphFamily t : targets) {
        if (t == GraphFamily::Arbitrary) throw DomainError("experiment: target must be chimera or pegasus");
        if (ceiling < family_min_size(t))
            throw DomainError("experiment: ceiling below the smallest " + std::string(to_string(t)) + " graph");
    }
}

std::uint64_t instance_seed(std::uint64_t master_seed, int size, int instance_index) {
    return derive_seed(master_seed, static_cast<std::uint64_t>(size), static_cast<std::uint64_t>(instance_index));
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<int> sizes = spec.sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    const auto n_sizes = static_cast<int>(sizes.size());
    const auto n_enc = static_cast<int>(spec.encodings.size());
    const auto n_tgt = static_cast<int>(spec.targets.size());
    const int n_chains = spec.instances * n_enc * n_tgt;

    // rows[((s * instances + i) * n_enc + e) * n_tgt + t]
    std::vector<ResultRow> rows(static_cast<std::size_t>(n_sizes * n_chains));

#pragma omp parallel for schedule(dynamic, 1)
    for (int chain = 0; chain < n_chains; ++chain) {
        const int t = chain % n_tgt;
        const int e = (chain / n_tgt) % n_enc;
        const int i = chain / (n_tgt * n_enc);
        int warm = 0;
        for (int s = 0; s < n_sizes; ++s) {
            ResultRow& row = rows[static_cast<std::size_t>(s * n_chains + chain)];
            row.problem_type = std::string(to_string(spec.family));
            row.size_param = sizes[static_cast<std::size_t>(s)];
            row.instance_index = i;
            row.instance_seed = instance_seed(spec.master_seed, row.size_param, i);
            row.encoding = spec.encodings[static_cast<std::size_t>(e)];
            row.target_family = spec.targets[static_cast<std::size_t>(t)];
            row.tries = spec.tries;
            try {
                const Instance inst = generate_instance(spec.family, row.size_param, row.instance_seed);
                const EncodedProblem p = encode_instance(inst, row.encoding);
                const HardwareGraph source = interaction_graph(p);
                row.logical_qubits = source.num_vertices();
                row.couplers = static_cast<int>(p.model.num_couplers());

                EmbedParams params;
                params.max_tries = spec.tries;
                params.seed = row.instance_seed;
                SizeSearchOptions options;
                options.warm_start = warm;
                options.ceiling = spec.ceiling;
                const SizeSearchResult r = min_embeddable_size(source, row.target_family, params, options);
                if (r.L) {
                    row.min_L = r.L;
                    row.physical_qubits = static_cast<int>(r.embedding.total_size());
                    row.embedding_ratio = embedding_ratio(r.embedding, source, r.target);
                    row.status = "ok";
                    warm = *r.L;
                } else {
                    row.status = "ceiling";
                    warm = spec.ceiling;
                }
            } catch (const std::exception& ex) {
                row.status = csv_safe(std::string("error: ") + ex.what());
            }
        }
    }
    return rows;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << kResultHeader << '\n';
    for (const ResultRow& r : rows) {
        out << r.problem_type << ',' << r.size_param << ',' << r.instance_index << ',' << r.instance_seed << ','
            << to_string(r.encoding) << ',' << to_string(r.target_family) << ',';
        if (r.min_L) out << *r.min_L;
        out << ',' << r.logical_qubits << ',';
        if (r.physical_qubits) out << *r.physical_qubits;
        out << ',';
        if (r.embedding_ratio) out << format_double(*r.embedding_ratio);
        out << ',' << r.couplers << ',' << r.tries << ',' << csv_safe(r.status) << '\n';
    }
    return out.str();
}

std::vector<ResultRow> parse_results(std::string_view csv) {
    std::vector<ResultRow> rows;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t start = 0;
    while (start < csv.size()) {
        std::size_t end = csv.find('\n', start);
        if (end == std::string_view::npos) end = csv.size();
        std::string_view line = csv.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!have_header) {
            if (line != kResultHeader) throw ParseError(where + "expected header '" + std::string(kResultHeader) + "'");
            have_header = true;
            continue;
        }
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 13)
            throw ParseError(where + "expected 13 fields, found " + std::to_string(f.size()));
        ResultRow r;
        r.problem_type = std::string(f[0]);
        if (r.problem_type.empty()) throw ParseError(where + "empty problem_type");
        if (!parse_number(f[1], r.size_param)) throw ParseError(where + "invalid size_param '" + std::string(f[1]) + "'");
        if (!parse_number(f[2], r.instance_index))
            throw ParseError(where + "invalid instance_index '" + std::string(f[2]) + "'");
        if (!parse_number(f[3], r.instance_seed))
            throw ParseError(where + "invalid instance_seed '" + std::string(f[3]) + "'");
        try {
            r.encoding = parse_encoding(f[4]);
            r.target_family = parse_family(f[5]);
        } catch (const ParseError& ex) {
            throw ParseError(where + ex.what());
        }
        if (!f[6].empty()) {
            int L = 0;
            if (!parse_number(f[6], L)) throw ParseError(where + "invalid min_L '" + std::string(f[6]) + "'");
            r.min_L = L;
        }
        if (!parse_number(f[7], r.logical_qubits))
            throw ParseError(where + "invalid logical_qubits '" + std::string(f[7]) + "'");
        if (!f[8].empty()) {
            int q = 0;
            if (!parse_number(f[8], q)) throw ParseError(where + "invalid physical_qubits '" + std::string(f[8]) + "'");
            r.physical_qubits = q;
        }
        if (!f[9].empty()) {
            double x = 0.0;
            if (!parse_number(f[9], x)) throw ParseError(where + "invalid embedding_ratio '" + std::string(f[9]) + "'");
            r.embedding_ratio = x;
        }
        if (!parse_number(f[10], r.couplers)) throw ParseError(where + "invalid couplers '" + std::string(f[10]) + "'");
        if (!parse_number(f[11], r.tries)) throw ParseError(where + "invalid tries '" + std::string(f[11]) + "'");
        r.status = std::string(f[12]);
        if (r.status == "ok") {
            if (!r.min_L || !r.physical_qubits || !r.embedding_ratio)
                throw ParseError(where + "ok row without min_L, physical_qubits and embedding_ratio");
            if (r.logical_qubits <= 0) throw ParseError(where + "ok row with no logical qubits");
            const double expected = static_cast<double>(*r.physical_qubits) / r.logical_qubits;
            if (*r.embedding_ratio != expected)
                throw ParseError(where + "embedding_ratio is not physical_qubits / logical_qubits");
        } else if (r.status.empty()) {
            throw ParseError(where + "empty status");
        }
        rows.push_back(std::move(r));
    }
    if (!have_header) throw ParseError("line 1: missing header");
    return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
    using Key = std::tuple<std::string, int, EncodingKind, GraphFamily>;
    struct Acc {
        int failed = 0;
        std::vector<double> L;
        std::vector<double> ratio;
    };
    std::map<Key, Acc> groups;
    for (const ResultRow& r : rows) {
        Acc& a = groups[Key{r.problem_type, r.size_param, r.encoding, r.target_family}];
        if (r.status == "ok" && r.min_L && r.embedding_ratio) {
            a.L.push_back(*r.min_L);
            a.ratio.push_back(*r.embedding_ratio);
        } else {
            ++a.failed;
        }
    }
    std::vector<SummaryRow> out;
    for (auto& [key, acc] : groups) {
        SummaryRow s;
        std::tie(s.problem_type, s.size_param, s.encoding, s.target_family) = key;
        s.ok = static_cast<int>(acc.L.size());
        s.failed = acc.failed;
        if (!acc.L.empty()) {
            s.min_L = stat_of(std::move(acc.L));
            s.embedding_ratio = stat_of(std::move(acc.ratio));
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "problem_type,size_param,encoding,target_family,ok,failed,min_L_min,min_L_max,min_L_mean,"
           "ratio_min,ratio_max,ratio_mean\n";
    for (const SummaryRow& s : rows) {
        out << s.problem_type << ',' << s.size_param << ',' << to_string(s.encoding) << ','
            << to_string(s.target_family) << ',' << s.ok << ',' << s.failed;
        append_stat(out, s.min_L);
        append_stat(out, s.embedding_ratio);
        out << '\n';
    }
    return out.str();
}

}  // namespace dwall
