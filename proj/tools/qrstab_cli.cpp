// Copyright 2026 The qrstab Authors
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

// Command-line front end. Links only the C API in libqrstab.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrstab.h"

namespace {

struct Failure {
    int status;
};

void check(int status) {
    if (status != QRSTAB_OK) {
        std::cerr << "error: " << qrstab_status_name(status) << ": " << qrstab_last_error() << "\n";
        throw Failure{status};
    }
}

std::string take(char *s) {
    std::string out = s ? s : "";
    qrstab_string_free(s);
    return out;
}

void write_output(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        std::cerr << "error: cannot write " << path << "\n";
        throw Failure{QRSTAB_E_IO};
    }
}

std::string read_input(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        throw Failure{QRSTAB_E_IO};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<uint32_t> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " " : "") + std::to_string(v[i]);
    }
    return s;
}

const char *tag_name(int tag) {
    switch (tag) {
    case QRSTAB_TAG_EXACT:
        return "exact";
    case QRSTAB_TAG_SAMPLED:
        return "sampled";
    default:
        return "upper_bound";
    }
}

struct DistanceFlags {
    std::string mode;
    uint64_t budget = 0;
    uint64_t seed = 1;
    unsigned threads = 0;
    size_t exact_limit = 0;

    void add(CLI::App *cmd, bool optional_mode) {
        auto *opt = cmd->add_option("--distance", mode, "Distance computation: exact, bound or auto")
                        ->check(CLI::IsMember({"exact", "bound", "auto"}));
        if (!optional_mode) {
            opt->default_val("auto");
        }
        qrstab_distance_options d;
        qrstab_distance_options_default(&d);
        budget = d.budget;
        exact_limit = d.exact_dual_limit;
        cmd->add_option("--budget", budget, "Candidate vectors for the bounded search")->capture_default_str();
        cmd->add_option("--seed", seed, "Seed for the bounded search")->capture_default_str();
        cmd->add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();
        cmd->add_option("--exact-limit", exact_limit, "Largest normalizer dimension searched exhaustively")
            ->capture_default_str();
    }

    qrstab_distance_options options() const {
        qrstab_distance_options o;
        qrstab_distance_options_default(&o);
        o.mode = mode == "exact" ? QRSTAB_DISTANCE_EXACT : mode == "bound" ? QRSTAB_DISTANCE_BOUND : QRSTAB_DISTANCE_AUTO;
        o.budget = budget;
        o.seed = seed;
        o.threads = threads;
        o.exact_dual_limit = exact_limit;
        return o;
    }
};

void print_summary(qrstab_code *code, bool with_distance, const qrstab_distance_report &rep) {
    qrstab_code_info info;
    check(qrstab_code_info_get(code, &info));
    std::cerr << "[[" << info.n_qubits << "," << info.k_logical << "]] rank " << info.rank;
    if (info.closed_form_rank >= 0) {
        std::cerr << " (closed form " << info.closed_form_rank << ")";
    }
    if (info.trivial) {
        std::cerr << " trivial";
    }
    if (with_distance) {
        std::cerr << " d_dagger " << rep.d_dagger << " (" << tag_name(rep.d_dagger_tag) << ") d_min " << rep.d_min
                  << " (" << tag_name(rep.d_min_tag) << ")";
    }
    std::cerr << "\n";
}

void finish_code(qrstab_code *code, const DistanceFlags &dist, const std::string &format, const std::string &out) {
    int relations = 0;
    check(qrstab_code_standard_form(code, &relations));
    qrstab_distance_report rep{};
    bool with_distance = !dist.mode.empty();
    if (with_distance) {
        auto opts = dist.options();
        check(qrstab_code_distance(code, &opts, &rep));
    }
    print_summary(code, with_distance, rep);
    char *text = nullptr;
    check(qrstab_code_export(code, format.c_str(), &text));
    write_output(out, take(text));
}

struct CodeGuard {
    qrstab_code *code = nullptr;
    ~CodeGuard() { qrstab_code_free(code); }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quadratic-residue stabilizer code construction and verification"};
    app.require_subcommand(1);

    auto *qrset = app.add_subcommand("qrset", "Print the residue structure of a prime");
    uint64_t qr_p = 0;
    qrset->add_option("p", qr_p, "Odd prime")->required();

    auto *build = app.add_subcommand("build", "Construct a code and export it");
    int type = 0;
    uint64_t p = 0;
    std::string variant;
    std::string layout;
    std::vector<size_t> removed;
    std::string out_path;
    std::string format = "json";
    bool allow_unproven = false;
    DistanceFlags build_dist;
    build->add_option("--type", type, "1 for cyclic Type-I, 2 for quasi-cyclic QCS")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    build->add_option("--p", p, "Prime modulus")->required();
    build->add_option("--variant", variant,
                      "Type-I: residue, nonresidue, plus, plus-swapped; Type-II: A or B");
    build->add_option("--layout", layout, "QCS-A arrangement")
        ->check(CLI::IsMember({"h1-adj2", "adj2-h1", "adj1-h2", "h2-adj1"}));
    build->add_option("--remove", removed, "Rows to remove, 1-based, comma separated")->delimiter(',');
    build->add_option("--out", out_path, "Output file (stdout when omitted)");
    build->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "alist", "pauli"}))
        ->capture_default_str();
    build->add_flag("--allow-unproven", allow_unproven, "Permit plus forms for even n");
    build_dist.add(build, true);

    auto *analyze = app.add_subcommand("analyze", "Analyse a code read from a file");
    std::string in_path;
    std::string in_format = "json";
    std::string an_out;
    std::string an_format = "json";
    DistanceFlags an_dist;
    analyze->add_option("--in", in_path, "Input file")->required();
    analyze->add_option("--in-format", in_format, "Input format")->check(CLI::IsMember({"json", "alist", "pauli"}))
        ->capture_default_str();
    analyze->add_option("--out", an_out, "Output file (stdout when omitted)");
    analyze->add_option("--format", an_format, "Output format")->check(CLI::IsMember({"json", "alist", "pauli"}))
        ->capture_default_str();
    an_dist.add(analyze, true);

    auto *tables = app.add_subcommand("tables", "Regenerate the reference tables and diff them");
    std::string which = "all";
    DistanceFlags tab_dist;
    tables->add_option("which", which, "1, 2, 3, 4 or all")->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
    tab_dist.add(tables, false);

    auto *bounds = app.add_subcommand("bounds", "Evaluate the quantum bounds for [[N, K, d]]");
    size_t bn = 0;
    size_t bk = 0;
    size_t bd = 0;
    bounds->add_option("--N", bn, "Code length")->required();
    bounds->add_option("--K", bk, "Logical qubits")->required();
    bounds->add_option("--d", bd, "Minimum distance")->required();

    auto *curves = app.add_subcommand("curves", "Asymptotic bound curves as CSV");
    size_t resolution = 101;
    std::string curves_out;
    curves->add_option("--resolution", resolution, "Samples per curve")->capture_default_str();
    curves->add_option("--out", curves_out, "Output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*qrset) {
            qrstab_context *ctx = nullptr;
            check(qrstab_context_create(qr_p, &ctx));
            qrstab_context_info info;
            qrstab_context_info_get(ctx, &info);
            std::vector<uint32_t> qr(info.k), qnr(info.k), pw(info.k);
            size_t len = 0;
            qrstab_context_set(ctx, 0, qr.data(), qr.size(), &len);
            qrstab_context_set(ctx, 1, qnr.data(), qnr.size(), &len);
            qrstab_context_set(ctx, 2, pw.data(), pw.size(), &len);
            qrstab_context_free(ctx);
            std::cout << "p: " << info.p << "  form: 4n" << (info.form_plus ? "+" : "-") << "1  n: " << info.n
                      << "  k: " << info.k << "  alpha: " << info.alpha << "  beta: " << info.beta << "\n";
            std::cout << "QR: " << join(qr) << " / QNR: " << join(qnr) << "\n";
            std::cout << "beta powers: " << join(pw) << "\n";
            return 0;
        }
        if (*build) {
            CodeGuard g;
            if (type == 1) {
                if (!layout.empty()) {
                    std::cerr << "error: --layout applies to --type 2 only\n";
                    return 2;
                }
                check(qrstab_build_type1(p, variant.empty() ? nullptr : variant.c_str(), removed.data(),
                                         removed.size(), allow_unproven ? 1 : 0, &g.code));
            } else {
                if (allow_unproven) {
                    std::cerr << "error: --allow-unproven applies to --type 1 only\n";
                    return 2;
                }
                bool has_removed = build->count("--remove") > 0;
                check(qrstab_build_qcs(p, variant.empty() ? nullptr : variant.c_str(),
                                       layout.empty() ? nullptr : layout.c_str(), has_removed ? 1 : 0,
                                       removed.data(), removed.size(), &g.code));
            }
            finish_code(g.code, build_dist, format, out_path);
            return 0;
        }
        if (*analyze) {
            CodeGuard g;
            std::string text = read_input(in_path);
            check(qrstab_code_import(text.c_str(), in_format.c_str(), &g.code));
            finish_code(g.code, an_dist, an_format, an_out);
            return 0;
        }
        if (*tables) {
            std::vector<int> list;
            if (which == "all") {
                list = {1, 2, 3, 4};
            } else {
                list = {std::stoi(which)};
            }
            auto opts = tab_dist.options();
            bool all = true;
            for (int t : list) {
                char *report = nullptr;
                int pass = 0;
                check(qrstab_run_table(t, &opts, &report, &pass));
                std::cout << take(report);
                all = all && pass;
            }
            return all ? 0 : 1;
        }
        if (*bounds) {
            qrstab_bounds_report r;
            check(qrstab_bounds(bn, bk, bd, &r));
            auto yn = [](int v) { return v ? "yes" : "no"; };
            std::cout << "[[" << bn << "," << bk << "," << bd << "]]  t=" << r.t << "  delta_q=" << r.delta_q << "\n";
            std::cout << "hamming: " << yn(r.hamming_ok) << (r.hamming_tight ? " (tight)" : "") << "\n";
            std::cout << "singleton: " << yn(r.singleton_ok) << (r.singleton_tight ? " (tight)" : "") << "\n";
            std::cout << "satisfies finite GV inequality: " << yn(r.gv_ok) << "\n";
            std::cout << "CSS GV rate: " << yn(r.css_gv_rate_ok) << "\n";
            return 0;
        }
        if (*curves) {
            char *csv = nullptr;
            check(qrstab_bounds_csv(resolution, &csv));
            write_output(curves_out, take(csv));
            return 0;
        }
    } catch (const Failure &f) {
        return f.status == QRSTAB_E_IO ? 3 : 2;
    }
    return 0;
}
