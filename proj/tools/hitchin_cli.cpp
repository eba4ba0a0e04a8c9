/*
 * Copyright 2026 The hitchin-exact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end over the C API: dims, sweep, gen, analyze, reduce-odd.
// Exit codes: 0 all checks passed, 1 verification failure, 2 usage or input error.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hitchin/hitchin.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    int64_t lo = 0;
    int64_t hi = 0;
};

Range parse_range(const std::string& text, const char* name) {
    auto parse_one = [&](const std::string& s) -> int64_t {
        std::size_t used = 0;
        int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != s.size() || s.empty()) throw UsageError(std::string("invalid ") + name + " range: " + text);
        return v;
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_one(text);
    } else {
        r.lo = parse_one(text.substr(0, dots));
        r.hi = parse_one(text.substr(dots + 2));
    }
    if (r.hi < r.lo) throw UsageError(std::string("empty ") + name + " range: " + text);
    return r;
}

int exit_for(hx_status s) {
    switch (s) {
        case HX_OK: return kExitPass;
        case HX_VERIFICATION_FAILED:
        case HX_NON_GENERIC: return kExitFail;
        default: return kExitUsage;
    }
}

int report_error(hx_status s) {
    std::cerr << "error: " << hx_last_error() << "\n";
    return exit_for(s);
}

struct CString {
    char* p = nullptr;
    ~CString() { hx_string_free(p); }
    std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
    if (!out) throw UsageError("write failed: " + path);
}

std::vector<hx_group> parse_groups(const std::string& text) {
    std::vector<hx_group> groups;
    if (text == "all") return {HX_GROUP_SP, HX_GROUP_SO_EVEN, HX_GROUP_SO_ODD};
    std::stringstream ss(text);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
        hx_group g{};
        if (hx_group_parse(tag.c_str(), &g) != HX_OK) throw UsageError(hx_last_error());
        groups.push_back(g);
    }
    if (groups.empty()) throw UsageError("no group given");
    return groups;
}

struct TableOptions {
    std::string group = "all";
    std::string m = "1..4";
    std::string g = "2..6";
    std::string n = "1..4";
    int64_t deg_m = 0;
    std::string format = "csv";
    std::string output = "-";
    unsigned threads = 0;
};

int run_table(const TableOptions& opt, bool with_auxiliary) {
    const auto groups = parse_groups(opt.group);
    const Range m = parse_range(opt.m, "m");
    const Range g = parse_range(opt.g, "g");
    const Range n = parse_range(opt.n, "n");
    hx_format format{};
    if (hx_format_parse(opt.format.c_str(), &format) != HX_OK) throw UsageError(hx_last_error());

    hx_report_set* raw = nullptr;
    const hx_status s = hx_sweep(groups.data(), groups.size(), m.lo, m.hi, g.lo, g.hi, n.lo, n.hi, opt.deg_m,
                                 with_auxiliary ? 1 : 0, opt.threads, &raw);
    if (s != HX_OK) return report_error(s);
    std::unique_ptr<hx_report_set, decltype(&hx_report_set_free)> set(raw, &hx_report_set_free);

    CString text;
    const hx_status r = hx_report_set_render(set.get(), format, &text.p);
    if (r != HX_OK) return report_error(r);
    write_output(opt.output, text.str());
    return hx_report_set_all_pass(set.get()) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for parabolic Sp/SO Hitchin systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hx_version()));

    TableOptions dims_opt;
    dims_opt.m = "1";
    dims_opt.g = "2";
    dims_opt.n = "1";
    dims_opt.group = "sp";
    TableOptions sweep_opt;

    auto add_table_flags = [](CLI::App* cmd, TableOptions& o) {
        cmd->add_option("--group", o.group, "sp, so-even, so-odd, a comma list, or all")->capture_default_str();
        cmd->add_option("-m", o.m, "rank parameter m, as a or a..b")->capture_default_str();
        cmd->add_option("-g", o.g, "genus, as a or a..b")->capture_default_str();
        cmd->add_option("-n", o.n, "number of marked points, as a or a..b")->capture_default_str();
        cmd->add_option("--degM", o.deg_m, "degree of the twisting line bundle M")->capture_default_str();
        cmd->add_option("--format", o.format, "json, csv, or md")->capture_default_str();
        cmd->add_option("-o,--output", o.output, "output path, - for stdout")->capture_default_str();
        cmd->add_option("--threads", o.threads, "worker threads, 0 = hardware concurrency")->capture_default_str();
    };

    auto* dims = app.add_subcommand("dims", "dimension identity chain per (group, m, g, n)");
    add_table_flags(dims, dims_opt);
    auto* sweep = app.add_subcommand("sweep", "dimension chain plus genus, eigenline and parity checks over a box");
    add_table_flags(sweep, sweep_opt);

    std::string gen_group;
    int gen_m = 1;
    std::vector<std::string> gen_marked;
    int gen_deg_bound = 2;
    uint64_t gen_seed = 0;
    std::string gen_output = "-";
    auto* gen = app.add_subcommand("gen", "seeded random strongly parabolic Higgs field");
    gen->add_option("--group", gen_group, "sp, so-even, or so-odd")->required();
    gen->add_option("-m", gen_m, "rank parameter m")->capture_default_str();
    gen->add_option("--marked", gen_marked, "marked points, comma separated rationals")->delimiter(',')->required();
    gen->add_option("--deg-bound", gen_deg_bound, "degree bound of the holomorphic part")->capture_default_str();
    gen->add_option("--seed", gen_seed, "64-bit seed")->capture_default_str();
    gen->add_option("-o,--output", gen_output, "output path, - for stdout")->capture_default_str();

    std::string an_input = "-";
    std::string an_output = "-";
    std::string an_checks = "all";
    auto* analyze = app.add_subcommand("analyze", "run checks on a Higgs field or reduction document");
    analyze->add_option("-i,--input", an_input, "input path, - for stdin")->capture_default_str();
    analyze->add_option("-o,--output", an_output, "output path, - for stdout")->capture_default_str();
    analyze->add_option("--checks", an_checks, "membership,charpoly,parity,strong,pfaffian,spectral or all")
        ->capture_default_str();

    std::string red_input = "-";
    std::string red_output = "-";
    auto* reduce = app.add_subcommand("reduce-odd", "kernel-quotient reduction of an so-odd Higgs field");
    reduce->add_option("-i,--input", red_input, "input path, - for stdin")->capture_default_str();
    reduce->add_option("-o,--output", red_output, "output path, - for stdout")->capture_default_str();

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
        return kExitUsage;
    }

    try {
        if (*dims) return run_table(dims_opt, false);
        if (*sweep) return run_table(sweep_opt, true);

        if (*gen) {
            hx_group group{};
            if (hx_group_parse(gen_group.c_str(), &group) != HX_OK) throw UsageError(hx_last_error());
            std::vector<const char*> pts;
            for (const auto& p : gen_marked) pts.push_back(p.c_str());
            hx_field* raw = nullptr;
            const hx_status s = hx_field_generate(group, gen_m, pts.data(), pts.size(), gen_deg_bound, gen_seed, &raw);
            if (s != HX_OK) return report_error(s);
            std::unique_ptr<hx_field, decltype(&hx_field_free)> field(raw, &hx_field_free);
            CString text;
            const hx_status w = hx_field_to_json(field.get(), &text.p);
            if (w != HX_OK) return report_error(w);
            write_output(gen_output, text.str());
            return kExitPass;
        }

        if (*analyze) {
            const std::string doc = read_input(an_input);
            CString text;
            int pass = 0;
            const hx_status s = hx_analyze(doc.c_str(), an_checks.c_str(), &text.p, &pass);
            if (s != HX_OK && s != HX_VERIFICATION_FAILED) return report_error(s);
            write_output(an_output, text.str());
            return pass ? kExitPass : kExitFail;
        }

        if (*reduce) {
            const std::string doc = read_input(red_input);
            hx_field* raw = nullptr;
            const hx_status p = hx_field_parse(doc.c_str(), &raw);
            if (p != HX_OK) return report_error(p);
            std::unique_ptr<hx_field, decltype(&hx_field_free)> field(raw, &hx_field_free);
            CString text;
            int pass = 0;
            const hx_status s = hx_field_reduce_odd(field.get(), &text.p, &pass);
            if (s != HX_OK && s != HX_VERIFICATION_FAILED) return report_error(s);
            write_output(red_output, text.str());
            return pass ? kExitPass : kExitFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
