// Copyright 2026 The cedist Authors
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

// Command-line front end. Talks to the library exclusively through the
// C API in cedist.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cedist.h"
#include "json.hpp"

namespace {

// Exit codes: 0 success, 1 domain failure, 2 usage/parse error.
int exit_code_for(ced_status s) {
    switch (s) {
        case CED_OK: return 0;
        case CED_ERR_DOMAIN: return 1;
        case CED_ERR_INTERNAL: return 1;
        default: return 2;
    }
}

[[noreturn]] void fail_with(ced_status s) {
    std::cerr << "error: " << ced_last_error() << "\n";
    std::exit(exit_code_for(s));
}

void check_ok(ced_status s) {
    if (s != CED_OK) fail_with(s);
}

struct GensetDeleter {
    void operator()(ced_genset* g) const { ced_genset_free(g); }
};
using GensetPtr = std::unique_ptr<ced_genset, GensetDeleter>;

struct StringDeleter {
    void operator()(char* s) const { ced_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

GensetPtr load_genset(const std::string& path, bool css) {
    ced_genset* raw = nullptr;
    check_ok(ced_genset_load(path.c_str(), css ? CED_IMPORT_CSS_EXPAND : 0, &raw));
    return GensetPtr(raw);
}

void print_windows(const ced_genset* g) {
    ced_genset_info info{};
    check_ok(ced_genset_get_info(g, &info));
    for (size_t i = 0; i < info.generators; i++) {
        char* w = nullptr;
        int first_frame = 0;
        check_ok(ced_genset_window_ex(g, i, &w, &first_frame));
        CString owned(w);
        std::cout << "g" << (i + 1) << ": " << owned.get();
        if (first_frame != 0) std::cout << "  (frames start at " << first_frame << ")";
        std::cout << "\n";
    }
}

void maybe_save(const ced_genset* g, const std::string& out_path) {
    if (out_path.empty()) {
        char* text = nullptr;
        check_ok(ced_genset_format(g, &text));
        CString owned(text);
        std::cout << owned.get();
    } else {
        check_ok(ced_genset_save(g, out_path.c_str()));
        std::cout << "wrote " << out_path << "\n";
    }
}

std::string read_file_or_die(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot open file: " << path << "\n";
        std::exit(2);
    }
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convolutional entanglement distillation toolkit"};
    app.require_subcommand(1);

    // import
    auto* import_cmd = app.add_subcommand("import", "Convert a code file to canonical paulivec form");
    std::string import_path, import_out;
    bool import_css = false;
    import_cmd->add_option("file", import_path, "input code file")->required();
    import_cmd->add_flag("--css", import_css, "duplicate binary parity rows into Z and X families");
    import_cmd->add_option("-o,--output", import_out, "output path (default: stdout)");

    // augment
    auto* augment_cmd = app.add_subcommand("augment", "Augment generators into a commuting stabilizer");
    std::string augment_path, augment_out, multi_variant = "lower";
    bool aug_single = false, aug_multi = false, aug_css = false;
    augment_cmd->add_option("file", augment_path, "paulivec code file")->required();
    augment_cmd->add_flag("--single", aug_single, "single-generator augmentation");
    augment_cmd->add_flag("--multi", aug_multi, "multi-generator augmentation");
    augment_cmd->add_option("--variant", multi_variant, "multi variant: lower|upper")
        ->check(CLI::IsMember({"lower", "upper"}));
    augment_cmd->add_flag("--css", aug_css, "CSS pairing and augmentation");
    augment_cmd->add_option("-o,--output", augment_out, "output path (default: stdout)");

    // check
    auto* check_cmd = app.add_subcommand("check", "Verify commutativity and noncatastrophicity");
    std::string check_path;
    check_cmd->add_option("file", check_path, "paulivec code file")->required();

    // syndromes
    auto* syn_cmd = app.add_subcommand("syndromes", "Print the single-qubit error syndrome table");
    std::string syn_path;
    syn_cmd->add_option("file", syn_path, "paulivec code file")->required();

    // encode-block
    auto* enc_cmd = app.add_subcommand("encode-block", "Decompose a block code and print its encoding circuit");
    std::string enc_path;
    enc_cmd->add_option("file", enc_path, "Pauli-row or [Z|X] matrix file")->required();

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo distillation simulation");
    std::string sim_path, sim_channel = "depolarizing", sim_decoder = "table", sim_json;
    ced_sim_params params;
    ced_sim_params_init(&params);
    std::vector<double> sim_probs;
    sim_cmd->add_option("file", sim_path, "paulivec code file")->required();
    sim_cmd->add_option("--trials", params.trials, "number of trials");
    sim_cmd->add_option("--frames", params.frames, "window length in frames");
    sim_cmd->add_option("--seed", params.seed, "RNG seed");
    sim_cmd->add_option("--p", params.p, "error probability per noisy qubit");
    sim_cmd->add_option("--channel", sim_channel, "depolarizing|xz|custom|spaced")
        ->check(CLI::IsMember({"depolarizing", "xz", "custom", "spaced"}));
    sim_cmd->add_option("--probs", sim_probs, "custom channel probabilities pI pX pY pZ")->expected(4);
    sim_cmd->add_option("--spacing", params.spacing, "spaced channel: frames between errors (0 = nu+1)");
    sim_cmd->add_option("--phase", params.phase, "spaced channel: first error offset in the interior");
    sim_cmd->add_option("--decoder", sim_decoder, "table|viterbi")
        ->check(CLI::IsMember({"table", "viterbi"}));
    sim_cmd->add_option("--wmax", params.w_max, "viterbi per-frame weight cap");
    sim_cmd->add_option("--threads", params.threads, "worker threads");
    sim_cmd->add_option("--json", sim_json, "also write the report as JSON to this path");

    // yield
    auto* yield_cmd = app.add_subcommand("yield", "Print the protocol yield and catalytic requirement");
    std::string yield_path;
    yield_cmd->add_option("file", yield_path, "paulivec code file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*import_cmd) {
        GensetPtr g = load_genset(import_path, import_css);
        print_windows(g.get());
        maybe_save(g.get(), import_out);
        return 0;
    }

    if (*augment_cmd) {
        if (aug_single + aug_multi + aug_css != 1) {
            std::cerr << "error: choose exactly one of --single, --multi, --css\n";
            return 2;
        }
        GensetPtr g = load_genset(augment_path, false);
        ced_augment_mode mode = CED_AUGMENT_SINGLE;
        if (aug_multi)
            mode = multi_variant == "upper" ? CED_AUGMENT_MULTI_UPPER : CED_AUGMENT_MULTI_LOWER;
        if (aug_css) mode = CED_AUGMENT_CSS;
        ced_genset* raw = nullptr;
        check_ok(ced_genset_augment(g.get(), mode, &raw));
        GensetPtr augmented(raw);
        print_windows(augmented.get());
        maybe_save(augmented.get(), augment_out);
        return 0;
    }

    if (*check_cmd) {
        GensetPtr g = load_genset(check_path, false);
        int commuting = 0, noncat = 0;
        check_ok(ced_genset_check_commuting(g.get(), &commuting));
        check_ok(ced_genset_noncatastrophic(g.get(), &noncat));
        std::cout << "commuting=" << (commuting ? "true" : "false") << "\n";
        std::cout << "noncatastrophic=" << (noncat ? "true" : "false") << "\n";
        return commuting && noncat ? 0 : 1;
    }

    if (*syn_cmd) {
        GensetPtr g = load_genset(syn_path, false);
        char* table = nullptr;
        check_ok(ced_genset_syndrome_table(g.get(), &table));
        CString owned(table);
        std::cout << owned.get();
        return 0;
    }

    if (*enc_cmd) {
        std::string text = read_file_or_die(enc_path);
        ced_block* raw = nullptr;
        check_ok(ced_block_parse(text.c_str(), &raw));
        std::unique_ptr<ced_block, decltype(&ced_block_free)> block(raw, &ced_block_free);
        ced_block_info info{};
        char *script = nullptr, *canonical = nullptr, *encoded = nullptr;
        check_ok(ced_block_decompose(block.get(), &info, &script, &canonical, &encoded));
        CString s1(script), s2(canonical), s3(encoded);
        std::cout << "ebits=" << info.ebits << " ancillas=" << info.ancillas
                  << " logicals=" << info.logicals << "\n";
        std::cout << "# circuit\n" << s1.get();
        std::cout << "# canonical\n" << s2.get();
        std::cout << "# encoded stabilizer (last " << info.ebits << " columns on the receiver)\n"
                  << s3.get();
        return 0;
    }

    if (*sim_cmd) {
        GensetPtr g = load_genset(sim_path, false);
        if (sim_channel == "xz") params.channel = CED_CHANNEL_INDEPENDENT_XZ;
        else if (sim_channel == "custom") params.channel = CED_CHANNEL_CUSTOM_TABLE;
        else if (sim_channel == "spaced") params.channel = CED_CHANNEL_SINGLE_SPACED;
        else params.channel = CED_CHANNEL_DEPOLARIZING;
        if (!sim_probs.empty())
            for (int i = 0; i < 4; i++) params.table[i] = sim_probs[static_cast<size_t>(i)];
        params.decoder = sim_decoder == "viterbi" ? CED_DECODER_VITERBI : CED_DECODER_TABLE;

        ced_sim_result r{};
        check_ok(ced_simulate(g.get(), &params, &r));

        double rate = static_cast<double>(r.successes) / static_cast<double>(r.trials);
        std::cout << "trials=" << r.trials << "\n"
                  << "frames=" << r.frames << "\n"
                  << "syndrome_shifts=" << r.syndrome_shifts << "\n"
                  << "seed=" << r.seed << "\n"
                  << "channel=" << sim_channel << "\n"
                  << "decoder=" << sim_decoder << "\n"
                  << "successes=" << r.successes << "\n"
                  << "logical_failures=" << r.logical_failures << "\n"
                  << "detected_uncorrectable=" << r.detected_uncorrectable << "\n"
                  << "residual_undetected=" << r.residual_undetected << "\n"
                  << "success_rate=" << rate << "\n"
                  << "measured_yield=" << r.yield_num << "/" << r.yield_den << "\n";

        if (!sim_json.empty()) {
            nlohmann::json j{{"trials", r.trials},
                             {"frames", r.frames},
                             {"syndrome_shifts", r.syndrome_shifts},
                             {"seed", r.seed},
                             {"channel", sim_channel},
                             {"decoder", sim_decoder},
                             {"successes", r.successes},
                             {"logical_failures", r.logical_failures},
                             {"detected_uncorrectable", r.detected_uncorrectable},
                             {"residual_undetected", r.residual_undetected},
                             {"success_rate", rate},
                             {"measured_yield", {{"num", r.yield_num}, {"den", r.yield_den}}}};
            std::ofstream out(sim_json);
            if (!out) {
                std::cerr << "error: cannot write " << sim_json << "\n";
                return 2;
            }
            out << j.dump(2) << "\n";
        }
        return 0;
    }

    if (*yield_cmd) {
        GensetPtr g = load_genset(yield_path, false);
        int64_t num = 0, den = 1, catalytic = 0;
        check_ok(ced_genset_yield(g.get(), &num, &den, &catalytic));
        std::cout << "yield=" << num << "/" << den << "\n"
                  << "catalytic_ebits=" << catalytic << "\n";
        return 0;
    }

    return 2;
}
