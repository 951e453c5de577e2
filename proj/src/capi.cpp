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

#include "cedist.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cedist/block_ea.hpp"
#include "cedist/generator_set.hpp"
#include "cedist/io.hpp"
#include "cedist/sim.hpp"

struct ced_genset {
    cedist::GeneratorSet set;
};

struct ced_block {
    cedist::SymplecticMatrix matrix;
};

namespace {

thread_local std::string g_last_error;

ced_status fail(ced_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs fn, translating exceptions to status codes.
template <typename Fn>
ced_status guarded(Fn&& fn) {
    try {
        fn();
        return CED_OK;
    } catch (const cedist::ParseError& e) {
        return fail(CED_ERR_PARSE, e.what());
    } catch (const cedist::DomainError& e) {
        return fail(CED_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CED_ERR_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(CED_ERR_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(CED_ERR_DOMAIN, e.what());
    } catch (const std::runtime_error& e) {
        return fail(CED_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(CED_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ced_status require(bool cond, const char* what) {
    return cond ? CED_OK : fail(CED_ERR_ARGUMENT, what);
}

}  // namespace

extern "C" {

const char* ced_version(void) { return "0.1.0"; }

const char* ced_last_error(void) { return g_last_error.c_str(); }

void ced_string_free(char* s) { std::free(s); }

ced_status ced_genset_parse(const char* text, uint32_t flags, ced_genset** out) {
    if (ced_status s = require(text && out, "null argument")) return s;
    return guarded([&] {
        *out = new ced_genset{cedist::parse_generator_set(text, flags & CED_IMPORT_CSS_EXPAND)};
    });
}

ced_status ced_genset_load(const char* path, uint32_t flags, ced_genset** out) {
    if (ced_status s = require(path && out, "null argument")) return s;
    return guarded([&] {
        *out = new ced_genset{cedist::load_generator_set(path, flags & CED_IMPORT_CSS_EXPAND)};
    });
}

void ced_genset_free(ced_genset* g) { delete g; }

ced_status ced_genset_format(const ced_genset* g, char** out) {
    if (ced_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(cedist::format_generator_set(g->set)); });
}

ced_status ced_genset_save(const ced_genset* g, const char* path) {
    if (ced_status s = require(g && path, "null argument")) return s;
    return guarded([&] { cedist::save_generator_set(g->set, path); });
}

ced_status ced_genset_get_info(const ced_genset* g, ced_genset_info* out) {
    if (ced_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        out->n_noisy = g->set.n_noisy;
        out->n_total = g->set.n_total();
        out->generators = g->set.generator_count();
        out->ebit_columns = g->set.ebit_cols;
        out->constraint_length = g->set.constraint_length();
    });
}

ced_status ced_genset_check_commuting(const ced_genset* g, int* out) {
    if (ced_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = cedist::check_commuting(g->set) ? 1 : 0; });
}

ced_status ced_genset_noncatastrophic(const ced_genset* g, int* out) {
    if (ced_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = cedist::noncatastrophic_check(g->set) ? 1 : 0; });
}

ced_status ced_genset_yield(const ced_genset* g, int64_t* num, int64_t* den,
                            int64_t* catalytic_ebits) {
    if (ced_status s = require(g != nullptr, "null argument")) return s;
    return guarded([&] {
        cedist::YieldInfo info = cedist::protocol_yield(g->set);
        if (num) *num = info.yield.num;
        if (den) *den = info.yield.den;
        if (catalytic_ebits) *catalytic_ebits = info.catalytic_ebits;
    });
}

ced_status ced_genset_window(const ced_genset* g, size_t index, char** out) {
    return ced_genset_window_ex(g, index, out, nullptr);
}

ced_status ced_genset_window_ex(const ced_genset* g, size_t index, char** out, int* first_frame) {
    if (ced_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        *out = dup_string(cedist::generator_window_string(g->set, index));
        if (first_frame) *first_frame = g->set.gens.at(index).delay();
    });
}

ced_status ced_genset_syndrome_table(const ced_genset* g, char** out) {
    if (ced_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(cedist::syndrome_table_string(g->set)); });
}

ced_status ced_genset_augment(const ced_genset* g, ced_augment_mode mode, ced_genset** out) {
    if (ced_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        using namespace cedist;
        const GeneratorSet& in = g->set;
        GeneratorSet result;
        switch (mode) {
            case CED_AUGMENT_SINGLE:
                if (in.generator_count() != 1)
                    throw DomainError("single augmentation expects exactly one generator");
                if (in.ebit_cols != 0) throw DomainError("input already carries ebit columns");
                result = augment_single(in.gens[0]);
                break;
            case CED_AUGMENT_MULTI_LOWER:
            case CED_AUGMENT_MULTI_UPPER:
                if (in.ebit_cols != 0) throw DomainError("input already carries ebit columns");
                result = augment_multi(in.gens, mode == CED_AUGMENT_MULTI_LOWER
                                                    ? AugmentVariant::Lower
                                                    : AugmentVariant::Upper);
                break;
            case CED_AUGMENT_CSS:
                if (in.ebit_cols != 0) throw DomainError("input already carries ebit columns");
                result = css_augment(css_gram_schmidt(in.gens));
                break;
            default:
                throw std::invalid_argument("unknown augmentation mode");
        }
        *out = new ced_genset{std::move(result)};
    });
}

ced_status ced_block_parse(const char* text, ced_block** out) {
    if (ced_status s = require(text && out, "null argument")) return s;
    return guarded([&] { *out = new ced_block{cedist::SymplecticMatrix::parse(text)}; });
}

void ced_block_free(ced_block* b) { delete b; }

ced_status ced_block_decompose(const ced_block* b, ced_block_info* info, char** circuit_script,
                               char** canonical, char** encoded) {
    if (ced_status s = require(b != nullptr, "null argument")) return s;
    return guarded([&] {
        cedist::EADecomposition d = cedist::decompose(b->matrix);
        if (info) {
            info->rows = b->matrix.rows;
            info->qubits = b->matrix.qubits;
            info->ebits = d.ebits;
            info->ancillas = d.ancillas;
            info->logicals = d.logicals;
        }
        if (circuit_script) *circuit_script = dup_string(d.circuit.script());
        if (canonical) *canonical = dup_string(d.canonical.str());
        if (encoded) *encoded = dup_string(cedist::encoded_stabilizer(d).str());
    });
}

void ced_sim_params_init(ced_sim_params* p) {
    if (!p) return;
    p->trials = 1000;
    p->frames = 24;
    p->seed = 1;
    p->channel = CED_CHANNEL_DEPOLARIZING;
    p->p = 0.01;
    p->table[0] = 1.0;
    p->table[1] = p->table[2] = p->table[3] = 0.0;
    p->spacing = 0;
    p->phase = 0;
    p->decoder = CED_DECODER_TABLE;
    p->w_max = 1;
    p->threads = 1;
}

ced_status ced_simulate(const ced_genset* g, const ced_sim_params* params, ced_sim_result* out) {
    if (ced_status s = require(g && params && out, "null argument")) return s;
    return guarded([&] {
        using namespace cedist;
        ChannelModel ch;
        switch (params->channel) {
            case CED_CHANNEL_DEPOLARIZING: ch.kind = ChannelKind::Depolarizing; break;
            case CED_CHANNEL_INDEPENDENT_XZ: ch.kind = ChannelKind::IndependentXZ; break;
            case CED_CHANNEL_CUSTOM_TABLE: ch.kind = ChannelKind::CustomTable; break;
            case CED_CHANNEL_SINGLE_SPACED: ch.kind = ChannelKind::SingleSpaced; break;
            default: throw std::invalid_argument("unknown channel kind");
        }
        ch.p = params->p;
        for (int i = 0; i < 4; i++) ch.table[static_cast<size_t>(i)] = params->table[i];
        ch.spacing = static_cast<long>(params->spacing);
        ch.phase = static_cast<long>(params->phase);
        ch.seed = params->seed;

        SimParams sp;
        sp.trials = params->trials;
        sp.frames = static_cast<long>(params->frames);
        sp.decoder = params->decoder == CED_DECODER_VITERBI ? DecoderKind::Viterbi : DecoderKind::Table;
        sp.w_max = params->w_max;
        sp.threads = params->threads;

        SimReport r = run_distillation(g->set, ch, sp);
        out->trials = r.trials;
        out->successes = r.successes;
        out->logical_failures = r.logical_failures;
        out->detected_uncorrectable = r.detected_uncorrectable;
        out->residual_undetected = r.residual_undetected;
        out->yield_num = r.measured_yield.num;
        out->yield_den = r.measured_yield.den;
        out->frames = r.frames;
        out->syndrome_shifts = r.syndrome_shifts;
        out->seed = r.seed;
    });
}

}  // extern "C"
