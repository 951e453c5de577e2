/* Copyright 2026 The cedist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the cedist shared library. All objects are opaque handles
 * created and destroyed here; every function returns a status code and
 * leaves a human-readable message in ced_last_error() on failure. Strings
 * returned through char** out-parameters are owned by the caller and must
 * be released with ced_string_free().
 */

#ifndef CEDIST_H
#define CEDIST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ced_status {
    CED_OK = 0,
    CED_ERR_PARSE = 1,    /* malformed input text */
    CED_ERR_DOMAIN = 2,   /* valid input, invalid for the requested operation */
    CED_ERR_IO = 3,       /* file could not be read or written */
    CED_ERR_ARGUMENT = 4, /* bad argument (null handle, index out of range, ...) */
    CED_ERR_INTERNAL = 5
} ced_status;

const char* ced_version(void);

/* Thread-local message describing the most recent failure in this thread. */
const char* ced_last_error(void);

void ced_string_free(char* s);

/* ---- convolutional generator sets ---- */

typedef struct ced_genset ced_genset;

/* Duplicate fmt=binary parity rows into a Z family and an X family. */
#define CED_IMPORT_CSS_EXPAND 1u

ced_status ced_genset_parse(const char* text, uint32_t flags, ced_genset** out);
ced_status ced_genset_load(const char* path, uint32_t flags, ced_genset** out);
void ced_genset_free(ced_genset* g);

/* Canonical paulivec text form. */
ced_status ced_genset_format(const ced_genset* g, char** out);
ced_status ced_genset_save(const ced_genset* g, const char* path);

typedef struct ced_genset_info {
    size_t n_noisy;
    size_t n_total;
    size_t generators;
    size_t ebit_columns;
    int constraint_length;
} ced_genset_info;

ced_status ced_genset_get_info(const ced_genset* g, ced_genset_info* out);
ced_status ced_genset_check_commuting(const ced_genset* g, int* out);
ced_status ced_genset_noncatastrophic(const ced_genset* g, int* out);
ced_status ced_genset_yield(const ced_genset* g, int64_t* num, int64_t* den,
                            int64_t* catalytic_ebits);

/* Pauli window of one generator over its full support. */
ced_status ced_genset_window(const ced_genset* g, size_t index, char** out);

/* As above, also reporting the frame number of the window's first frame
 * (nonzero for generators whose support starts off frame 0; first_frame
 * may be NULL). */
ced_status ced_genset_window_ex(const ced_genset* g, size_t index, char** out, int* first_frame);

/* Single-qubit error syndrome table (one column per qubit and letter). */
ced_status ced_genset_syndrome_table(const ced_genset* g, char** out);

typedef enum ced_augment_mode {
    CED_AUGMENT_SINGLE = 0,
    CED_AUGMENT_MULTI_LOWER = 1,
    CED_AUGMENT_MULTI_UPPER = 2,
    CED_AUGMENT_CSS = 3
} ced_augment_mode;

ced_status ced_genset_augment(const ced_genset* g, ced_augment_mode mode, ced_genset** out);

/* ---- entanglement-assisted block codes ---- */

typedef struct ced_block ced_block;

/* Text is either Pauli rows ("ZXZI") or "zbits|xbits" rows. */
ced_status ced_block_parse(const char* text, ced_block** out);
void ced_block_free(ced_block* b);

typedef struct ced_block_info {
    size_t rows;
    size_t qubits;
    size_t ebits;     /* c */
    size_t ancillas;  /* s */
    size_t logicals;  /* k */
} ced_block_info;

/* Runs the encoding decomposition. Any of the out pointers may be NULL.
 * circuit_script is the gate-per-line script with # ROWADD / # ROWSWAP
 * comments; canonical and encoded are Pauli-row matrices (the encoded
 * stabilizer includes the receiver-side ebit columns).
 */
ced_status ced_block_decompose(const ced_block* b, ced_block_info* info, char** circuit_script,
                               char** canonical, char** encoded);

/* ---- distillation simulation ---- */

typedef enum ced_channel {
    CED_CHANNEL_DEPOLARIZING = 0,
    CED_CHANNEL_INDEPENDENT_XZ = 1,
    CED_CHANNEL_CUSTOM_TABLE = 2,
    CED_CHANNEL_SINGLE_SPACED = 3
} ced_channel;

typedef enum ced_decoder { CED_DECODER_TABLE = 0, CED_DECODER_VITERBI = 1 } ced_decoder;

typedef struct ced_sim_params {
    int64_t trials;
    int64_t frames;
    uint64_t seed;
    int channel;      /* ced_channel */
    double p;         /* depolarizing / independent-xz error probability */
    double table[4];  /* custom-table probabilities for I, X, Y, Z */
    int64_t spacing;  /* single-spaced: frames between errors (0 = nu + 1) */
    int64_t phase;    /* single-spaced: offset of the first error in the interior */
    int decoder;      /* ced_decoder */
    int w_max;        /* viterbi branch weight cap */
    int threads;
} ced_sim_params;

void ced_sim_params_init(ced_sim_params* p);

typedef struct ced_sim_result {
    int64_t trials;
    int64_t successes;
    int64_t logical_failures;
    int64_t detected_uncorrectable;
    int64_t residual_undetected;
    int64_t yield_num;
    int64_t yield_den;
    int64_t frames;
    int64_t syndrome_shifts;
    uint64_t seed;
} ced_sim_result;

ced_status ced_simulate(const ced_genset* g, const ced_sim_params* params, ced_sim_result* out);

#ifdef __cplusplus
}
#endif

#endif /* CEDIST_H */
