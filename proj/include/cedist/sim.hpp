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

#ifndef CEDIST_SIM_HPP
#define CEDIST_SIM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cedist/generator_set.hpp"

namespace cedist {

enum class ChannelKind {
    Depolarizing,    // X, Y, Z each with probability p/3 per noisy qubit
    IndependentXZ,   // X with probability p and Z with probability p, independently
    CustomTable,     // per-letter probabilities (I, X, Y, Z)
    SingleSpaced,    // one random single-qubit error every `spacing` frames
};

const char* channel_kind_name(ChannelKind k);

struct ChannelModel {
    ChannelKind kind = ChannelKind::Depolarizing;
    double p = 0.0;
    std::array<double, 4> table{1.0, 0.0, 0.0, 0.0};  // I, X, Y, Z
    long spacing = 0;  // SingleSpaced: frame gap between errors (0 = nu + 1)
    long phase = 0;    // SingleSpaced: offset of the first error inside the interior
    std::uint64_t seed = 0;
};

/// Pauli errors on Bob's side over frames [0, frames); catalytic ebit
/// columns always carry the identity.
struct ErrorFrameSeq {
    size_t n_total = 0;
    std::vector<std::vector<Pauli>> frames;

    static ErrorFrameSeq identity(size_t n_total, size_t frame_count);
    bool is_identity() const;
    int weight() const;
    PauliVec to_pauli_vec() const;
    ErrorFrameSeq operator^(const ErrorFrameSeq& other) const;  // letterwise product
    bool operator==(const ErrorFrameSeq& other) const = default;
    std::string str() const;
};

/// The per-shift syndrome difference vectors e_i, i = 0 .. size()-1. Bit j of
/// e_i is the coefficient at D^i of the shifted symplectic product between
/// generator j and the error.
struct SyndromeStream {
    size_t gen_count = 0;
    std::vector<std::vector<std::uint8_t>> vecs;
    size_t size() const { return vecs.size(); }
    bool all_zero() const;
    SyndromeStream operator^(const SyndromeStream& other) const;
    bool operator==(const SyndromeStream& other) const = default;
};

/// Deterministic per-trial randomness: a mersenne twister seeded from
/// (seed, stream index) through a splitmix64 mix, with local bounded-draw
/// helpers so results do not depend on the standard library's distribution
/// implementations.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next_u64();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
    double real();                         // uniform in [0, 1)
  private:
    std::mt19937_64 engine_;
};

/// Samples a channel error over `frames` frames. Errors land only in the
/// interior region [nu, frames-1-nu]; the nu-frame margins stay error free
/// so every sampled error has its full syndrome signature in the stream.
ErrorFrameSeq sample_errors(const ChannelModel& ch, long frames, const GeneratorSet& g);
ErrorFrameSeq sample_errors(const ChannelModel& ch, long frames, const GeneratorSet& g, TrialRng& rng);

/// Syndrome differences for all shifts whose generator support fits in the
/// window: shifts 0 .. frames-1-nu. Throws DomainError when the window is
/// smaller than one generator support.
SyndromeStream syndromes(const ErrorFrameSeq& err, const GeneratorSet& g);

struct DecodeResult {
    bool ok = false;  // false = detected-uncorrectable
    ErrorFrameSeq err;
};

/// Table-lookup decoder over single-qubit errors on noisy columns.
///
/// Construction precomputes one syndrome signature per (qubit, letter) and
/// rejects protocols whose signatures collide or vanish. When `anchor` is
/// set, candidate error frames are anchor, anchor+window, ... (the protocol's
/// known noisy frames); otherwise every frame is a candidate and decoding is
/// best effort.
class TableDecoder {
  public:
    TableDecoder(const GeneratorSet& g, long window, std::optional<long> anchor = std::nullopt);
    DecodeResult decode(const SyndromeStream& s) const;
    long window() const { return window_; }

  private:
    GeneratorSet g_;
    long window_;
    std::optional<long> anchor_;
    int nu_;
    struct Entry {
        size_t qubit;
        Pauli letter;
        std::vector<std::uint32_t> sig;  // m-bit values for exponents -nu..0
    };
    std::vector<Entry> table_;
};

/// Syndrome-trellis Viterbi decoder: minimum-weight error sequence whose
/// syndrome stream equals the observation, branch alphabet limited to
/// per-frame patterns of weight <= w_max on noisy columns, ties broken by
/// lexicographic branch order.
class ViterbiDecoder {
  public:
    ViterbiDecoder(const GeneratorSet& g, int w_max);
    DecodeResult decode(const SyndromeStream& s) const;

  private:
    GeneratorSet g_;
    int nu_;
    int w_max_;
    std::vector<std::vector<Pauli>> branches_;           // lex-ordered frame patterns
    std::vector<std::vector<std::uint32_t>> contribs_;   // per branch: m-bit values for exponents -nu..0
    std::vector<int> branch_weight_;
};

/// Free-function forms of the two decoders.
DecodeResult decode_table(const SyndromeStream& s, const GeneratorSet& g, long window);
DecodeResult decode_viterbi(const SyndromeStream& s, const GeneratorSet& g, int w_max);

/// True when the residual error is a GF(2) combination of the generator
/// shifts supported inside the window (checked by Gaussian elimination).
bool in_stabilizer_span(const GeneratorSet& g, const ErrorFrameSeq& residual);

enum class DecoderKind { Table, Viterbi };

struct SimParams {
    long long trials = 1000;
    long frames = 24;
    DecoderKind decoder = DecoderKind::Table;
    int w_max = 1;
    int threads = 1;
};

struct SimReport {
    long long trials = 0;
    long long successes = 0;
    long long logical_failures = 0;          // trials - successes
    long long detected_uncorrectable = 0;    // failures the decoder flagged
    long long residual_undetected = 0;       // silent failures
    Rational measured_yield;                 // success_rate * (n - m)/n
    long frames = 0;
    long syndrome_shifts = 0;
    std::uint64_t seed = 0;
    std::string decoder;
    std::string channel;
};

/// Runs the distillation protocol trial by trial: sample errors, compute the
/// syndrome differences, decode, and count the trial as a success when the
/// residual (decoded + actual) error lies in the stabilizer span restricted
/// to the window. Fixed seed gives a bit-identical report for any thread
/// count.
SimReport run_distillation(const GeneratorSet& g, const ChannelModel& ch, const SimParams& params);

}  // namespace cedist

#endif
