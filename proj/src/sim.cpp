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

#include "cedist/sim.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace cedist {

const char* channel_kind_name(ChannelKind k) {
    switch (k) {
        case ChannelKind::Depolarizing: return "depolarizing";
        case ChannelKind::IndependentXZ: return "independent-xz";
        case ChannelKind::CustomTable: return "custom-table";
        case ChannelKind::SingleSpaced: return "single-spaced";
    }
    return "?";
}

ErrorFrameSeq ErrorFrameSeq::identity(size_t n_total, size_t frame_count) {
    ErrorFrameSeq e;
    e.n_total = n_total;
    e.frames.assign(frame_count, std::vector<Pauli>(n_total, Pauli::I));
    return e;
}

bool ErrorFrameSeq::is_identity() const {
    for (const auto& f : frames)
        for (Pauli p : f)
            if (p != Pauli::I) return false;
    return true;
}

int ErrorFrameSeq::weight() const {
    int w = 0;
    for (const auto& f : frames)
        for (Pauli p : f) w += p != Pauli::I;
    return w;
}

PauliVec ErrorFrameSeq::to_pauli_vec() const {
    std::vector<LaurentPoly> z(n_total), x(n_total);
    for (size_t t = 0; t < frames.size(); t++) {
        for (size_t q = 0; q < n_total; q++) {
            Pauli p = frames[t][q];
            if (pauli_z_bit(p)) z[q] += LaurentPoly::monomial(static_cast<int>(t));
            if (pauli_x_bit(p)) x[q] += LaurentPoly::monomial(static_cast<int>(t));
        }
    }
    return PauliVec(std::move(z), std::move(x));
}

ErrorFrameSeq ErrorFrameSeq::operator^(const ErrorFrameSeq& other) const {
    if (n_total != other.n_total || frames.size() != other.frames.size())
        throw std::invalid_argument("ErrorFrameSeq: shape mismatch");
    ErrorFrameSeq r = *this;
    for (size_t t = 0; t < frames.size(); t++)
        for (size_t q = 0; q < n_total; q++) r.frames[t][q] = pauli_mul(frames[t][q], other.frames[t][q]);
    return r;
}

std::string ErrorFrameSeq::str() const {
    std::ostringstream os;
    for (size_t t = 0; t < frames.size(); t++) {
        if (t) os << '|';
        for (Pauli p : frames[t]) os << pauli_char(p);
    }
    return os.str();
}

bool SyndromeStream::all_zero() const {
    for (const auto& v : vecs)
        for (auto b : v)
            if (b) return false;
    return true;
}

SyndromeStream SyndromeStream::operator^(const SyndromeStream& other) const {
    if (gen_count != other.gen_count || vecs.size() != other.vecs.size())
        throw std::invalid_argument("SyndromeStream: shape mismatch");
    SyndromeStream r = *this;
    for (size_t i = 0; i < vecs.size(); i++)
        for (size_t j = 0; j < gen_count; j++) r.vecs[i][j] ^= other.vecs[i][j];
    return r;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed2701a9e3cc01ULL))) {}

std::uint64_t TrialRng::next_u64() { return engine_(); }

std::uint64_t TrialRng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("TrialRng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
}

double TrialRng::real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

Pauli random_xyz(TrialRng& rng) {
    switch (rng.below(3)) {
        case 0: return Pauli::X;
        case 1: return Pauli::Y;
        default: return Pauli::Z;
    }
}

}  // namespace

ErrorFrameSeq sample_errors(const ChannelModel& ch, long frames, const GeneratorSet& g) {
    TrialRng rng(ch.seed, 0);
    return sample_errors(ch, frames, g, rng);
}

ErrorFrameSeq sample_errors(const ChannelModel& ch, long frames, const GeneratorSet& g, TrialRng& rng) {
    if (frames < 1) throw std::invalid_argument("sample_errors: frames must be >= 1");
    int nu = g.constraint_length();
    long first = nu;
    long last = frames - 1 - nu;
    ErrorFrameSeq e = ErrorFrameSeq::identity(g.n_total(), static_cast<size_t>(frames));
    if (first > last) return e;

    switch (ch.kind) {
        case ChannelKind::Depolarizing:
            for (long t = first; t <= last; t++)
                for (size_t q = 0; q < g.n_noisy; q++)
                    if (rng.real() < ch.p) e.frames[static_cast<size_t>(t)][q] = random_xyz(rng);
            break;
        case ChannelKind::IndependentXZ:
            for (long t = first; t <= last; t++)
                for (size_t q = 0; q < g.n_noisy; q++) {
                    bool x = rng.real() < ch.p;
                    bool z = rng.real() < ch.p;
                    e.frames[static_cast<size_t>(t)][q] = pauli_from_bits(z, x);
                }
            break;
        case ChannelKind::CustomTable:
            for (long t = first; t <= last; t++)
                for (size_t q = 0; q < g.n_noisy; q++) {
                    double u = rng.real();
                    double acc = 0.0;
                    Pauli chosen = Pauli::I;
                    const Pauli order[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
                    for (int i = 0; i < 4; i++) {
                        acc += ch.table[static_cast<size_t>(i)];
                        if (u < acc) {
                            chosen = order[i];
                            break;
                        }
                    }
                    e.frames[static_cast<size_t>(t)][q] = chosen;
                }
            break;
        case ChannelKind::SingleSpaced: {
            long spacing = ch.spacing > 0 ? ch.spacing : nu + 1;
            for (long t = first + ch.phase; t <= last; t += spacing) {
                size_t q = static_cast<size_t>(rng.below(g.n_noisy));
                e.frames[static_cast<size_t>(t)][q] = random_xyz(rng);
            }
            break;
        }
    }
    return e;
}

SyndromeStream syndromes(const ErrorFrameSeq& err, const GeneratorSet& g) {
    GeneratorSet gn = g.delay_normalized();
    int nu = gn.constraint_length();
    long frames = static_cast<long>(err.frames.size());
    if (frames < nu + 1)
        throw DomainError("syndromes: window of " + std::to_string(frames) +
                          " frames is smaller than one generator support");
    if (err.n_total != g.n_total())
        throw std::invalid_argument("syndromes: error frame size does not match the generator set");
    PauliVec ev = err.to_pauli_vec();
    long shifts = frames - nu;
    SyndromeStream s;
    s.gen_count = gn.generator_count();
    s.vecs.assign(static_cast<size_t>(shifts), std::vector<std::uint8_t>(s.gen_count, 0));
    for (size_t j = 0; j < gn.gens.size(); j++) {
        LaurentPoly sigma = shifted_symplectic(gn.gens[j], ev);
        for (long i = 0; i < shifts; i++)
            s.vecs[static_cast<size_t>(i)][j] = sigma.coeff(static_cast<int>(i));
    }
    return s;
}

namespace {

// Signature of a weight-one error at frame 0 against all generators, stored
// as m-bit values for product exponents -nu..0.
std::vector<std::uint32_t> single_error_signature(const GeneratorSet& gn, int nu, size_t qubit,
                                                  Pauli letter) {
    PauliVec e;
    e.z.assign(gn.n_total(), LaurentPoly::zero());
    e.x.assign(gn.n_total(), LaurentPoly::zero());
    if (pauli_z_bit(letter)) e.z[qubit] = LaurentPoly::one();
    if (pauli_x_bit(letter)) e.x[qubit] = LaurentPoly::one();
    std::vector<std::uint32_t> sig(static_cast<size_t>(nu) + 1, 0);
    for (size_t j = 0; j < gn.gens.size(); j++) {
        LaurentPoly sigma = shifted_symplectic(gn.gens[j], e);
        for (int d = 0; d <= nu; d++)
            if (sigma.coeff(d - nu)) sig[static_cast<size_t>(d)] |= 1u << j;
    }
    return sig;
}

constexpr Pauli kTableLetters[3] = {Pauli::X, Pauli::Z, Pauli::Y};

}  // namespace

TableDecoder::TableDecoder(const GeneratorSet& g, long window, std::optional<long> anchor)
    : g_(g.delay_normalized()), window_(window), anchor_(anchor), nu_(g_.constraint_length()) {
    if (g_.generator_count() > 32)
        throw DomainError("table decoder supports at most 32 generators");
    if (window_ < 1) throw std::invalid_argument("table decoder: window must be >= 1");
    for (size_t q = 0; q < g_.n_noisy; q++) {
        for (Pauli letter : kTableLetters) {
            Entry e{q, letter, single_error_signature(g_, nu_, q, letter)};
            bool zero = std::all_of(e.sig.begin(), e.sig.end(), [](std::uint32_t v) { return v == 0; });
            if (zero)
                throw DomainError("ambiguous decode table: " + std::string(1, pauli_char(letter)) +
                                  std::to_string(q + 1) + " is undetectable");
            for (const auto& other : table_)
                if (other.sig == e.sig)
                    throw DomainError("ambiguous decode table: " + std::string(1, pauli_char(letter)) +
                                      std::to_string(q + 1) + " and " +
                                      std::string(1, pauli_char(other.letter)) +
                                      std::to_string(other.qubit + 1) + " share a syndrome");
            table_.push_back(std::move(e));
        }
    }
}

DecodeResult TableDecoder::decode(const SyndromeStream& s) const {
    long shifts = static_cast<long>(s.size());
    long frames = shifts + nu_;
    auto residual = s.vecs;
    DecodeResult result;
    result.err = ErrorFrameSeq::identity(g_.n_total(), static_cast<size_t>(frames));
    bool flagged = false;

    std::vector<long> candidates;
    if (anchor_) {
        for (long t = *anchor_; t < frames; t += window_) candidates.push_back(t);
    } else {
        for (long t = 0; t < frames; t++) candidates.push_back(t);
    }

    for (long t : candidates) {
        // Observed slice of the would-be signature of an error at frame t.
        bool any = false;
        std::vector<std::uint32_t> seg(static_cast<size_t>(nu_) + 1, 0);
        std::vector<bool> observed(static_cast<size_t>(nu_) + 1, false);
        for (int d = 0; d <= nu_; d++) {
            long i = t - nu_ + d;
            if (i < 0 || i >= shifts) continue;
            observed[static_cast<size_t>(d)] = true;
            std::uint32_t bits = 0;
            for (size_t j = 0; j < s.gen_count; j++)
                if (residual[static_cast<size_t>(i)][j]) bits |= 1u << j;
            seg[static_cast<size_t>(d)] = bits;
            any = any || bits;
        }
        if (!any) continue;
        const Entry* match = nullptr;
        bool unique = true;
        for (const auto& e : table_) {
            bool fits = true;
            for (int d = 0; d <= nu_ && fits; d++)
                if (observed[static_cast<size_t>(d)] && e.sig[static_cast<size_t>(d)] != seg[static_cast<size_t>(d)])
                    fits = false;
            if (fits) {
                if (match) unique = false;
                match = &e;
            }
        }
        if (!match || !unique) {
            flagged = true;
            continue;
        }
        result.err.frames[static_cast<size_t>(t)][match->qubit] =
            pauli_mul(result.err.frames[static_cast<size_t>(t)][match->qubit], match->letter);
        for (int d = 0; d <= nu_; d++) {
            long i = t - nu_ + d;
            if (i < 0 || i >= shifts) continue;
            for (size_t j = 0; j < s.gen_count; j++)
                residual[static_cast<size_t>(i)][j] ^= (match->sig[static_cast<size_t>(d)] >> j) & 1u;
        }
    }
    for (const auto& v : residual)
        for (auto b : v)
            if (b) flagged = true;
    result.ok = !flagged;
    return result;
}

ViterbiDecoder::ViterbiDecoder(const GeneratorSet& g, int w_max)
    : g_(g.delay_normalized()), nu_(g_.constraint_length()), w_max_(w_max) {
    size_t m = g_.generator_count();
    if (m * static_cast<size_t>(nu_) > 24)
        throw DomainError("viterbi decoder: state space of " + std::to_string(m * nu_) +
                          " bits is too large");
    if (w_max_ < 0) throw std::invalid_argument("viterbi decoder: w_max must be >= 0");

    // Frame patterns of weight <= w_max on noisy columns, in lexicographic
    // letter order (I < X < Z < Y matches the bit encoding).
    std::vector<Pauli> frame(g_.n_total(), Pauli::I);
    auto emit = [&]() { branches_.push_back(frame); };
    auto rec = [&](auto&& self, size_t q, int weight_left) -> void {
        if (q == g_.n_noisy) {
            emit();
            return;
        }
        for (Pauli p : {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y}) {
            if (p != Pauli::I && weight_left == 0) continue;
            frame[q] = p;
            self(self, q + 1, weight_left - (p != Pauli::I ? 1 : 0));
        }
        frame[q] = Pauli::I;
    };
    rec(rec, 0, w_max_);
    std::sort(branches_.begin(), branches_.end());

    for (const auto& b : branches_) {
        PauliVec e;
        e.z.assign(g_.n_total(), LaurentPoly::zero());
        e.x.assign(g_.n_total(), LaurentPoly::zero());
        int w = 0;
        for (size_t q = 0; q < g_.n_total(); q++) {
            if (pauli_z_bit(b[q])) e.z[q] = LaurentPoly::one();
            if (pauli_x_bit(b[q])) e.x[q] = LaurentPoly::one();
            w += b[q] != Pauli::I;
        }
        std::vector<std::uint32_t> contrib(static_cast<size_t>(nu_) + 1, 0);
        for (size_t j = 0; j < m; j++) {
            LaurentPoly sigma = shifted_symplectic(g_.gens[j], e);
            for (int d = 0; d <= nu_; d++)
                if (sigma.coeff(d - nu_)) contrib[static_cast<size_t>(d)] |= 1u << j;
        }
        contribs_.push_back(std::move(contrib));
        branch_weight_.push_back(w);
    }
}

DecodeResult ViterbiDecoder::decode(const SyndromeStream& s) const {
    size_t m = g_.generator_count();
    long shifts = static_cast<long>(s.size());
    long frames = shifts + nu_;

    struct Node {
        int weight;
        std::vector<std::uint16_t> path;
    };
    // State packs the pending partial sums of the nu youngest syndrome
    // indices, m bits each; P[r] sits at bit offset r*m.
    std::unordered_map<std::uint32_t, Node> survivors;
    survivors[0] = Node{0, {}};

    std::vector<std::uint32_t> observed(static_cast<size_t>(shifts), 0);
    for (long i = 0; i < shifts; i++)
        for (size_t j = 0; j < m; j++)
            if (s.vecs[static_cast<size_t>(i)][j]) observed[static_cast<size_t>(i)] |= 1u << j;

    std::uint32_t mmask = m == 32 ? ~0u : (1u << m) - 1;
    for (long t = 0; t < frames; t++) {
        std::unordered_map<std::uint32_t, Node> next;
        long completed_index = t - nu_;
        for (const auto& [state, node] : survivors) {
            for (size_t b = 0; b < branches_.size(); b++) {
                std::uint32_t completed = (state & mmask) ^ contribs_[b][0];
                if (completed_index >= 0 && completed_index < shifts &&
                    completed != observed[static_cast<size_t>(completed_index)])
                    continue;
                std::uint32_t ns = 0;
                for (int r = 0; r + 1 < nu_; r++) {
                    std::uint32_t pending = (state >> ((r + 1) * static_cast<int>(m))) & mmask;
                    ns |= (pending ^ contribs_[b][static_cast<size_t>(r + 1)]) << (r * static_cast<int>(m));
                }
                if (nu_ > 0)
                    ns |= contribs_[b][static_cast<size_t>(nu_)] << ((nu_ - 1) * static_cast<int>(m));
                int w = node.weight + branch_weight_[b];
                auto it = next.find(ns);
                if (it == next.end() || w < it->second.weight) {
                    Node cand{w, node.path};
                    cand.path.push_back(static_cast<std::uint16_t>(b));
                    next[ns] = std::move(cand);
                } else if (w == it->second.weight) {
                    // Equal-weight paths at the same depth have equal length;
                    // keep the lexicographically smaller branch sequence.
                    std::vector<std::uint16_t> cand_path = node.path;
                    cand_path.push_back(static_cast<std::uint16_t>(b));
                    if (cand_path < it->second.path) it->second.path = std::move(cand_path);
                }
            }
        }
        survivors = std::move(next);
        if (survivors.empty()) break;
    }

    DecodeResult result;
    result.err = ErrorFrameSeq::identity(g_.n_total(), static_cast<size_t>(frames));
    if (survivors.empty()) return result;
    const Node* best = nullptr;
    for (const auto& [state, node] : survivors) {
        if (!best || node.weight < best->weight ||
            (node.weight == best->weight && node.path < best->path))
            best = &node;
    }
    for (size_t t = 0; t < best->path.size(); t++) result.err.frames[t] = branches_[best->path[t]];
    result.ok = true;
    return result;
}

DecodeResult decode_table(const SyndromeStream& s, const GeneratorSet& g, long window) {
    return TableDecoder(g, window).decode(s);
}

DecodeResult decode_viterbi(const SyndromeStream& s, const GeneratorSet& g, int w_max) {
    return ViterbiDecoder(g, w_max).decode(s);
}

namespace {

// Bit-packed GF(2) row reducer over the window's coefficient space.
struct GaussBasis {
    size_t words;
    std::vector<std::vector<std::uint64_t>> rows;  // kept in echelon form
    std::vector<size_t> pivots;

    explicit GaussBasis(size_t bits) : words((bits + 63) / 64) {}

    // Reduces v against the basis; returns true (and absorbs nothing) when v
    // reduces to zero.
    bool reduce(std::vector<std::uint64_t>& v) const {
        for (size_t r = 0; r < rows.size(); r++) {
            size_t p = pivots[r];
            if ((v[p / 64] >> (p % 64)) & 1)
                for (size_t w = 0; w < words; w++) v[w] ^= rows[r][w];
        }
        for (auto w : v)
            if (w) return false;
        return true;
    }

    void insert(std::vector<std::uint64_t> v) {
        for (size_t r = 0; r < rows.size(); r++) {
            size_t p = pivots[r];
            if ((v[p / 64] >> (p % 64)) & 1)
                for (size_t w = 0; w < words; w++) v[w] ^= rows[r][w];
        }
        for (size_t bit = 0; bit < words * 64; bit++) {
            if ((v[bit / 64] >> (bit % 64)) & 1) {
                rows.push_back(std::move(v));
                pivots.push_back(bit);
                return;
            }
        }
    }
};

std::vector<std::uint64_t> pack_error(const ErrorFrameSeq& e, size_t words) {
    std::vector<std::uint64_t> v(words, 0);
    size_t n = e.n_total;
    for (size_t t = 0; t < e.frames.size(); t++) {
        for (size_t q = 0; q < n; q++) {
            Pauli p = e.frames[t][q];
            size_t base = (t * n + q) * 2;
            if (pauli_z_bit(p)) v[base / 64] ^= std::uint64_t{1} << (base % 64);
            if (pauli_x_bit(p)) v[(base + 1) / 64] ^= std::uint64_t{1} << ((base + 1) % 64);
        }
    }
    return v;
}

}  // namespace

bool in_stabilizer_span(const GeneratorSet& g, const ErrorFrameSeq& residual) {
    if (residual.is_identity()) return true;
    GeneratorSet gn = g.delay_normalized();
    int nu = gn.constraint_length();
    long frames = static_cast<long>(residual.frames.size());
    long shifts = frames - nu;
    size_t bits = static_cast<size_t>(frames) * gn.n_total() * 2;
    GaussBasis basis(bits);
    for (long j = 0; j < shifts; j++) {
        for (const auto& gen : gn.gens) {
            PauliVec shifted = gen.shifted(static_cast<int>(j));
            ErrorFrameSeq row = ErrorFrameSeq::identity(gn.n_total(), static_cast<size_t>(frames));
            for (int f = std::max<long>(0, j); f < frames; f++) {
                for (size_t q = 0; q < gn.n_total(); q++)
                    row.frames[static_cast<size_t>(f)][q] = shifted.letter(q, static_cast<int>(f));
            }
            basis.insert(pack_error(row, basis.words));
        }
    }
    auto v = pack_error(residual, basis.words);
    return basis.reduce(v);
}

namespace {

struct TrialOutcome {
    // 0 success, 1 detected failure, 2 undetected failure
    std::uint8_t code = 0;
};

}  // namespace

SimReport run_distillation(const GeneratorSet& g, const ChannelModel& ch, const SimParams& params) {
    if (params.trials < 1) throw std::invalid_argument("run_distillation: trials must be >= 1");
    GeneratorSet gn = g.delay_normalized();
    int nu = gn.constraint_length();
    if (params.frames < 2 * nu + 1)
        throw std::invalid_argument("run_distillation: need at least 2*nu + 1 frames");

    std::optional<TableDecoder> table;
    std::optional<ViterbiDecoder> viterbi;
    if (params.decoder == DecoderKind::Table) {
        if (ch.kind == ChannelKind::SingleSpaced) {
            long spacing = ch.spacing > 0 ? ch.spacing : nu + 1;
            table.emplace(gn, spacing, nu + ch.phase);
        } else {
            table.emplace(gn, nu + 1);
        }
    } else {
        viterbi.emplace(gn, params.w_max);
    }

    std::vector<TrialOutcome> outcomes(static_cast<size_t>(params.trials));
    auto run_range = [&](long long lo, long long hi) {
        for (long long trial = lo; trial < hi; trial++) {
            TrialRng rng(ch.seed, static_cast<std::uint64_t>(trial));
            ErrorFrameSeq err = sample_errors(ch, params.frames, gn, rng);
            SyndromeStream s = syndromes(err, gn);
            DecodeResult dec = table ? table->decode(s) : viterbi->decode(s);
            ErrorFrameSeq residual = err ^ dec.err;
            bool success = residual.is_identity() || in_stabilizer_span(gn, residual);
            TrialOutcome& out = outcomes[static_cast<size_t>(trial)];
            if (success)
                out.code = 0;
            else
                out.code = dec.ok ? 2 : 1;
        }
    };

    int threads = std::max(1, params.threads);
    if (threads == 1 || params.trials < 2 * threads) {
        run_range(0, params.trials);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (params.trials + threads - 1) / threads;
        for (int i = 0; i < threads; i++) {
            long long lo = i * chunk;
            long long hi = std::min<long long>(params.trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    SimReport report;
    report.trials = params.trials;
    for (const auto& out : outcomes) {
        if (out.code == 0)
            report.successes++;
        else if (out.code == 1)
            report.detected_uncorrectable++;
        else
            report.residual_undetected++;
    }
    report.logical_failures = report.trials - report.successes;
    long long n = static_cast<long long>(gn.n_noisy);
    long long m = static_cast<long long>(gn.generator_count());
    report.measured_yield = Rational(report.successes * (n - m), report.trials * n);
    report.frames = params.frames;
    report.syndrome_shifts = params.frames - nu;
    report.seed = ch.seed;
    report.decoder = params.decoder == DecoderKind::Table ? "table" : "viterbi";
    report.channel = channel_kind_name(ch.kind);
    return report;
}

}  // namespace cedist
