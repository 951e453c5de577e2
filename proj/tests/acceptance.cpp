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

// End-to-end acceptance suite. Each numbered check reproduces a pinned
// reference result exactly (worked constructions, syndrome tables, the block
// reduction) or runs a property suite with at least 200 random cases. One
// PASS/FAIL line is printed per criterion; the exit code is the number of
// failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cedist/block_ea.hpp"
#include "cedist/generator_set.hpp"
#include "cedist/io.hpp"
#include "cedist/sim.hpp"
#include "oracles.hpp"

using namespace cedist;

namespace {

int g_failures = 0;

void report(int index, const std::string& label, bool pass, const std::string& detail = "") {
    std::printf("[%s] %d: %s%s%s\n", pass ? "PASS" : "FAIL", index, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) g_failures++;
}

LaurentPoly P(const char* t) { return LaurentPoly::parse(t); }

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

PauliVec single_gen() { return PauliVec({P("1+D^3"), P("1+D^2")}, {P("D^2"), P("D")}); }

GeneratorSet rate13_basic() {
    return GeneratorSet(
        3, 0,
        {PauliVec({P("0"), P("D"), P("D")}, {P("1+D"), P("1"), P("1+D")}),
         PauliVec({P("1+D"), P("1+D"), P("1")}, {P("0"), P("D"), P("D")})});
}

GF4Generator quaternary_generator() {
    GF4Generator g;
    g.entries.resize(4);
    auto add_one = [&](size_t q, int f) {
        g.entries[q].omega += LaurentPoly::monomial(f);
        g.entries[q].omega_bar += LaurentPoly::monomial(f);
    };
    add_one(0, 0);
    add_one(0, 1);
    g.entries[1].omega_bar += LaurentPoly::monomial(0);
    add_one(1, 1);
    add_one(2, 0);
    add_one(3, 1);
    return g;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    PauliVec u({P("D")}, {P("1+D^3")});
    PauliVec v({P("1+D")}, {P("D^3")});
    bool ok = shifted_symplectic(u, u) == P("D^-2+D^-1+D+D^2") &&
              shifted_symplectic(v, v) == P("D^-3+D^-2+D^2+D^3") &&
              shifted_symplectic(v, u) == P("D^-2+D^-1+1+D^2+D^3");
    double ms = ms_since(t0);
    std::ostringstream detail;
    detail << ms << " ms";
    report(1, "one-qubit pair: all three shifted symplectic products exact", ok && ms < 1.0,
           detail.str());
}

void criterion_2() {
    PauliVec u({P("1+D"), P("D"), P("1"), P("D")}, {P("0"), P("1"), P("0"), P("0")});
    PauliVec v({P("0"), P("1"), P("0"), P("0")}, {P("1+D"), P("1+D"), P("1"), P("D")});
    bool ok = shifted_symplectic(u, u) == P("D^-1+D") && shifted_symplectic(v, v) == P("D^-1+D") &&
              shifted_symplectic(u, v) == P("D");
    report(2, "four-qubit pair: shifted symplectic products exact", ok);
}

void criterion_3() {
    GeneratorSet g = augment_single(single_gen());
    const PauliVec& u = g.gens[0];
    bool rows = u.z == std::vector<LaurentPoly>{P("1+D^3"), P("1+D^2"), P("D+D^2")} &&
                u.x == std::vector<LaurentPoly>{P("D^2"), P("D"), P("1")};
    bool window = to_pauli_window(u, 0, 3).str() == "ZZX|IXZ|XZZ|ZII";
    bool commutes = shifted_symplectic(u, u).is_zero();
    bool yield_ok = protocol_yield(g).yield == Rational(1, 2);
    report(3, "single-generator augmentation: exact row, window, self-product, yield 1/2",
           rows && window && commutes && yield_ok);
}

void criterion_4() {
    GeneratorSet g = augment_single(single_gen());
    const long frames = 15;
    const int nu = 3;
    auto column = [&](size_t q, Pauli p) {
        ErrorFrameSeq e = ErrorFrameSeq::identity(g.n_total(), frames);
        e.frames[7][q] = p;
        SyndromeStream s = syndromes(e, g);
        std::vector<std::uint8_t> col;
        for (int r = 0; r <= nu; r++) col.push_back(s.vecs[static_cast<size_t>(7 - r)][0]);
        return col;
    };
    using Col = std::vector<std::uint8_t>;
    std::vector<Col> cols = {column(0, Pauli::X), column(0, Pauli::Z), column(0, Pauli::Y),
                             column(1, Pauli::X), column(1, Pauli::Z), column(1, Pauli::Y)};
    std::vector<Col> expected = {Col{1, 0, 0, 1}, Col{0, 0, 1, 0}, Col{1, 0, 1, 1},
                                 Col{1, 0, 1, 0}, Col{0, 1, 0, 0}, Col{1, 1, 1, 0}};
    bool exact = cols == expected;
    bool distinct = true;
    for (size_t i = 0; i < cols.size(); i++)
        for (size_t j = i + 1; j < cols.size(); j++) distinct = distinct && cols[i] != cols[j];

    // Exhaustive: one single-qubit error anywhere on the 4-frame grid decodes
    // exactly with the table decoder.
    bool exhaustive = true;
    TableDecoder dec(g, 4, nu);
    for (long t = 3; t <= frames - 1 - nu; t += 4) {
        for (size_t q = 0; q < g.n_noisy; q++) {
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                ErrorFrameSeq e = ErrorFrameSeq::identity(g.n_total(), frames);
                e.frames[static_cast<size_t>(t)][q] = p;
                DecodeResult r = dec.decode(syndromes(e, g));
                exhaustive = exhaustive && r.ok && r.err == e;
            }
        }
    }

    // And a Monte-Carlo run: one random single-qubit error per 4-frame
    // spacing, 10^4 trials, exact success.
    ChannelModel ch;
    ch.kind = ChannelKind::SingleSpaced;
    ch.spacing = 4;
    ch.seed = 20260808;
    SimParams params;
    params.trials = 10000;
    params.frames = 23;
    SimReport r = run_distillation(g, ch, params);
    bool mc = r.successes == r.trials;

    std::ostringstream detail;
    detail << "exact=" << exact << " distinct=" << distinct << " exhaustive=" << exhaustive
           << " mc=" << r.successes << "/" << r.trials;
    report(4, "syndrome table: six columns exact, distinct, single error per 4 frames corrected",
           exact && distinct && exhaustive && mc, detail.str());
}

void criterion_5() {
    auto pair = import_gf4(quaternary_generator());
    GeneratorSet g = augment_multi({pair[0], pair[1]}, AugmentVariant::Lower);
    bool windows = to_pauli_window(g.gens[0], 0, 1).str() == "ZXZIXI|ZZIZZI" &&
                   to_pauli_window(g.gens[1], 0, 1).str() == "XYXIIX|XXIXZZ";
    report(5, "quaternary import + lower augmentation: exact windows, commuting",
           windows && check_commuting(g));
}

void criterion_6() {
    PauliVec w1({P("1+D"), P("D"), P("1")}, {P("0"), P("0"), P("0")});
    PauliVec w2({P("0"), P("0"), P("0")}, {P("1+D"), P("D"), P("1")});
    CssDecomposition d = css_gram_schmidt({w1, w2});
    bool f_ok = d.pairs.size() == 1 && d.pairs[0].f == P("D^-1+D") && d.isotropic.empty();
    GeneratorSet g = css_augment(d);
    bool rows = g.generator_count() == 2 &&
                g.gens[0].z == std::vector<LaurentPoly>{P("1+D"), P("D"), P("1"), P("D^-1+D")} &&
                g.gens[0].x == std::vector<LaurentPoly>{P("0"), P("0"), P("0"), P("0")} &&
                g.gens[1].z == std::vector<LaurentPoly>{P("0"), P("0"), P("0"), P("0")} &&
                g.gens[1].x == std::vector<LaurentPoly>{P("1+D"), P("D"), P("1"), P("1")};
    bool yield_ok = protocol_yield(g).yield == Rational(1, 3);
    report(6, "CSS pairing: product D^-1+D, exact augmented rows, yield 1/3",
           f_ok && rows && yield_ok && check_commuting(g));
}

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    GeneratorSet g = rate13_basic();
    bool commuting = check_commuting(g);

    ChannelModel ch;
    ch.kind = ChannelKind::SingleSpaced;
    ch.spacing = 2;
    ch.seed = 31337;
    SimParams params;
    params.trials = 10000;
    params.frames = 21;
    SimReport r = run_distillation(g, ch, params);
    double ms = ms_since(t0);
    std::ostringstream detail;
    detail << "successes=" << r.successes << "/" << r.trials << " in " << ms / 1000.0 << " s";
    report(7, "rate-1/3 stabilizer: commuting; single error every other frame corrected",
           commuting && r.successes == r.trials && ms < 10000.0, detail.str());
}

void criterion_8() {
    SymplecticMatrix input = SymplecticMatrix::from_pauli_rows({"ZXZI", "ZZIZ", "XYXI", "XXIX"});
    EADecomposition d = decompose(input);
    bool counts = d.ebits == 1 && d.ancillas == 2 && d.logicals == 1;
    SymplecticMatrix canonical_expected =
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0100|0000\n0010|0000\n");
    bool canonical_ok = d.canonical == canonical_expected;

    SymplecticMatrix enc = encoded_stabilizer(d);
    bool encoded_ok = enc.qubits == 5 && enc.pauli_row(0) == "ZXZIX" && enc.pauli_row(1) == "ZZIZZ" &&
                      enc.pauli_row(2) == "YXXZI" && enc.pauli_row(3) == "ZYYXI" && enc.is_abelian();

    std::vector<SymplecticMatrix> reference = {
        SymplecticMatrix::parse("0110|1000\n1101|0000\n1000|1110\n0000|1101\n"),
        SymplecticMatrix::parse("0000|1110\n1001|0100\n1110|1000\n0100|1001\n"),
        SymplecticMatrix::parse("0000|1000\n1001|0100\n1110|1110\n1100|1111\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1101\n1110|1110\n1101|1110\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0110|1011\n1101|1011\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0110|0011\n0101|0011\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0010|0111\n0001|0111\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0110|0100\n0101|0100\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0010|0100\n0001|0100\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0000|0100\n0001|0110\n"),
        SymplecticMatrix::parse("1000|0000\n0000|1000\n0100|0000\n0001|0010\n"),
    };
    std::vector<SymplecticMatrix> snaps = replay_snapshots(input, d.circuit);
    int matched = 0;
    for (const auto& ref : reference) {
        for (const auto& s : snaps) {
            if (s == ref) {
                matched++;
                break;
            }
        }
    }
    std::ostringstream detail;
    detail << "c=" << d.ebits << " s=" << d.ancillas << " k=" << d.logicals << " intermediates "
           << matched << "/" << reference.size();
    report(8, "block decomposition: c/s/k, canonical and encoded matrices, replayed reduction",
           counts && canonical_ok && encoded_ok && matched >= 3, detail.str());
}

void criterion_9() {
    std::mt19937_64 rng(0xace5);
    bool reversal = true, self_zero = true, preserve = true, commuting = true, oracle = true;
    for (int it = 0; it < 220; it++) {
        size_t n = 1 + rng() % 3;
        PauliVec u = testing::random_pauli_vec(rng, n);
        PauliVec v = testing::random_pauli_vec(rng, n);
        reversal = reversal && shifted_symplectic(u, v) == shifted_symplectic(v, u).time_reversed();
        self_zero = self_zero && !shifted_symplectic(u, u).coeff(0);
        for (int i = -5; i <= 5; i++)
            oracle = oracle &&
                     commutes_at_shift(u, v, i) == !testing::window_anticommute_oracle(u, v, i);

        size_t m = 1 + rng() % 3;
        std::vector<PauliVec> gens;
        for (size_t k = 0; k < m; k++) gens.push_back(testing::random_nonzero_pauli_vec(rng, n, 0, 2));
        AugmentVariant variant = (rng() & 1) ? AugmentVariant::Lower : AugmentVariant::Upper;
        GeneratorSet multi = augment_multi(gens, variant);
        commuting = commuting && check_commuting(multi);
        for (size_t i = 0; i < m && preserve; i++) {
            for (size_t j = 0; j < m; j++) {
                PauliVec ai(std::vector<LaurentPoly>(multi.gens[i].z.begin() + static_cast<long>(n),
                                                     multi.gens[i].z.end()),
                            std::vector<LaurentPoly>(multi.gens[i].x.begin() + static_cast<long>(n),
                                                     multi.gens[i].x.end()));
                PauliVec aj(std::vector<LaurentPoly>(multi.gens[j].z.begin() + static_cast<long>(n),
                                                     multi.gens[j].z.end()),
                            std::vector<LaurentPoly>(multi.gens[j].x.begin() + static_cast<long>(n),
                                                     multi.gens[j].x.end()));
                preserve = preserve &&
                           shifted_symplectic(ai, aj) == shifted_symplectic(gens[i], gens[j]);
            }
        }
        commuting = commuting && check_commuting(augment_single(gens[0]));

        // CSS construction on random parity rows.
        std::vector<PauliVec> rows;
        for (int r = 0; r < 2; r++) {
            std::vector<LaurentPoly> z;
            for (size_t q = 0; q < n; q++) z.push_back(testing::random_poly(rng, 0, 2));
            rows.push_back(PauliVec(std::move(z), std::vector<LaurentPoly>(n)));
            std::vector<LaurentPoly> x;
            for (size_t q = 0; q < n; q++) x.push_back(testing::random_poly(rng, 0, 2));
            rows.push_back(PauliVec(std::vector<LaurentPoly>(n), std::move(x)));
        }
        CssDecomposition dec = css_gram_schmidt(rows);
        dec.frame_size = n;
        if (!dec.pairs.empty() || !dec.isotropic.empty())
            commuting = commuting && check_commuting(css_augment(dec));
    }

    // Viterbi equals exhaustive minimum weight on short windows. Errors sit
    // in distinct frames so the actual pattern stays inside the
    // weight<=1-per-frame search space.
    bool viterbi_ml = true;
    GeneratorSet vg = rate13_basic();
    ViterbiDecoder vit(vg, 1);
    for (int it = 0; it < 200; it++) {
        long frames = 6 + static_cast<long>(rng() % 3);
        ErrorFrameSeq e = ErrorFrameSeq::identity(vg.n_total(), static_cast<size_t>(frames));
        long t1 = 1 + static_cast<long>(rng() % (frames - 2));
        e.frames[static_cast<size_t>(t1)][rng() % 3] = static_cast<Pauli>(1 + rng() % 3);
        if (rng() & 1) {
            long t2 = t1;
            while (t2 == t1) t2 = 1 + static_cast<long>(rng() % (frames - 2));
            e.frames[static_cast<size_t>(t2)][rng() % 3] = static_cast<Pauli>(1 + rng() % 3);
        }
        SyndromeStream s = syndromes(e, vg);
        DecodeResult r = vit.decode(s);
        auto min_w = testing::exhaustive_min_weight(vg, s, frames, 1, e.weight());
        viterbi_ml = viterbi_ml && r.ok && min_w.has_value() && r.err.weight() == *min_w &&
                     syndromes(r.err, vg) == s;
    }

    // Syndrome linearity and decoder soundness.
    bool linear = true, sound = true;
    GeneratorSet tg = augment_single(single_gen());
    TableDecoder table(tg, 4);
    ViterbiDecoder tvit(tg, 1);
    for (int it = 0; it < 220; it++) {
        const long frames = 12;
        ErrorFrameSeq a = ErrorFrameSeq::identity(tg.n_total(), frames);
        ErrorFrameSeq b = ErrorFrameSeq::identity(tg.n_total(), frames);
        for (long t = 3; t <= 8; t++)
            for (size_t q = 0; q < tg.n_noisy; q++) {
                if (rng() % 8 == 0) a.frames[static_cast<size_t>(t)][q] = static_cast<Pauli>(1 + rng() % 3);
                if (rng() % 8 == 0) b.frames[static_cast<size_t>(t)][q] = static_cast<Pauli>(1 + rng() % 3);
            }
        linear = linear && syndromes(a ^ b, tg) == (syndromes(a, tg) ^ syndromes(b, tg));
        SyndromeStream s = syndromes(a, tg);
        DecodeResult rt = table.decode(s);
        if (rt.ok) sound = sound && syndromes(rt.err, tg) == s;
        DecodeResult rv = tvit.decode(s);
        if (rv.ok) sound = sound && syndromes(rv.err, tg) == s;
    }

    // Seed determinism, serial and threaded.
    ChannelModel ch;
    ch.kind = ChannelKind::Depolarizing;
    ch.p = 0.02;
    ch.seed = 777;
    SimParams params;
    params.trials = 250;
    params.frames = 13;
    SimReport r1 = run_distillation(vg, ch, params);
    SimReport r2 = run_distillation(vg, ch, params);
    params.threads = 3;
    SimReport r3 = run_distillation(vg, ch, params);
    bool deterministic = r1.successes == r2.successes && r1.successes == r3.successes &&
                         r1.detected_uncorrectable == r2.detected_uncorrectable &&
                         r1.detected_uncorrectable == r3.detected_uncorrectable &&
                         r1.residual_undetected == r3.residual_undetected;

    std::ostringstream detail;
    detail << "reversal=" << reversal << " self0=" << self_zero << " preserve=" << preserve
           << " commuting=" << commuting << " oracle=" << oracle << " viterbi_ml=" << viterbi_ml
           << " linear=" << linear << " sound=" << sound << " deterministic=" << deterministic;
    report(9, "property suites (>=200 cases each)",
           reversal && self_zero && preserve && commuting && oracle && viterbi_ml && linear &&
               sound && deterministic,
           detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures == 0)
        std::printf("all acceptance checks passed\n");
    else
        std::printf("%d acceptance check(s) failed\n", g_failures);
    return g_failures;
}
