//! The acceptance gate: twelve headline checks, one test per check.
//!
//! Each test prints a single `criterion NN: PASS/FAIL` line, asserts the
//! computed facts, and enforces a wall-clock bound pinned as a constant
//! below.  The bounds are generous for debug builds on slow machines; the
//! point is to catch accidental blow-ups in algorithmic complexity, not to
//! benchmark.

use std::process::Command;
use std::time::{Duration, Instant};

use fvoa::certify::{
    decompose_weight4, decompose_weight4_shortened, generated_by_weights,
    span_dimension_of_weight_words, verify_hamming_identification, BlockPartition,
    ShortenedBranchCounts, SteinerTables,
};
use fvoa::codes::{
    macwilliams_transform, moonshine_code_c, moonshine_code_d, moonshine_matrix, LinearCode,
};
use fvoa::frame::{
    bundled_griess_table, check_frame_axioms, check_griess_consistency, conformal_weight,
    derive_shorter_pair, fuse, fusion_multiplicity, miyamoto_sign, triple_product_multiplicity,
    untwisted_labels, FrameCodePair, FusionLabel, MiyamotoKind,
};
use fvoa::gf2::Gf2Vector;
use fvoa::rational::Rational;
use fvoa::suite::DEFAULT_SEED;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BOUND_CODE_FACTS: Duration = Duration::from_secs(1);
const BOUND_FRAME_AXIOMS: Duration = Duration::from_secs(1);
const BOUND_MIN_WEIGHT: Duration = Duration::from_secs(10);
const BOUND_SPANNING: Duration = Duration::from_secs(10);
const BOUND_CERTIFICATES: Duration = Duration::from_secs(30);
const BOUND_DESIGNS: Duration = Duration::from_secs(10);
const BOUND_GENERATION: Duration = Duration::from_secs(1);
const BOUND_FUSION: Duration = Duration::from_secs(5);
const BOUND_CONFORMAL: Duration = Duration::from_secs(1);
const BOUND_GRIESS: Duration = Duration::from_secs(1);
const BOUND_RANDOM_CODES: Duration = Duration::from_secs(60);
const BOUND_END_TO_END: Duration = Duration::from_secs(300);

/// Samples drawn per code in the certificate criterion.
const CERTIFICATE_SAMPLES: usize = 1000;
/// Random pairs checked for sigma multiplicativity.
const SIGMA_PAIRS: usize = 10_000;
/// Seeded codes exercised by the library property criterion.
const RANDOM_CODE_COUNT: usize = 200;

fn report(number: u32, name: &str, ok: bool, detail: &str, elapsed: Duration, bound: Duration) {
    let in_time = elapsed <= bound;
    let status = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "criterion {number:02}: {status} - {name}: {detail} ({} ms)",
        elapsed.as_millis()
    );
    assert!(ok, "criterion {number:02} ({name}) failed: {detail}");
    assert!(
        in_time,
        "criterion {number:02} ({name}) took {elapsed:?}, bound is {bound:?}"
    );
}

fn random_codeword(rng: &mut ChaCha8Rng, code: &LinearCode) -> Gf2Vector {
    let coeffs: Vec<bool> = (0..code.k()).map(|_| rng.random()).collect();
    code.generator_matrix().combine(&Gf2Vector::from_bools(&coeffs))
}

#[test]
fn criterion_01_frame_code_facts() {
    let start = Instant::now();
    let d = moonshine_code_d();
    let dist = d.weight_distribution().unwrap();
    let rows = d.generator_matrix().rows();
    let orthogonal = rows
        .iter()
        .all(|a| rows.iter().all(|b| !a.dot(b)));
    let ok = d.n() == 48
        && d.k() == 7
        && dist.matches(&[(0, 1), (16, 3), (24, 120), (32, 3), (48, 1)])
        && dist.total() == BigUint::from(128u32)
        && orthogonal;
    report(
        1,
        "frame code facts",
        ok,
        "128 words, distribution {0:1, 16:3, 24:120, 32:3, 48:1}, rank 7, self-orthogonal",
        start.elapsed(),
        BOUND_CODE_FACTS,
    );
}

#[test]
fn criterion_02_frame_axioms() {
    let start = Instant::now();
    let pair = FrameCodePair::moonshine();
    let axioms = check_frame_axioms(&pair).unwrap();
    let shorter = derive_shorter_pair(&pair, 0).unwrap();
    let shorter_axioms = check_frame_axioms(&shorter).unwrap();
    let ok = axioms.all_pass()
        && shorter_axioms.all_pass()
        && shorter.frame_size() == 47
        && shorter.half_code().k() == 40
        && shorter.sixteenth_code().k() == 6;
    report(
        2,
        "frame axioms",
        ok,
        "containment, evenness, weights divisible by 8; inherited by the [47] pair",
        start.elapsed(),
        BOUND_FRAME_AXIOMS,
    );
}

#[test]
fn criterion_03_minimum_weight_two_routes() {
    let start = Instant::now();
    let d = moonshine_code_d();
    let c = moonshine_code_c();
    let transformed = macwilliams_transform(&d.weight_distribution().unwrap(), d.k()).unwrap();
    let mut ok = true;
    for w in 1..4 {
        ok &= transformed.count(w) == &BigUint::ZERO;
        ok &= c.words_of_weight(w).unwrap().is_empty();
    }
    let scanned = c.words_of_weight(4).unwrap();
    ok &= transformed.count(4) == &BigUint::from(3300u32);
    ok &= scanned.len() == 3300;
    ok &= scanned.iter().all(|w| c.contains(w).unwrap());
    ok &= c.minimum_weight().unwrap() == 4;
    report(
        3,
        "minimum weight, both routes",
        ok,
        "transform and subset scan agree: A_1 = A_2 = A_3 = 0, A_4 = 3300",
        start.elapsed(),
        BOUND_MIN_WEIGHT,
    );
}

#[test]
fn criterion_04_weight_four_spans() {
    let start = Instant::now();
    let c = moonshine_code_c();
    let c_short = c.shorten(0).unwrap();
    let rank_full = span_dimension_of_weight_words(&c, &[4]).unwrap();
    let rank_short = span_dimension_of_weight_words(&c_short, &[4]).unwrap();
    let ok = rank_full == 41 && c.k() == 41 && rank_short == 40 && c_short.k() == 40;
    report(
        4,
        "weight-4 spanning",
        ok,
        "weight-4 words span the full [48, 41] code and its [47, 40] shortening",
        start.elapsed(),
        BOUND_SPANNING,
    );
}

#[test]
fn criterion_05_constructive_certificates() {
    let start = Instant::now();
    let c = moonshine_code_c();
    let partition = BlockPartition::from_matrix(&moonshine_matrix()).unwrap();
    let tables = SteinerTables::build(&c, &partition).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut ok = true;

    // Unconstrained: every basis row and a thousand random codewords.
    let mut full_count = 0usize;
    for row in c.generator_matrix().rows() {
        let cert = decompose_weight4(&c, &tables, row).unwrap();
        cert.validate(&c).unwrap();
        full_count += 1;
    }
    ok &= full_count == 41;
    for _ in 0..CERTIFICATE_SAMPLES {
        let word = random_codeword(&mut rng, &c);
        let cert = decompose_weight4(&c, &tables, &word).unwrap();
        cert.validate(&c).unwrap();
    }

    // Shortened at coordinate 0: basis rows and samples again, tracking
    // which rewriting branches fired.
    let c_short = c.shorten(0).unwrap();
    let mut counts = ShortenedBranchCounts::default();
    let mut short_count = 0usize;
    for row in c_short.generator_matrix().rows() {
        let target = row.insert_zero_coordinate(0);
        let (cert, branch) = decompose_weight4_shortened(&c, &tables, 0, &target).unwrap();
        cert.validate(&c).unwrap();
        ok &= cert.parts().iter().all(|p| !p.get(0));
        counts.absorb(branch);
        short_count += 1;
    }
    ok &= short_count == 40;
    for _ in 0..CERTIFICATE_SAMPLES {
        let word = random_codeword(&mut rng, &c_short).insert_zero_coordinate(0);
        let (cert, branch) = decompose_weight4_shortened(&c, &tables, 0, &word).unwrap();
        cert.validate(&c).unwrap();
        ok &= cert.parts().iter().all(|p| !p.get(0));
        counts.absorb(branch);
    }
    ok &= counts.all_covered();
    let detail = format!(
        "41 + {CERTIFICATE_SAMPLES} full and 40 + {CERTIFICATE_SAMPLES} shortened certificates; \
         branches pair/cross/fixed fired {}/{}/{} times",
        counts.pair_weight4, counts.cross_block, counts.fixed_block
    );
    report(
        5,
        "constructive certificates",
        ok,
        &detail,
        start.elapsed(),
        BOUND_CERTIFICATES,
    );
}

#[test]
fn criterion_06_steiner_and_hamming() {
    let start = Instant::now();
    let c = moonshine_code_c();
    let d = moonshine_code_d();
    let partition = BlockPartition::from_matrix(&moonshine_matrix()).unwrap();
    let tables = SteinerTables::build(&c, &partition).unwrap();
    let mut ok = true;
    for idx in 0..3 {
        ok &= tables.pair_system(idx).block_count() == 1240;
        ok &= tables.pair_system(idx).n() == 32;
    }
    for b in 0..3 {
        ok &= tables.single_system(b).block_count() == 140;
        ok &= tables.single_system(b).n() == 16;
    }
    // The identification, over the three block pairs and the three blocks.
    let pairs = [(0, 1), (0, 2), (1, 2)];
    for (a, b) in pairs {
        let coords = partition.pair_coords(a, b);
        let ident = verify_hamming_identification(&c, &d, &coords).unwrap();
        ok &= ident.passes() && ident.dimension == 26;
    }
    for b in 0..3 {
        let coords = partition.block(b).to_vec();
        let ident = verify_hamming_identification(&c, &d, &coords).unwrap();
        ok &= ident.passes() && ident.dimension == 11;
    }
    report(
        6,
        "Steiner systems and Hamming identification",
        ok,
        "3 x S(3,4,32) with 1240 blocks, 3 x S(3,4,16) with 140 blocks, all six subcodes identified",
        start.elapsed(),
        BOUND_DESIGNS,
    );
}

#[test]
fn criterion_07_low_weight_generation() {
    let start = Instant::now();
    let d = moonshine_code_d();
    let d_short = d.shorten(0).unwrap();
    let ok = generated_by_weights(&d, &[16, 24]).unwrap()
        && generated_by_weights(&d_short, &[16, 24]).unwrap();
    report(
        7,
        "low-weight generation",
        ok,
        "weights {16, 24} span both sixteenth codes",
        start.elapsed(),
        BOUND_GENERATION,
    );
}

#[test]
fn criterion_08_fusion_and_sign_characters() {
    use FusionLabel::*;
    let start = Instant::now();
    let mut ok = true;

    // The fusion table and its identity row.
    for a in FusionLabel::ALL {
        ok &= fuse(Vacuum, a) == vec![a];
        ok &= fuse(a, Vacuum) == vec![a];
    }
    ok &= fuse(Half, Half) == vec![Vacuum];
    ok &= fuse(Half, Sixteenth) == vec![Sixteenth];
    ok &= fuse(Sixteenth, Half) == vec![Sixteenth];
    ok &= fuse(Sixteenth, Sixteenth) == vec![Vacuum, Half];

    // Associativity for every triple of labels, with multiplicities.
    let mut triples = 0;
    for a in FusionLabel::ALL {
        for b in FusionLabel::ALL {
            for c in FusionLabel::ALL {
                triples += 1;
                for d in FusionLabel::ALL {
                    let left = triple_product_multiplicity(a, b, c, d);
                    let right: u32 = FusionLabel::ALL
                        .into_iter()
                        .map(|e| fusion_multiplicity(b, c, e) * fusion_multiplicity(a, e, d))
                        .sum();
                    ok &= left == right;
                }
            }
        }
    }
    ok &= triples == 27;

    // Sign characters: tau exhaustively over the sixteenth code, sigma over
    // sampled pairs from the half code.
    let pair = FrameCodePair::moonshine();
    let code_d = moonshine_code_d();
    let code_c = moonshine_code_c();
    let words: Vec<Gf2Vector> = code_d.enumerate_codewords().unwrap().collect();
    ok &= words.len() == 128;
    let sectors: Vec<_> = words
        .iter()
        .map(|w| pair.twisted_sector(w).unwrap())
        .collect();
    for (i, wi) in words.iter().enumerate() {
        for (j, wj) in words.iter().enumerate() {
            let mut sum = wi.clone();
            sum.xor_assign(wj);
            let sector_sum = pair.twisted_sector(&sum).unwrap();
            for coord in 0..48 {
                let a = miyamoto_sign(MiyamotoKind::Tau, coord, &sectors[i]).unwrap();
                let b = miyamoto_sign(MiyamotoKind::Tau, coord, &sectors[j]).unwrap();
                let ab = miyamoto_sign(MiyamotoKind::Tau, coord, &sector_sum).unwrap();
                ok &= ab == a * b;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..SIGMA_PAIRS {
        let c1 = random_codeword(&mut rng, &code_c);
        let c2 = random_codeword(&mut rng, &code_c);
        let mut sum = c1.clone();
        sum.xor_assign(&c2);
        let s1 = pair.untwisted_sector(&c1).unwrap();
        let s2 = pair.untwisted_sector(&c2).unwrap();
        let s12 = pair.untwisted_sector(&sum).unwrap();
        for coord in 0..48 {
            let a = miyamoto_sign(MiyamotoKind::Sigma, coord, &s1).unwrap();
            let b = miyamoto_sign(MiyamotoKind::Sigma, coord, &s2).unwrap();
            let ab = miyamoto_sign(MiyamotoKind::Sigma, coord, &s12).unwrap();
            ok &= ab == a * b;
        }
    }
    let detail = format!(
        "table, 27 associativity triples, tau over 128 x 128 words x 48 coordinates, \
         sigma over {SIGMA_PAIRS} pairs"
    );
    report(
        8,
        "fusion rules and sign characters",
        ok,
        &detail,
        start.elapsed(),
        BOUND_FUSION,
    );
}

#[test]
fn criterion_09_conformal_weights() {
    use FusionLabel::*;
    let start = Instant::now();
    let c = moonshine_code_c();
    let words = c.words_of_weight(4).unwrap();
    let two = Rational::integer(2);
    let mut ok = words.len() == 3300;
    for word in &words {
        ok &= conformal_weight(&untwisted_labels(word)) == two;
    }
    // The mixed sector with two 1/2 labels and one block of 1/16 labels.
    let mut labels = vec![Vacuum; 48];
    labels[0] = Half;
    labels[16] = Half;
    labels[32..48].fill(Sixteenth);
    ok &= conformal_weight(&labels) == two;
    report(
        9,
        "conformal weights",
        ok,
        "all 3300 weight-4 sectors and the mixed example weigh exactly 2",
        start.elapsed(),
        BOUND_CONFORMAL,
    );
}

#[test]
fn criterion_10_griess_numerology() {
    let start = Instant::now();
    let table = bundled_griess_table();
    let consistency = check_griess_consistency(&table);
    let ok = consistency.all_pass()
        && consistency.total == 196884
        && consistency.weight2_total == 96256
        && consistency.weight_3_2_total == 4371;
    report(
        10,
        "Griess decomposition numerology",
        ok,
        "196884 = 1 + 1 + 96255 + 4371 + 96256; 96256 and 4371 components; tau = -1 on the 1/16 part",
        start.elapsed(),
        BOUND_GRIESS,
    );
}

#[test]
fn criterion_11_random_code_properties() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut ok = true;
    for _ in 0..RANDOM_CODE_COUNT {
        let code = random_small_code(&mut rng);
        let n = code.n();
        let k = code.k();
        let dual = code.dual();

        // Dual involution and annihilation.
        ok &= dual.k() == n - k;
        ok &= dual.dual() == code;
        ok &= code
            .generator_matrix()
            .rows()
            .iter()
            .all(|a| dual.generator_matrix().rows().iter().all(|b| !a.dot(b)));

        // Direct enumeration against the transform, both directions, and
        // the transform as an involution.
        let dist = direct_distribution(&code);
        let dual_dist = direct_distribution(&dual);
        let forward = macwilliams_transform(&dist, k).unwrap();
        let backward = macwilliams_transform(&dual_dist, dual.k()).unwrap();
        ok &= forward.counts() == dual_dist.counts();
        ok &= backward.counts() == dist.counts();
        let round_trip = macwilliams_transform(&forward, dual.k()).unwrap();
        ok &= round_trip.counts() == dist.counts();

        // Shorten / restrict / supported-subcode duality on one coordinate
        // and on a random coordinate subset.
        let complement: Vec<usize> = (1..n).collect();
        ok &= code.shorten(0).unwrap() == code.subcode_supported_on(&complement).unwrap();
        let subset: Vec<usize> = (0..n).filter(|_| rng.random()).collect();
        if !subset.is_empty() {
            let left = code.subcode_supported_on(&subset).unwrap();
            ok &= left.dual() == dual.restrict(&subset).unwrap();
        }
    }
    let detail = format!("{RANDOM_CODE_COUNT} seeded codes with n <= 12: duality, transform, shortening");
    report(
        11,
        "random code properties",
        ok,
        &detail,
        start.elapsed(),
        BOUND_RANDOM_CODES,
    );
}

fn random_small_code(rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let n = rng.random_range(2..=12usize);
        let rows = rng.random_range(1..=n);
        let mut m = fvoa::gf2::Gf2Matrix::empty(n);
        for _ in 0..rows {
            let bits: Vec<bool> = (0..n).map(|_| rng.random()).collect();
            m.push_row(Gf2Vector::from_bools(&bits));
        }
        let code = LinearCode::from_generators(&m).unwrap();
        if code.k() > 0 && code.k() < n {
            return code;
        }
    }
}

fn direct_distribution(code: &LinearCode) -> fvoa::codes::WeightDistribution {
    let mut counts = vec![BigUint::ZERO; code.n() + 1];
    for word in code.enumerate_codewords().unwrap() {
        counts[word.weight()] += 1u32;
    }
    fvoa::codes::WeightDistribution::from_counts(counts).unwrap()
}

#[test]
fn criterion_12_end_to_end_determinism() {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fvoa"))
            .args(["--seed", "0xB5", "--format", "json", "verify", "all"])
            .env_remove("FVOA_SEED")
            .output()
            .expect("verifier binary runs")
    };
    let first = run();
    let second = run();
    let mut ok = first.status.success() && second.status.success();

    let mut parsed: Vec<serde_json::Value> = [&first, &second]
        .iter()
        .map(|out| serde_json::from_slice(&out.stdout).expect("verifier emits JSON"))
        .collect();
    let claims = parsed[0]["claims"].as_array().expect("claims array").clone();
    ok &= !claims.is_empty();
    ok &= claims.iter().all(|c| c["status"] == "pass");
    let mut ids: Vec<&str> = claims.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let total = ids.len();
    ids.sort_unstable();
    ids.dedup();
    ok &= ids.len() == total;
    ok &= parsed[0]["overall"] == "pass";
    ok &= parsed[0]["schema"] == 1;

    // Byte-identical output once the wall-clock field is zeroed.
    for doc in parsed.iter_mut() {
        for claim in doc["claims"].as_array_mut().unwrap() {
            claim["elapsed_ms"] = 0.into();
        }
    }
    ok &= serde_json::to_string(&parsed[0]).unwrap() == serde_json::to_string(&parsed[1]).unwrap();

    let detail = format!("two identical runs, {total} claims all pass, exit 0");
    report(
        12,
        "end-to-end determinism",
        ok,
        &detail,
        start.elapsed(),
        BOUND_END_TO_END,
    );
}
