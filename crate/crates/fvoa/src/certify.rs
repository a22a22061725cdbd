//! Constructive certificates that weight-4 codewords span the dual frame
//! code, with and without a pinned coordinate.
//!
//! The decomposition never searches: every step looks up the unique Steiner
//! block through a deterministic triple of support coordinates, so a run is
//! reproducible and each emitted certificate is re-validated before return.

use std::collections::BTreeSet;

use crate::codes::LinearCode;
use crate::designs::{is_steiner_3_4, SteinerSystem};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// The three blocks of coordinates cut out by the first three rows of the
/// frame code generator matrix.
#[derive(Clone, Debug)]
pub struct BlockPartition {
    n: usize,
    blocks: [Vec<usize>; 3],
    block_of: Vec<u8>,
}

impl BlockPartition {
    /// Reads the partition off the first three rows of `m`, which must have
    /// disjoint supports covering every coordinate.
    pub fn from_matrix(m: &Gf2Matrix) -> Result<Self> {
        if m.n_rows() < 3 {
            return Err(Error::InvalidArgument(format!(
                "matrix has {} rows; the first three must cut out the blocks",
                m.n_rows()
            )));
        }
        let n = m.n_cols();
        let mut block_of = vec![u8::MAX; n];
        let mut blocks: [Vec<usize>; 3] = Default::default();
        for b in 0..3 {
            for i in m.row(b).iter_support() {
                if block_of[i] != u8::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "coordinate {i} lies in two of the first three rows"
                    )));
                }
                block_of[i] = b as u8;
                blocks[b].push(i);
            }
        }
        if let Some(missed) = block_of.iter().position(|&b| b == u8::MAX) {
            return Err(Error::InvalidArgument(format!(
                "coordinate {missed} lies in none of the first three rows"
            )));
        }
        Ok(BlockPartition { n, blocks, block_of })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coordinates of block `b`, increasing.
    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn block_of(&self, coord: usize) -> usize {
        self.block_of[coord] as usize
    }

    /// Sorted union of two blocks.
    pub fn pair_coords(&self, a: usize, b: usize) -> Vec<usize> {
        let mut coords: Vec<usize> = self.blocks[a]
            .iter()
            .chain(&self.blocks[b])
            .copied()
            .collect();
        coords.sort_unstable();
        coords
    }

    /// How many support coordinates of `v` fall in each block.
    pub fn support_counts(&self, v: &Gf2Vector) -> [usize; 3] {
        let mut counts = [0usize; 3];
        for i in v.iter_support() {
            counts[self.block_of(i)] += 1;
        }
        counts
    }
}

/// Block pairs in lexicographic order; ties in the decomposition are always
/// broken toward the earliest entry.
pub const BLOCK_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Index into [`BLOCK_PAIRS`] of the pair avoiding `block`.
pub fn pair_avoiding(block: usize) -> usize {
    match block {
        0 => 2, // (1, 2)
        1 => 1, // (0, 2)
        2 => 0, // (0, 1)
        other => panic!("block index {other} out of range"),
    }
}

struct PairTable {
    coords: Vec<usize>,
    system: SteinerSystem,
}

struct SingleTable {
    coords: Vec<usize>,
    system: SteinerSystem,
}

/// Steiner systems of the weight-4 codewords supported on each block pair
/// and on each single block, with global/local coordinate maps.
pub struct SteinerTables {
    n: usize,
    partition: BlockPartition,
    pairs: [PairTable; 3],
    singles: [SingleTable; 3],
}

fn system_from_subcode(code: &LinearCode, coords: &[usize]) -> Result<SteinerSystem> {
    let sub = code.subcode_supported_on(coords)?;
    let words = sub.words_of_weight(4)?;
    let blocks: Vec<[usize; 4]> = words
        .iter()
        .map(|w| {
            let s = w.support();
            [s[0], s[1], s[2], s[3]]
        })
        .collect();
    SteinerSystem::build(&blocks, coords.len())
}

fn to_local(coords: &[usize], global: usize) -> Result<usize> {
    coords.binary_search(&global).map_err(|_| {
        Error::InvalidArgument(format!(
            "coordinate {global} is outside the selected block set"
        ))
    })
}

fn lift_block(n: usize, coords: &[usize], block: [usize; 4]) -> Gf2Vector {
    let support: Vec<usize> = block.iter().map(|&l| coords[l]).collect();
    Gf2Vector::from_support(n, &support).expect("Steiner block lifts to a valid support")
}

impl SteinerTables {
    /// Extracts all six Steiner systems from the weight-4 words of `code`.
    /// Fails with a design error naming a violating triple if any of them
    /// is not an S(3, 4, n).
    pub fn build(code: &LinearCode, partition: &BlockPartition) -> Result<Self> {
        let pair_of = |idx: usize| -> Result<PairTable> {
            let (a, b) = BLOCK_PAIRS[idx];
            let coords = partition.pair_coords(a, b);
            Ok(PairTable {
                system: system_from_subcode(code, &coords)?,
                coords,
            })
        };
        let single_of = |b: usize| -> Result<SingleTable> {
            let coords = partition.block(b).to_vec();
            Ok(SingleTable {
                system: system_from_subcode(code, &coords)?,
                coords,
            })
        };
        Ok(SteinerTables {
            n: code.n(),
            partition: partition.clone(),
            pairs: [pair_of(0)?, pair_of(1)?, pair_of(2)?],
            singles: [single_of(0)?, single_of(1)?, single_of(2)?],
        })
    }

    pub fn partition(&self) -> &BlockPartition {
        &self.partition
    }

    pub fn pair_system(&self, idx: usize) -> &SteinerSystem {
        &self.pairs[idx].system
    }

    pub fn single_system(&self, block: usize) -> &SteinerSystem {
        &self.singles[block].system
    }

    /// The weight-4 codeword supported on block pair `idx` through three
    /// global coordinates, as a full-length vector.
    pub fn pair_word_through(&self, idx: usize, triple: [usize; 3]) -> Result<Gf2Vector> {
        let table = &self.pairs[idx];
        let mut local = [0usize; 3];
        for (l, &g) in local.iter_mut().zip(&triple) {
            *l = to_local(&table.coords, g)?;
        }
        let block = table.system.block_through(local)?;
        Ok(lift_block(self.n, &table.coords, block))
    }

    /// The weight-4 codeword supported on a single block through three
    /// global coordinates, as a full-length vector.
    pub fn single_word_through(&self, block: usize, triple: [usize; 3]) -> Result<Gf2Vector> {
        let table = &self.singles[block];
        let mut local = [0usize; 3];
        for (l, &g) in local.iter_mut().zip(&triple) {
            *l = to_local(&table.coords, g)?;
        }
        let found = table.system.block_through(local)?;
        Ok(lift_block(self.n, &table.coords, found))
    }
}

/// A verified decomposition of a codeword into weight-4 codewords.
#[derive(Clone, Debug)]
pub struct Weight4Certificate {
    target: Gf2Vector,
    parts: Vec<Gf2Vector>,
    fixed_coordinate: Option<usize>,
}

impl Weight4Certificate {
    pub fn target(&self) -> &Gf2Vector {
        &self.target
    }

    pub fn parts(&self) -> &[Gf2Vector] {
        &self.parts
    }

    /// For shortened certificates, the coordinate every part avoids.
    pub fn fixed_coordinate(&self) -> Option<usize> {
        self.fixed_coordinate
    }

    /// Re-checks everything the certificate asserts: every part is a
    /// weight-4 codeword (vanishing at the fixed coordinate, if any) and
    /// the parts sum to the target.
    pub fn validate(&self, code: &LinearCode) -> Result<()> {
        let mut sum = Gf2Vector::zeros(self.target.len());
        for part in &self.parts {
            if part.weight() != 4 {
                return Err(Error::consistency(
                    "certificate parts have weight 4",
                    format!("part of weight {}", part.weight()),
                ));
            }
            if !code.contains(part)? {
                return Err(Error::consistency(
                    "certificate parts are codewords",
                    format!("non-codeword part with support {:?}", part.support()),
                ));
            }
            if let Some(f) = self.fixed_coordinate {
                if part.get(f) {
                    return Err(Error::consistency(
                        "certificate parts vanish at the fixed coordinate",
                        format!("part with support {:?} hits coordinate {f}", part.support()),
                    ));
                }
            }
            sum.xor_assign(part);
        }
        if sum != self.target {
            return Err(Error::consistency(
                "certificate parts sum to the target",
                format!("parts sum to a word of weight {}", sum.weight()),
            ));
        }
        if let Some(f) = self.fixed_coordinate {
            if self.target.get(f) {
                return Err(Error::consistency(
                    "the target vanishes at the fixed coordinate",
                    format!("target hits coordinate {f}"),
                ));
            }
        }
        Ok(())
    }
}

/// Greedy Steiner-guided decomposition of `target` into weight-4 codewords.
///
/// While the residue has weight at least 6, two of the three blocks hold at
/// least 4 of its support coordinates; the Steiner word through the three
/// largest support coordinates in that pair overlaps the residue in at
/// least 3 places, so the weight drops by at least 2 per step.  (Any
/// deterministic choice of three coordinates works; taking the largest
/// keeps the walk from consuming a whole block before the others, which
/// lets the shortened variant exercise all of its rewriting branches.)
pub fn decompose_weight4(
    code: &LinearCode,
    tables: &SteinerTables,
    target: &Gf2Vector,
) -> Result<Weight4Certificate> {
    if !code.contains(target)? {
        return Err(Error::InvalidArgument(
            "decomposition target is not a codeword".into(),
        ));
    }
    let partition = tables.partition();
    let mut parts = Vec::new();
    let mut residue = target.clone();
    let mut budget = residue.weight() / 2 + 1;
    while residue.weight() >= 6 {
        if budget == 0 {
            return Err(Error::consistency(
                "each step reduces the residue weight",
                "step budget exhausted",
            ));
        }
        budget -= 1;
        let counts = partition.support_counts(&residue);
        let pair_idx = BLOCK_PAIRS
            .iter()
            .position(|&(a, b)| counts[a] + counts[b] >= 4)
            .ok_or_else(|| {
                Error::consistency(
                    "two blocks hold at least four support coordinates",
                    format!("block counts {counts:?}"),
                )
            })?;
        let (a, b) = BLOCK_PAIRS[pair_idx];
        let in_pair: Vec<usize> = residue
            .iter_support()
            .filter(|&i| {
                let blk = partition.block_of(i);
                blk == a || blk == b
            })
            .collect();
        debug_assert!(in_pair.len() >= 4);
        let tail = &in_pair[in_pair.len() - 3..];
        let triple = [tail[0], tail[1], tail[2]];
        let v = tables.pair_word_through(pair_idx, triple)?;
        let overlap = v.intersection_weight(&residue);
        if overlap < 3 {
            return Err(Error::consistency(
                "the Steiner word meets the residue in its chosen triple",
                format!("overlap {overlap}"),
            ));
        }
        residue.xor_assign(&v);
        parts.push(v);
    }
    match residue.weight() {
        0 => {}
        4 => parts.push(residue),
        w => {
            return Err(Error::consistency(
                "the code has minimum weight 4",
                format!("terminal residue of weight {w}"),
            ))
        }
    }
    let cert = Weight4Certificate {
        target: target.clone(),
        parts,
        fixed_coordinate: None,
    };
    cert.validate(code)?;
    Ok(cert)
}

/// How often each rewriting branch fired while repairing a shortened
/// certificate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShortenedBranchCounts {
    /// A pair of parts through the fixed coordinate summed directly to a
    /// weight-4 word.
    pub pair_weight4: usize,
    /// Weight-6 pair sum with at most 3 support coordinates in the fixed
    /// block, rewritten through the opposite block pair.
    pub cross_block: usize,
    /// Weight-6 pair sum with at least 4 support coordinates in the fixed
    /// block, rewritten through a single-block Steiner word.
    pub fixed_block: usize,
}

impl ShortenedBranchCounts {
    pub fn absorb(&mut self, other: ShortenedBranchCounts) {
        self.pair_weight4 += other.pair_weight4;
        self.cross_block += other.cross_block;
        self.fixed_block += other.fixed_block;
    }

    pub fn all_covered(&self) -> bool {
        self.pair_weight4 > 0 && self.cross_block > 0 && self.fixed_block > 0
    }
}

/// Like [`decompose_weight4`], but every emitted part avoids the coordinate
/// `fixed`, so the certificate descends to the code shortened there.
///
/// Parts of the unconstrained certificate that hit `fixed` come in pairs
/// (the target avoids it); after cancelling equal parts, each remaining
/// pair sums to a word of weight 4 or 6 avoiding `fixed`, and the weight-6
/// sums are rewritten as two weight-4 words via one Steiner lookup that
/// provably avoids `fixed`.
pub fn decompose_weight4_shortened(
    code: &LinearCode,
    tables: &SteinerTables,
    fixed: usize,
    target: &Gf2Vector,
) -> Result<(Weight4Certificate, ShortenedBranchCounts)> {
    if fixed >= code.n() {
        return Err(Error::InvalidArgument(format!(
            "fixed coordinate {fixed} out of range for length {}",
            code.n()
        )));
    }
    if target.get(fixed) {
        return Err(Error::InvalidArgument(format!(
            "decomposition target must vanish at the fixed coordinate {fixed}"
        )));
    }
    let base = decompose_weight4(code, tables, target)?;
    let partition = tables.partition();
    let fixed_block = partition.block_of(fixed);
    let mut clean = Vec::new();
    let mut dirty = Vec::new();
    for part in base.parts {
        if part.get(fixed) {
            dirty.push(part);
        } else {
            clean.push(part);
        }
    }
    if dirty.len() % 2 != 0 {
        return Err(Error::consistency(
            "parts hitting the fixed coordinate pair up",
            format!("{} such parts", dirty.len()),
        ));
    }
    // Cancel equal parts, then pair the rest in sorted order.
    dirty.sort();
    let mut remainder: Vec<Gf2Vector> = Vec::new();
    for part in dirty {
        if remainder.last() == Some(&part) {
            remainder.pop();
        } else {
            remainder.push(part);
        }
    }
    let mut counts = ShortenedBranchCounts::default();
    for pair in remainder.chunks(2) {
        let mut d = pair[0].clone();
        d.xor_assign(&pair[1]);
        debug_assert!(!d.get(fixed));
        match d.weight() {
            4 => {
                counts.pair_weight4 += 1;
                clean.push(d);
            }
            6 => {
                let in_fixed = d
                    .iter_support()
                    .filter(|&i| partition.block_of(i) == fixed_block)
                    .count();
                let v = if in_fixed <= 3 {
                    counts.cross_block += 1;
                    // At least 3 support coordinates lie in the other two
                    // blocks; the Steiner word through the smallest three
                    // is supported away from the fixed block entirely.
                    let mut triple = [0usize; 3];
                    let mut found = 0;
                    for i in d.iter_support() {
                        if partition.block_of(i) != fixed_block {
                            triple[found] = i;
                            found += 1;
                            if found == 3 {
                                break;
                            }
                        }
                    }
                    debug_assert_eq!(found, 3);
                    tables.pair_word_through(pair_avoiding(fixed_block), triple)?
                } else {
                    counts.fixed_block += 1;
                    // The two triples out of the smallest four support
                    // coordinates in the fixed block share two points, so
                    // their Steiner blocks are distinct and at most one of
                    // them passes through the fixed coordinate.
                    let mut quad = [0usize; 4];
                    let mut found = 0;
                    for i in d.iter_support() {
                        if partition.block_of(i) == fixed_block {
                            quad[found] = i;
                            found += 1;
                            if found == 4 {
                                break;
                            }
                        }
                    }
                    debug_assert_eq!(found, 4);
                    let first = tables
                        .single_word_through(fixed_block, [quad[0], quad[1], quad[2]])?;
                    let second = tables
                        .single_word_through(fixed_block, [quad[1], quad[2], quad[3]])?;
                    if first == second {
                        return Err(Error::consistency(
                            "the code has minimum weight 4",
                            "a Steiner block lies inside a weight-6 residue",
                        ));
                    }
                    if first.get(fixed) && second.get(fixed) {
                        return Err(Error::consistency(
                            "at most one candidate Steiner word hits the fixed coordinate",
                            format!(
                                "both words through {:?} hit coordinate {fixed}",
                                &quad[..]
                            ),
                        ));
                    }
                    if !first.get(fixed) {
                        first
                    } else {
                        second
                    }
                };
                debug_assert!(!v.get(fixed));
                let mut e = d.clone();
                e.xor_assign(&v);
                if e.weight() != 4 {
                    return Err(Error::consistency(
                        "the code has minimum weight 4",
                        format!("weight-6 residue splits off weight {}", e.weight()),
                    ));
                }
                clean.push(v);
                clean.push(e);
            }
            w => {
                return Err(Error::consistency(
                    "pair sums of distinct weight-4 words have weight 4 or 6",
                    format!("got weight {w}"),
                ))
            }
        }
    }
    let cert = Weight4Certificate {
        target: target.clone(),
        parts: clean,
        fixed_coordinate: Some(fixed),
    };
    cert.validate(code)?;
    Ok((cert, counts))
}

/// Rank of the span of all codewords whose weight lies in `weights`.
pub fn span_dimension_of_weight_words(code: &LinearCode, weights: &[usize]) -> Result<usize> {
    let unique: BTreeSet<usize> = weights.iter().copied().collect();
    let mut m = Gf2Matrix::empty(code.n());
    for &w in &unique {
        if w == 0 {
            continue;
        }
        for word in code.words_of_weight(w)? {
            m.push_row(word);
        }
    }
    Ok(m.rank())
}

/// Whether the codewords with weights in `weights` span the whole code.
pub fn generated_by_weights(code: &LinearCode, weights: &[usize]) -> Result<bool> {
    Ok(span_dimension_of_weight_words(code, weights)? == code.k())
}

/// Outcome of matching a two-block subcode against the extended Hamming
/// code: parameters, canonical duality with the restriction of the frame
/// code, minimum weight, and the Steiner property of its weight-4 words.
#[derive(Clone, Debug)]
pub struct HammingIdentification {
    pub length: usize,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub restriction_dimension: usize,
    pub dual_matches_restriction: bool,
    pub minimum_weight: Option<usize>,
    pub steiner_block_count: usize,
    pub steiner_ok: bool,
}

impl HammingIdentification {
    pub fn passes(&self) -> bool {
        self.dual_matches_restriction
            && self.dimension == self.expected_dimension
            && self.minimum_weight == Some(4)
            && self.steiner_ok
    }
}

/// Verifies that the subcode of `code` supported on `coords` is the dual of
/// the restriction of `sixteenth_code` there, has minimum weight 4, and
/// carries an S(3, 4, |coords|) on its weight-4 supports.
pub fn verify_hamming_identification(
    code: &LinearCode,
    sixteenth_code: &LinearCode,
    coords: &[usize],
) -> Result<HammingIdentification> {
    let sub = code.subcode_supported_on(coords)?;
    let restriction = sixteenth_code.restrict(coords)?;
    let dual_matches_restriction = sub.dual() == restriction;
    let expected_dimension = coords.len() - restriction.k();
    let minimum_weight = match sub.minimum_weight() {
        Ok(w) => Some(w),
        Err(Error::InvalidArgument(_)) => None, // zero code
        Err(e) => return Err(e),
    };
    let words = sub.words_of_weight(4)?;
    let blocks: Vec<[usize; 4]> = words
        .iter()
        .map(|w| {
            let s = w.support();
            [s[0], s[1], s[2], s[3]]
        })
        .collect();
    let steiner_ok = is_steiner_3_4(&blocks, coords.len())?;
    Ok(HammingIdentification {
        length: coords.len(),
        dimension: sub.k(),
        expected_dimension,
        restriction_dimension: restriction.k(),
        dual_matches_restriction,
        minimum_weight,
        steiner_block_count: blocks.len(),
        steiner_ok,
    })
}
