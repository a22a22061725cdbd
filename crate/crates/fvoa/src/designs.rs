//! Steiner systems S(3, 4, n): block sets in which every 3-subset of the
//! point set lies in exactly one block.

use std::collections::HashMap;

use crate::codes::binomial;
use crate::error::{Error, Result};

/// A verified Steiner system S(3, 4, n) with a triple-to-block index.
#[derive(Clone, Debug)]
pub struct SteinerSystem {
    n: usize,
    blocks: Vec<[usize; 4]>,
    by_triple: HashMap<[usize; 3], usize>,
}

fn normalize_block(block: [usize; 4], n: usize) -> Result<[usize; 4]> {
    let mut b = block;
    b.sort_unstable();
    if b[3] >= n {
        return Err(Error::InvalidArgument(format!(
            "block point {} out of range for {n} points",
            b[3]
        )));
    }
    if b.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!(
            "block {block:?} has repeated points"
        )));
    }
    Ok(b)
}

fn triples_of(b: [usize; 4]) -> [[usize; 3]; 4] {
    [
        [b[0], b[1], b[2]],
        [b[0], b[1], b[3]],
        [b[0], b[2], b[3]],
        [b[1], b[2], b[3]],
    ]
}

fn triple_count(n: usize) -> u64 {
    u64::try_from(binomial(n, 3)).expect("triple count fits in 64 bits")
}

/// Indexes the triples of every block; `Err(Design)` names a triple covered
/// twice.  Completeness is not checked here.
fn index_triples(
    blocks: &[[usize; 4]],
    n: usize,
) -> Result<(Vec<[usize; 4]>, HashMap<[usize; 3], usize>)> {
    let mut normalized = Vec::with_capacity(blocks.len());
    let mut by_triple = HashMap::with_capacity(4 * blocks.len());
    for (bi, &raw) in blocks.iter().enumerate() {
        let b = normalize_block(raw, n)?;
        for t in triples_of(b) {
            if let Some(&other) = by_triple.get(&t) {
                return Err(Error::Design(format!(
                    "triple {t:?} lies in two blocks, {:?} and {b:?}",
                    normalized[other]
                )));
            }
            by_triple.insert(t, bi);
        }
        normalized.push(b);
    }
    Ok((normalized, by_triple))
}

/// First 3-subset of {0, .., n-1} not covered by the index, in
/// lexicographic order.
fn first_uncovered(n: usize, by_triple: &HashMap<[usize; 3], usize>) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !by_triple.contains_key(&[a, b, c]) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Decides whether `blocks` forms an S(3, 4, n) on points {0, .., n-1}.
/// Malformed blocks are an error; a mere coverage failure is `Ok(false)`.
pub fn is_steiner_3_4(blocks: &[[usize; 4]], n: usize) -> Result<bool> {
    let mut normalized = Vec::with_capacity(blocks.len());
    for &raw in blocks {
        normalized.push(normalize_block(raw, n)?);
    }
    let mut by_triple = HashMap::with_capacity(4 * blocks.len());
    for b in &normalized {
        for t in triples_of(*b) {
            if by_triple.insert(t, ()).is_some() {
                return Ok(false);
            }
        }
    }
    // No triple is covered twice, so coverage is complete iff the counts
    // match: 4 triples per block against C(n, 3).
    Ok(by_triple.len() as u64 == triple_count(n))
}

impl SteinerSystem {
    /// Builds and fully verifies a Steiner system.  Failures name a
    /// violating triple: one covered twice, or the first one uncovered.
    pub fn build(blocks: &[[usize; 4]], n: usize) -> Result<Self> {
        let (mut normalized, by_triple) = index_triples(blocks, n)?;
        if by_triple.len() as u64 != triple_count(n) {
            let missing = first_uncovered(n, &by_triple)
                .expect("an undersized triple index leaves some triple uncovered");
            return Err(Error::Design(format!(
                "triple {missing:?} lies in no block ({} blocks cover {} of {} triples)",
                normalized.len(),
                by_triple.len(),
                triple_count(n)
            )));
        }
        // Canonical block order; re-point the index at the sorted positions.
        let mut order: Vec<usize> = (0..normalized.len()).collect();
        order.sort_unstable_by_key(|&i| normalized[i]);
        let mut rank_of = vec![0usize; normalized.len()];
        for (rank, &old) in order.iter().enumerate() {
            rank_of[old] = rank;
        }
        let by_triple = by_triple
            .into_iter()
            .map(|(t, bi)| (t, rank_of[bi]))
            .collect();
        normalized.sort_unstable();
        Ok(SteinerSystem {
            n,
            blocks: normalized,
            by_triple,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in lexicographic order.
    pub fn blocks(&self) -> &[[usize; 4]] {
        &self.blocks
    }

    /// The unique block containing the given 3 distinct points.
    pub fn block_through(&self, triple: [usize; 3]) -> Result<[usize; 4]> {
        let mut t = triple;
        t.sort_unstable();
        if t[2] >= self.n || t[0] == t[1] || t[1] == t[2] {
            return Err(Error::InvalidArgument(format!(
                "{triple:?} is not a 3-subset of {} points",
                self.n
            )));
        }
        match self.by_triple.get(&t) {
            Some(&bi) => Ok(self.blocks[bi]),
            None => Err(Error::Design(format!(
                "triple {t:?} lies in no block despite a verified system"
            ))),
        }
    }
}
