//! Binary linear codes with exact weight enumeration.
//!
//! A code is held as the reduced row echelon form of its generator matrix,
//! which is a canonical basis of the row space: two codes are equal iff
//! their stored generators are equal.  Weight distributions are available
//! along two independent routes — direct enumeration when the dimension is
//! small, and the MacWilliams transform of the dual distribution when the
//! codimension is small — and both are exact integer computations.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Largest dimension for which full codeword enumeration (2^k words) is
/// allowed.
pub const ENUMERATION_MAX_DIM: usize = 28;

/// Largest number of coordinate subsets a weight-w scan may visit.
pub const SCAN_MAX_SUBSETS: u64 = 10_000_000;

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

/// A binary linear code of length `n` and dimension `k`.
#[derive(Clone)]
pub struct LinearCode {
    gen: Gf2Matrix,
    dual_gen: OnceLock<Gf2Matrix>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearCode[{}, {}]", self.n(), self.k())
    }
}

impl LinearCode {
    /// Builds the code spanned by the rows of `rows`.  Dependent or
    /// repeated rows are fine; a zero-row matrix gives the zero code.
    pub fn from_generators(rows: &Gf2Matrix) -> Result<Self> {
        if rows.n_cols() == 0 {
            return Err(Error::InvalidArgument(
                "a code needs at least one coordinate".into(),
            ));
        }
        let (gen, _) = rows.rref();
        Ok(LinearCode {
            gen,
            dual_gen: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.gen.n_cols()
    }

    pub fn k(&self) -> usize {
        self.gen.n_rows()
    }

    /// Canonical (reduced echelon) generator matrix.
    pub fn generator_matrix(&self) -> &Gf2Matrix {
        &self.gen
    }

    fn dual_matrix(&self) -> &Gf2Matrix {
        self.dual_gen
            .get_or_init(|| self.gen.kernel_basis().rref().0)
    }

    /// The dual code under the standard inner product.
    pub fn dual(&self) -> LinearCode {
        let code = LinearCode {
            gen: self.dual_matrix().clone(),
            dual_gen: OnceLock::new(),
        };
        // The dual of the dual is this code; seed the cache so the round
        // trip is exact and free.
        let _ = code.dual_gen.set(self.gen.clone());
        code
    }

    /// Membership test: `w` is a codeword iff it annihilates every dual
    /// generator.
    pub fn contains(&self, w: &Gf2Vector) -> Result<bool> {
        if w.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "word length {} does not match code length {}",
                w.len(),
                self.n()
            )));
        }
        Ok(self.dual_matrix().rows().iter().all(|d| !d.dot(w)))
    }

    /// Iterates all 2^k codewords in Gray-code order: consecutive words
    /// differ by a single generator row, starting from the zero word.
    /// Guarded by [`ENUMERATION_MAX_DIM`].
    pub fn enumerate_codewords(&self) -> Result<CodewordEnumerator<'_>> {
        if self.k() > ENUMERATION_MAX_DIM {
            return Err(Error::ResourceGuard(format!(
                "dimension {} exceeds the enumeration bound {}",
                self.k(),
                ENUMERATION_MAX_DIM
            )));
        }
        Ok(CodewordEnumerator {
            gen: &self.gen,
            current: Gf2Vector::zeros(self.n()),
            index: 0,
            total: 1u64 << self.k(),
        })
    }

    fn tally_weights(&self) -> Result<WeightDistribution> {
        let mut counts = vec![BigUint::zero(); self.n() + 1];
        for w in self.enumerate_codewords()? {
            counts[w.weight()] += 1u32;
        }
        Ok(WeightDistribution { counts })
    }

    /// Exact weight distribution.  Enumerates directly when the dimension
    /// allows it and is the cheaper side, otherwise enumerates the dual and
    /// applies the MacWilliams transform; errors if both `k` and `n - k`
    /// exceed the enumeration bound.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let k = self.k();
        let codim = self.n() - k;
        let direct_ok = k <= ENUMERATION_MAX_DIM;
        let via_dual_ok = codim <= ENUMERATION_MAX_DIM;
        if direct_ok && (!via_dual_ok || k <= codim) {
            self.tally_weights()
        } else if via_dual_ok {
            let dual_dist = self.dual().tally_weights()?;
            macwilliams_transform(&dual_dist, codim)
        } else {
            Err(Error::ResourceGuard(format!(
                "dimension {k} and codimension {codim} both exceed the enumeration bound {ENUMERATION_MAX_DIM}"
            )))
        }
    }

    /// Smallest weight of a nonzero codeword.
    pub fn minimum_weight(&self) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::InvalidArgument(
                "the zero code has no nonzero codeword".into(),
            ));
        }
        let dist = self.weight_distribution()?;
        dist.min_positive_weight().ok_or_else(|| {
            Error::consistency(
                "a positive-dimensional code has a nonzero codeword",
                "weight distribution had no positive entry",
            )
        })
    }

    /// All codewords of weight exactly `w`, in increasing support order.
    ///
    /// Uses whichever of the two routes is in budget and cheaper: scanning
    /// the weight-w subsets of the coordinates (each candidate checked with
    /// [`LinearCode::contains`]) or filtering the full codeword enumeration.
    /// Every returned word is re-checked for membership.
    pub fn words_of_weight(&self, w: usize) -> Result<Vec<Gf2Vector>> {
        let n = self.n();
        if w == 0 {
            return Ok(vec![Gf2Vector::zeros(n)]);
        }
        if w > n {
            return Ok(Vec::new());
        }
        let scan_cost = binomial(n, w);
        let scan_ok = scan_cost <= BigUint::from(SCAN_MAX_SUBSETS);
        let enum_ok = self.k() <= ENUMERATION_MAX_DIM;
        let enum_cheaper = scan_cost > BigUint::from(1u64 << self.k().min(63));
        let words = if enum_ok && (!scan_ok || enum_cheaper) {
            let mut words: Vec<Gf2Vector> = self
                .enumerate_codewords()?
                .filter(|c| c.weight() == w)
                .collect();
            words.sort();
            words
        } else if scan_ok {
            let mut words = Vec::new();
            let mut subset = SubsetScan::new(n, w);
            while let Some(coords) = subset.next() {
                let v = Gf2Vector::from_support(n, coords)?;
                if self.contains(&v)? {
                    words.push(v);
                }
            }
            words
        } else {
            return Err(Error::ResourceGuard(format!(
                "neither enumeration (k = {}) nor subset scan (C({n}, {w}) = {scan_cost}) is in budget",
                self.k()
            )));
        };
        for word in &words {
            if !self.contains(word)? {
                return Err(Error::consistency(
                    "weight enumeration yields codewords",
                    format!("non-codeword of weight {w} produced"),
                ));
            }
        }
        Ok(words)
    }

    /// Shortening at coordinate `i`: codewords vanishing at `i`, with the
    /// coordinate deleted.
    pub fn shorten(&self, i: usize) -> Result<LinearCode> {
        if i >= self.n() {
            return Err(Error::InvalidArgument(format!(
                "shortening coordinate {i} out of range for length {}",
                self.n()
            )));
        }
        if self.n() == 1 {
            return Err(Error::InvalidArgument(
                "cannot shorten a length-1 code to length 0".into(),
            ));
        }
        let mut rows = self.gen.rows().to_vec();
        if let Some(pos) = rows.iter().position(|r| r.get(i)) {
            let pivot = rows.remove(pos);
            for r in rows.iter_mut() {
                if r.get(i) {
                    r.xor_assign(&pivot);
                }
            }
        }
        let mut m = Gf2Matrix::empty(self.n() - 1);
        for r in &rows {
            m.push_row(r.delete_coordinate(i));
        }
        LinearCode::from_generators(&m)
    }

    /// Restriction (projection) of the code to the coordinates in `coords`,
    /// which must be strictly increasing and in range.
    pub fn restrict(&self, coords: &[usize]) -> Result<LinearCode> {
        validate_coords(coords, self.n())?;
        let mut m = Gf2Matrix::empty(coords.len());
        for r in self.gen.rows() {
            m.push_row(r.restrict(coords));
        }
        LinearCode::from_generators(&m)
    }

    /// The subcode of words supported inside `coords`, viewed on those
    /// coordinates: shortens at every coordinate outside `coords`.
    pub fn subcode_supported_on(&self, coords: &[usize]) -> Result<LinearCode> {
        validate_coords(coords, self.n())?;
        let keep: Vec<bool> = {
            let mut keep = vec![false; self.n()];
            for &c in coords {
                keep[c] = true;
            }
            keep
        };
        let mut code = self.clone();
        for i in (0..self.n()).rev() {
            if !keep[i] {
                code = code.shorten(i)?;
            }
        }
        Ok(code)
    }
}

fn validate_coords(coords: &[usize], n: usize) -> Result<()> {
    if coords.is_empty() {
        return Err(Error::InvalidArgument(
            "coordinate set must be nonempty".into(),
        ));
    }
    for pair in coords.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::InvalidArgument(format!(
                "coordinate set must be strictly increasing, got {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    let &last = coords.last().unwrap();
    if last >= n {
        return Err(Error::InvalidArgument(format!(
            "coordinate {last} out of range for length {n}"
        )));
    }
    Ok(())
}

/// Gray-code iterator over all codewords: word `t` differs from word `t-1`
/// by generator row `trailing_zeros(t)`.
pub struct CodewordEnumerator<'a> {
    gen: &'a Gf2Matrix,
    current: Gf2Vector,
    index: u64,
    total: u64,
}

impl Iterator for CodewordEnumerator<'_> {
    type Item = Gf2Vector;

    fn next(&mut self) -> Option<Gf2Vector> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(self.gen.row(flip));
        }
        self.index += 1;
        Some(self.current.clone())
    }
}

/// Lexicographic scan over the w-subsets of {0, .., n-1}.
struct SubsetScan {
    n: usize,
    indices: Vec<usize>,
    started: bool,
    done: bool,
}

impl SubsetScan {
    fn new(n: usize, w: usize) -> Self {
        SubsetScan {
            n,
            indices: (0..w).collect(),
            started: false,
            done: w > n,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        let w = self.indices.len();
        let mut i = w;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.indices[i] < self.n - w + i {
                self.indices[i] += 1;
                for j in i + 1..w {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                return Some(&self.indices);
            }
        }
    }
}

/// Exact weight distribution: `count(w)` codewords of weight `w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn from_counts(counts: Vec<BigUint>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidArgument(
                "a weight distribution needs an entry for weight 0".into(),
            ));
        }
        Ok(WeightDistribution { counts })
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..=self.n()).find(|&w| !self.counts[w].is_zero())
    }

    /// The nonzero entries as (weight, count) pairs.
    pub fn nonzero(&self) -> Vec<(usize, &BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c))
            .collect()
    }

    /// Convenience for comparing against small frozen tables.
    pub fn matches(&self, expected: &[(usize, u64)]) -> bool {
        let map: BTreeMap<usize, BigUint> =
            expected.iter().map(|&(w, c)| (w, BigUint::from(c))).collect();
        (0..=self.n()).all(|w| {
            let want = map.get(&w).cloned().unwrap_or_else(BigUint::zero);
            self.counts[w] == want
        })
    }
}

/// Krawtchouk polynomial value K_j(i; n) = sum_t (-1)^t C(i, t) C(n-i, j-t).
pub fn krawtchouk(j: usize, i: usize, n: usize) -> BigInt {
    let lo = j.saturating_sub(n - i);
    let hi = i.min(j);
    let mut acc = BigInt::zero();
    for t in lo..=hi {
        let term = BigInt::from_biguint(
            if t % 2 == 0 { Sign::Plus } else { Sign::Minus },
            binomial(i, t) * binomial(n - i, j - t),
        );
        acc += term;
    }
    acc
}

/// MacWilliams transform: from the exact distribution of a dimension-`k`
/// code of length n, computes the distribution of its dual,
/// `A'_j = 2^{-k} * sum_i A_i K_j(i; n)`.  Every division must be exact; a
/// remainder means the input was not the distribution of a linear code.
pub fn macwilliams_transform(dist: &WeightDistribution, k: usize) -> Result<WeightDistribution> {
    let n = dist.n();
    if !dist.count(0).is_one() {
        return Err(Error::InvalidArgument(
            "weight distribution must count the zero word exactly once".into(),
        ));
    }
    if dist.total() != BigUint::one() << k {
        return Err(Error::InvalidArgument(format!(
            "weight distribution total {} is not 2^{k}",
            dist.total()
        )));
    }
    let size = BigInt::one() << k;
    let counts_int: Vec<BigInt> = dist
        .counts
        .iter()
        .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
        .collect();
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut sum = BigInt::zero();
        for (i, a) in counts_int.iter().enumerate() {
            if !a.is_zero() {
                sum += a * krawtchouk(j, i, n);
            }
        }
        if sum.is_negative() || !(&sum % &size).is_zero() {
            return Err(Error::consistency(
                "MacWilliams sums are nonnegative multiples of the code size",
                format!("weight {j}: sum {sum} not divisible by 2^{k}"),
            ));
        }
        let (_, digits) = (sum / &size).into_parts();
        out.push(digits);
    }
    WeightDistribution::from_counts(out)
}

/// First-order Reed-Muller code of length 2^m: spanned by the all-ones
/// word and the m coordinate-bit indicators.
pub fn rm1(m: usize) -> Result<LinearCode> {
    if !(2..=10).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "rm1 parameter m = {m} outside the supported range 2..=10"
        )));
    }
    let n = 1usize << m;
    let mut rows = Vec::with_capacity(m + 1);
    rows.push(Gf2Vector::from_bools(&vec![true; n]));
    for b in (0..m).rev() {
        let mut v = Gf2Vector::zeros(n);
        for x in 0..n {
            if x >> b & 1 == 1 {
                v.set(x, true);
            }
        }
        rows.push(v);
    }
    LinearCode::from_generators(&Gf2Matrix::from_rows(rows)?)
}

/// Extended Hamming code of length 2^m, the dual of [`rm1`].
pub fn extended_hamming(m: usize) -> Result<LinearCode> {
    Ok(rm1(m)?.dual())
}

/// Bundled generator matrix of the 1/16-sector frame code D of the
/// moonshine module: three 16-coordinate block indicators plus the four
/// in-block halving patterns repeated across all blocks.
pub const MOONSHINE_MATRIX_TEXT: &str = include_str!("../data/frame_code_d.txt");

pub fn moonshine_matrix() -> Gf2Matrix {
    parse_generator_matrix(MOONSHINE_MATRIX_TEXT).expect("bundled matrix is well-formed")
}

/// The [48, 7] frame code D spanned by the bundled matrix.
pub fn moonshine_code_d() -> LinearCode {
    LinearCode::from_generators(&moonshine_matrix()).expect("bundled matrix spans a code")
}

/// The [48, 41] dual code C of the bundled frame code.
pub fn moonshine_code_c() -> LinearCode {
    moonshine_code_d().dual()
}

/// Parses a generator matrix from text: one row per line of `0`/`1`
/// characters; spaces, tabs and underscores are ignored, `#` starts a
/// comment, blank lines are skipped.  Rows must all have the same length.
pub fn parse_generator_matrix(text: &str) -> Result<Gf2Matrix> {
    let mut rows: Vec<Gf2Vector> = Vec::new();
    let mut cols = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut bits = Vec::new();
        for c in content.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                ' ' | '\t' | '_' | '\r' => {}
                other => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unexpected character {other:?} in matrix row"),
                    })
                }
            }
        }
        if bits.is_empty() {
            continue;
        }
        if rows.is_empty() {
            cols = bits.len();
        } else if bits.len() != cols {
            return Err(Error::Parse {
                line,
                msg: format!("row has {} columns, expected {cols}", bits.len()),
            });
        }
        rows.push(Gf2Vector::from_bools(&bits));
    }
    if rows.is_empty() {
        return Err(Error::InvalidArgument(
            "matrix text contains no rows".into(),
        ));
    }
    Gf2Matrix::from_rows(rows)
}

/// Renders a matrix in the text format accepted by
/// [`parse_generator_matrix`]; `parse(emit(m)) == m`.
pub fn emit_generator_matrix(m: &Gf2Matrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        for i in 0..row.len() {
            out.push(if row.get(i) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
