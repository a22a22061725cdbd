//! The Ising fusion ring, sector labels and their sign characters, the
//! frame code axioms, and the frozen Griess algebra decomposition table.

use serde::{Deserialize, Serialize};

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::rational::Rational;

/// Irreducible labels of the c = 1/2 Virasoro algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FusionLabel {
    Vacuum,
    Half,
    Sixteenth,
}

impl FusionLabel {
    pub const ALL: [FusionLabel; 3] =
        [FusionLabel::Vacuum, FusionLabel::Half, FusionLabel::Sixteenth];

    /// Conformal weight of the label: 0, 1/2 or 1/16.
    pub fn conformal_weight(self) -> Rational {
        Rational::new(self.sixteenths(), 16)
    }

    fn sixteenths(self) -> i64 {
        match self {
            FusionLabel::Vacuum => 0,
            FusionLabel::Half => 8,
            FusionLabel::Sixteenth => 1,
        }
    }
}

/// Fusion multiplicity N(a, b; c).  The nonzero values are all 1; the ring
/// is associative only because multiplicities are tracked, e.g. the triple
/// product of `Sixteenth` with itself contains `Sixteenth` twice.
pub fn fusion_multiplicity(a: FusionLabel, b: FusionLabel, c: FusionLabel) -> u32 {
    use FusionLabel::*;
    let m = match (a, b, c) {
        (Vacuum, x, y) | (x, Vacuum, y) => x == y,
        (Half, Half, y) => y == Vacuum,
        (Half, Sixteenth, y) | (Sixteenth, Half, y) => y == Sixteenth,
        (Sixteenth, Sixteenth, y) => y != Sixteenth,
    };
    u32::from(m)
}

/// Labels appearing in the product a x b, in `ALL` order.
pub fn fuse(a: FusionLabel, b: FusionLabel) -> Vec<FusionLabel> {
    FusionLabel::ALL
        .into_iter()
        .filter(|&c| fusion_multiplicity(a, b, c) > 0)
        .collect()
}

/// Multiplicity of `d` in the left-associated triple product (a x b) x c.
pub fn triple_product_multiplicity(
    a: FusionLabel,
    b: FusionLabel,
    c: FusionLabel,
    d: FusionLabel,
) -> u32 {
    FusionLabel::ALL
        .into_iter()
        .map(|e| fusion_multiplicity(a, b, e) * fusion_multiplicity(e, c, d))
        .sum()
}

/// Total conformal weight of a label list: the sum of the coordinate
/// weights, exact in sixteenths.
pub fn conformal_weight(labels: &[FusionLabel]) -> Rational {
    let sixteenths: i64 = labels.iter().map(|l| l.sixteenths()).sum();
    Rational::new(sixteenths, 16)
}

/// Labels of an untwisted sector: `Half` on the support of a word of the
/// 1/2 code, `Vacuum` elsewhere.
pub fn untwisted_labels(word: &Gf2Vector) -> Vec<FusionLabel> {
    (0..word.len())
        .map(|i| {
            if word.get(i) {
                FusionLabel::Half
            } else {
                FusionLabel::Vacuum
            }
        })
        .collect()
}

/// A sector of the framed module, named by a codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectorLabel {
    /// Untwisted sector: the word lives in the 1/2 code.
    Untwisted(Gf2Vector),
    /// Twisted sector: the word lives in the 1/16 code.
    Twisted(Gf2Vector),
}

/// The two families of frame involutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MiyamotoKind {
    /// Acts on twisted sectors by the sign of the 1/16-coordinate.
    Tau,
    /// Acts on untwisted sectors by the sign of the 1/2-coordinate.
    Sigma,
}

/// Sign of the `coordinate`-th frame involution of the given kind on a
/// sector: -1 exactly when the sector word is 1 there.
pub fn miyamoto_sign(kind: MiyamotoKind, coordinate: usize, sector: &SectorLabel) -> Result<i32> {
    let word = match (kind, sector) {
        (MiyamotoKind::Tau, SectorLabel::Twisted(w)) => w,
        (MiyamotoKind::Sigma, SectorLabel::Untwisted(w)) => w,
        (MiyamotoKind::Tau, SectorLabel::Untwisted(_)) => {
            return Err(Error::InvalidArgument(
                "tau involutions act on twisted sectors only".into(),
            ))
        }
        (MiyamotoKind::Sigma, SectorLabel::Twisted(_)) => {
            return Err(Error::InvalidArgument(
                "sigma involutions act on untwisted sectors only".into(),
            ))
        }
    };
    if coordinate >= word.len() {
        return Err(Error::InvalidArgument(format!(
            "coordinate {coordinate} out of range for frame size {}",
            word.len()
        )));
    }
    Ok(if word.get(coordinate) { -1 } else { 1 })
}

/// The pair of binary codes describing a framed module: the 1/2 code C and
/// the 1/16 code D on a common frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameCodePair {
    half: LinearCode,
    sixteenth: LinearCode,
}

impl FrameCodePair {
    pub fn new(half: LinearCode, sixteenth: LinearCode) -> Result<Self> {
        if half.n() != sixteenth.n() {
            return Err(Error::DimensionMismatch(format!(
                "code lengths differ: {} vs {}",
                half.n(),
                sixteenth.n()
            )));
        }
        Ok(FrameCodePair { half, sixteenth })
    }

    /// The bundled pair: D spanned by the frame matrix, C its dual.
    pub fn moonshine() -> Self {
        let d = crate::codes::moonshine_code_d();
        let c = d.dual();
        FrameCodePair {
            half: c,
            sixteenth: d,
        }
    }

    pub fn frame_size(&self) -> usize {
        self.half.n()
    }

    pub fn half_code(&self) -> &LinearCode {
        &self.half
    }

    pub fn sixteenth_code(&self) -> &LinearCode {
        &self.sixteenth
    }

    /// Validated untwisted sector label.
    pub fn untwisted_sector(&self, word: &Gf2Vector) -> Result<SectorLabel> {
        if !self.half.contains(word)? {
            return Err(Error::InvalidArgument(
                "untwisted sector words must lie in the 1/2 code".into(),
            ));
        }
        Ok(SectorLabel::Untwisted(word.clone()))
    }

    /// Validated twisted sector label.
    pub fn twisted_sector(&self, word: &Gf2Vector) -> Result<SectorLabel> {
        if !self.sixteenth.contains(word)? {
            return Err(Error::InvalidArgument(
                "twisted sector words must lie in the 1/16 code".into(),
            ));
        }
        Ok(SectorLabel::Twisted(word.clone()))
    }
}

/// Result of checking the three frame code axioms, with a witness for each
/// failure.
#[derive(Clone, Debug)]
pub struct FrameAxiomReport {
    /// Every word of D annihilates every word of C.
    pub orthogonal: bool,
    /// Offending (D-generator, C-generator) row indices.
    pub orthogonality_witness: Option<(usize, usize)>,
    /// Every word of C has even weight.
    pub half_code_even: bool,
    /// Offending C-generator row index.
    pub evenness_witness: Option<usize>,
    /// Every word of D has weight divisible by 8.
    pub weights_divisible_by_8: bool,
    /// Offending word of D.
    pub divisibility_witness: Option<Gf2Vector>,
}

impl FrameAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.orthogonal && self.half_code_even && self.weights_divisible_by_8
    }
}

/// Checks the frame code axioms for a pair: D pairs to zero with C, C is
/// even, and every D weight is a multiple of 8.  The first two reduce to
/// generator checks; the third enumerates D (so D must be within the
/// enumeration bound).
pub fn check_frame_axioms(pair: &FrameCodePair) -> Result<FrameAxiomReport> {
    let c = pair.half_code();
    let d = pair.sixteenth_code();
    let mut orthogonality_witness = None;
    'outer: for (di, drow) in d.generator_matrix().rows().iter().enumerate() {
        for (ci, crow) in c.generator_matrix().rows().iter().enumerate() {
            if drow.dot(crow) {
                orthogonality_witness = Some((di, ci));
                break 'outer;
            }
        }
    }
    // Weight parity is additive over GF(2), so even generators span an
    // even code.
    let evenness_witness = c
        .generator_matrix()
        .rows()
        .iter()
        .position(|r| r.weight() % 2 != 0);
    let mut divisibility_witness = None;
    for word in d.enumerate_codewords()? {
        if word.weight() % 8 != 0 {
            divisibility_witness = Some(word);
            break;
        }
    }
    Ok(FrameAxiomReport {
        orthogonal: orthogonality_witness.is_none(),
        orthogonality_witness,
        half_code_even: evenness_witness.is_none(),
        evenness_witness,
        weights_divisible_by_8: divisibility_witness.is_none(),
        divisibility_witness,
    })
}

/// Shortens both codes of the pair at coordinate `i` and re-checks the
/// frame axioms on the result; axiom failure after shortening is a
/// consistency error.
pub fn derive_shorter_pair(pair: &FrameCodePair, i: usize) -> Result<FrameCodePair> {
    let shorter = FrameCodePair::new(
        pair.half_code().shorten(i)?,
        pair.sixteenth_code().shorten(i)?,
    )?;
    let axioms = check_frame_axioms(&shorter)?;
    if !axioms.all_pass() {
        return Err(Error::consistency(
            "shortening preserves the frame code axioms",
            format!(
                "orthogonal: {}, even: {}, weights divisible by 8: {}",
                axioms.orthogonal, axioms.half_code_even, axioms.weights_divisible_by_8
            ),
        ));
    }
    Ok(shorter)
}

/// Dimension of the weight-2 space of the moonshine module (the leading
/// character coefficient after the constant term).
pub const MOONSHINE_WEIGHT2_DIM: u64 = 196_884;

/// Dimension of the weight-2 space of the shorter module.
pub const SHORTER_WEIGHT2_DIM: u64 = 96_256;

/// Dimension of the weight-3/2 space of the shorter module.
pub const SHORTER_WEIGHT_3_2_DIM: u64 = 4_371;

/// Frozen decomposition of the moonshine weight-2 space under a frame
/// axis: component dimensions, the axis eigenvalue and tau sign on each
/// component, and the two axis normalization scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GriessTable {
    pub dims: Vec<u64>,
    pub axis_eigenvalues: Vec<Rational>,
    pub tau_eigenvalues: Vec<i64>,
    pub lambda_tau: Rational,
    pub lambda_sigma: Rational,
}

pub const GRIESS_TABLE_JSON: &str = include_str!("../data/griess_table.json");

pub fn bundled_griess_table() -> GriessTable {
    serde_json::from_str(GRIESS_TABLE_JSON).expect("bundled Griess table is well-formed")
}

/// Outcome of the Griess table consistency checks.
#[derive(Clone, Debug)]
pub struct GriessReport {
    /// Five components with aligned eigenvalue and sign data, signs all +-1.
    pub well_formed: bool,
    pub total: u64,
    /// Sum of all component dimensions is the moonshine weight-2 dimension.
    pub total_matches: bool,
    pub weight2_total: u64,
    /// The axis-eigenvalue-0 components sum to the shorter module's
    /// weight-2 dimension.
    pub weight2_matches: bool,
    pub weight_3_2_total: u64,
    /// The axis-eigenvalue-1/2 component is the shorter module's weight-3/2
    /// dimension.
    pub weight_3_2_matches: bool,
    /// tau is -1 exactly on the eigenvalue-1/16 components.
    pub tau_matches_sixteenth: bool,
    /// Eigenvalue multiset is {2, 0, 0, 1/2, 1/16}.
    pub eigenvalue_multiset_matches: bool,
    /// lambda_tau = 1/32 and lambda_sigma = 1/4.
    pub axis_scalars_match: bool,
}

impl GriessReport {
    pub fn all_pass(&self) -> bool {
        self.well_formed
            && self.total_matches
            && self.weight2_matches
            && self.weight_3_2_matches
            && self.tau_matches_sixteenth
            && self.eigenvalue_multiset_matches
            && self.axis_scalars_match
    }
}

/// Verifies the numerology of a Griess decomposition table against the
/// frozen module dimensions.
pub fn check_griess_consistency(table: &GriessTable) -> GriessReport {
    let len_ok = table.dims.len() == 5
        && table.axis_eigenvalues.len() == 5
        && table.tau_eigenvalues.len() == 5;
    let signs_ok = table.tau_eigenvalues.iter().all(|&s| s == 1 || s == -1);
    let well_formed = len_ok && signs_ok;

    let zero = Rational::zero();
    let half = Rational::new(1, 2);
    let sixteenth = Rational::new(1, 16);

    let sum_where = |pred: &dyn Fn(usize) -> bool| -> u64 {
        table
            .dims
            .iter()
            .enumerate()
            .filter(|&(i, _)| i < table.axis_eigenvalues.len() && pred(i))
            .map(|(_, &d)| d)
            .sum()
    };
    let total: u64 = table.dims.iter().sum();
    let weight2_total = sum_where(&|i| table.axis_eigenvalues[i] == zero);
    let weight_3_2_total = sum_where(&|i| table.axis_eigenvalues[i] == half);

    let tau_matches_sixteenth = len_ok
        && (0..5).all(|i| {
            (table.tau_eigenvalues[i] == -1) == (table.axis_eigenvalues[i] == sixteenth)
        });

    let mut eigenvalues = table.axis_eigenvalues.clone();
    eigenvalues.sort();
    let mut expected = vec![Rational::integer(2), zero, zero, half, sixteenth];
    expected.sort();

    GriessReport {
        well_formed,
        total,
        total_matches: total == MOONSHINE_WEIGHT2_DIM,
        weight2_total,
        weight2_matches: weight2_total == SHORTER_WEIGHT2_DIM,
        weight_3_2_total,
        weight_3_2_matches: weight_3_2_total == SHORTER_WEIGHT_3_2_DIM,
        tau_matches_sixteenth,
        eigenvalue_multiset_matches: eigenvalues == expected,
        axis_scalars_match: table.lambda_tau == Rational::new(1, 32)
            && table.lambda_sigma == Rational::new(1, 4),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FusionLabel::*;

    #[test]
    fn fusion_table_matches_the_ising_rules() {
        assert_eq!(fuse(Vacuum, Sixteenth), vec![Sixteenth]);
        assert_eq!(fuse(Half, Half), vec![Vacuum]);
        assert_eq!(fuse(Half, Sixteenth), vec![Sixteenth]);
        assert_eq!(fuse(Sixteenth, Sixteenth), vec![Vacuum, Half]);
        // Commutativity and the identity label.
        for a in FusionLabel::ALL {
            assert_eq!(fuse(Vacuum, a), vec![a]);
            for b in FusionLabel::ALL {
                for c in FusionLabel::ALL {
                    assert_eq!(fusion_multiplicity(a, b, c), fusion_multiplicity(b, a, c));
                }
            }
        }
    }

    #[test]
    fn fusion_is_associative_with_multiplicities() {
        for a in FusionLabel::ALL {
            for b in FusionLabel::ALL {
                for c in FusionLabel::ALL {
                    for d in FusionLabel::ALL {
                        let left = triple_product_multiplicity(a, b, c, d);
                        let right: u32 = FusionLabel::ALL
                            .into_iter()
                            .map(|e| fusion_multiplicity(b, c, e) * fusion_multiplicity(a, e, d))
                            .sum();
                        assert_eq!(left, right, "associativity at {a:?} {b:?} {c:?} {d:?}");
                    }
                }
            }
        }
        // The cube of Sixteenth contains Sixteenth twice: dropping
        // multiplicities would break associativity bookkeeping.
        assert_eq!(
            triple_product_multiplicity(Sixteenth, Sixteenth, Sixteenth, Sixteenth),
            2
        );
    }

    #[test]
    fn conformal_weights_of_labels() {
        assert_eq!(Vacuum.conformal_weight(), Rational::zero());
        assert_eq!(Half.conformal_weight(), Rational::new(1, 2));
        assert_eq!(Sixteenth.conformal_weight(), Rational::new(1, 16));
        let four_halves = vec![Half; 4];
        assert_eq!(conformal_weight(&four_halves), Rational::integer(2));
        // Two Half labels and a full block of Sixteenth labels: 2 again.
        let mut labels = vec![Vacuum; 48];
        labels[0] = Half;
        labels[16] = Half;
        labels[32..48].fill(Sixteenth);
        assert_eq!(conformal_weight(&labels), Rational::integer(2));
    }

    #[test]
    fn miyamoto_signs_follow_the_word() {
        let pair = FrameCodePair::moonshine();
        // The first row of the bundled matrix is the indicator of the first
        // block; the canonical generator rows are reduced combinations.
        let block0 = crate::codes::moonshine_matrix().row(0).clone();
        let twisted = pair.twisted_sector(&block0).unwrap();
        for i in 0..48 {
            let sign = miyamoto_sign(MiyamotoKind::Tau, i, &twisted).unwrap();
            assert_eq!(sign == -1, i < 16);
        }
        assert!(miyamoto_sign(MiyamotoKind::Sigma, 0, &twisted).is_err());
        assert!(miyamoto_sign(MiyamotoKind::Tau, 48, &twisted).is_err());
        let untwisted = pair
            .untwisted_sector(&Gf2Vector::zeros(48))
            .unwrap();
        assert_eq!(
            miyamoto_sign(MiyamotoKind::Sigma, 5, &untwisted).unwrap(),
            1
        );
        assert!(miyamoto_sign(MiyamotoKind::Tau, 0, &untwisted).is_err());
    }

    #[test]
    fn sector_constructors_validate_membership() {
        let pair = FrameCodePair::moonshine();
        let not_in_d = Gf2Vector::from_support(48, &[0]).unwrap();
        assert!(pair.twisted_sector(&not_in_d).is_err());
        assert!(pair.untwisted_sector(&not_in_d).is_err()); // odd weight, C is even
    }

    #[test]
    fn moonshine_pair_satisfies_the_axioms() {
        let pair = FrameCodePair::moonshine();
        let report = check_frame_axioms(&pair).unwrap();
        assert!(report.all_pass(), "report: {report:?}");
        let shorter = derive_shorter_pair(&pair, 0).unwrap();
        assert_eq!(shorter.frame_size(), 47);
        assert_eq!(shorter.half_code().k(), 40);
        assert_eq!(shorter.sixteenth_code().k(), 6);
    }

    #[test]
    fn axiom_check_reports_witnesses() {
        use crate::codes::parse_generator_matrix;
        // C spanned by an odd word that also fails orthogonality with D.
        let c = LinearCode::from_generators(&parse_generator_matrix("1110\n").unwrap()).unwrap();
        let d = LinearCode::from_generators(&parse_generator_matrix("1000\n").unwrap()).unwrap();
        let pair = FrameCodePair::new(c, d).unwrap();
        let report = check_frame_axioms(&pair).unwrap();
        assert!(!report.orthogonal);
        assert_eq!(report.orthogonality_witness, Some((0, 0)));
        assert!(!report.half_code_even);
        assert!(!report.weights_divisible_by_8);
        assert_eq!(report.divisibility_witness.as_ref().unwrap().weight(), 1);
    }

    #[test]
    fn bundled_griess_table_is_consistent() {
        let table = bundled_griess_table();
        let report = check_griess_consistency(&table);
        assert!(report.all_pass(), "report: {report:?}");
        assert_eq!(report.total, MOONSHINE_WEIGHT2_DIM);
        assert_eq!(report.weight2_total, SHORTER_WEIGHT2_DIM);
        assert_eq!(report.weight_3_2_total, SHORTER_WEIGHT_3_2_DIM);
    }

    #[test]
    fn corrupted_griess_table_fails() {
        let mut table = bundled_griess_table();
        table.dims[2] = 96_254;
        let report = check_griess_consistency(&table);
        assert!(!report.total_matches);
        assert!(!report.weight2_matches);
        assert!(report.weight_3_2_matches);
        let mut table = bundled_griess_table();
        table.tau_eigenvalues[4] = 1;
        assert!(!check_griess_consistency(&table).tau_matches_sixteenth);
        let mut table = bundled_griess_table();
        table.lambda_sigma = Rational::new(1, 2);
        assert!(!check_griess_consistency(&table).axis_scalars_match);
    }
}
