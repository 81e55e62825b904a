//! Conversion of decompositions into codes, the pairwise distance
//! characterizations behind those constructions, and direct verification of
//! codes against distance, composition and the Johnson-type bounds.
//!
//! One codeword is produced per main (class-shaped) block: position `x` gets
//! symbol `i` when `x` lies in the block's `i`-th class, and for the
//! multiply-constant-weight construction row `i` gets ones on the `i`-th
//! class. Single-edge blocks contribute nothing.

use std::collections::HashMap;
use std::fmt;

use crate::bounds;
use crate::error::{Error, Result};
use crate::model::{
    composition_of, Code, CodeFile, Codeword, Composition, McwcCode, McwcWord,
};
use crate::search::{Block, BlockShape, Decomposition};

/// Which construction a decomposition is converted under. The kind fixes the
/// designed distance and the expected family shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    /// Constant-composition, distance `2w-2`.
    Ccc2w2,
    /// Constant-composition, distance `2w-3` (pair-colored families).
    Ccc2w3,
    /// Constant-weight, distance `2w-2`.
    Cwc2w2,
    /// Constant-weight, distance `2w-3`.
    Cwc2w3,
    /// Multiply constant-weight, distance `2mw-2`.
    Mcwc,
}

impl ConstructionKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ccc2w2" => Ok(ConstructionKind::Ccc2w2),
            "ccc2w3" => Ok(ConstructionKind::Ccc2w3),
            "cwc2w2" => Ok(ConstructionKind::Cwc2w2),
            "cwc2w3" => Ok(ConstructionKind::Cwc2w3),
            "mcwc" => Ok(ConstructionKind::Mcwc),
            _ => Err(Error::InvalidParameter(format!(
                "unknown construction kind {s:?} (ccc2w2|ccc2w3|cwc2w2|cwc2w3|mcwc)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionKind::Ccc2w2 => "ccc2w2",
            ConstructionKind::Ccc2w3 => "ccc2w3",
            ConstructionKind::Cwc2w2 => "cwc2w2",
            ConstructionKind::Cwc2w3 => "cwc2w3",
            ConstructionKind::Mcwc => "mcwc",
        }
    }

    fn requires_superpure(self) -> bool {
        !matches!(self, ConstructionKind::Mcwc)
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn main_blocks(dec: &Decomposition) -> Vec<&Block> {
    dec.blocks.iter().filter(|b| matches!(b.shape, BlockShape::Classes(_))).collect()
}

/// Build the code a decomposition encodes under the given construction kind.
///
/// The q-ary kinds require a superpure decomposition; the decomposition's
/// flag is trusted here and re-checked end to end by the search verifier.
/// The declared distance of the produced code is the kind's designed
/// distance, so construction itself fails if the decomposition does not
/// support it.
pub fn decomposition_to_code(dec: &Decomposition, kind: ConstructionKind) -> Result<CodeFile> {
    if kind.requires_superpure() && !dec.superpure {
        return Err(Error::KindMismatch(format!(
            "construction {kind} needs a superpure decomposition"
        )));
    }
    let mains = main_blocks(dec);
    if mains.is_empty() {
        return Err(Error::KindMismatch("decomposition has no main (class-shaped) blocks".into()));
    }
    let class_count = match &mains[0].shape {
        BlockShape::Classes(c) => c.len(),
        BlockShape::Pair(..) => unreachable!(),
    };
    if class_count == 0 {
        return Err(Error::KindMismatch("main blocks have no classes".into()));
    }
    for b in &mains {
        if b.classes().len() != class_count {
            return Err(Error::KindMismatch(
                "main blocks disagree on the number of classes".into(),
            ));
        }
    }
    let n = dec.n;
    match kind {
        ConstructionKind::Mcwc => {
            let m = class_count as u32;
            let w = match &mains[0].shape {
                BlockShape::Classes(c) => c[0].len() as u32,
                BlockShape::Pair(..) => unreachable!(),
            };
            let mut words = Vec::with_capacity(mains.len());
            for block in mains {
                let classes = block.classes();
                let mut rows = vec![vec![0u8; n as usize]; m as usize];
                for (i, class) in classes.iter().enumerate() {
                    if class.len() as u32 != w {
                        return Err(Error::KindMismatch(format!(
                            "MCWC construction needs equal class sizes; found {} and {w}",
                            class.len()
                        )));
                    }
                    for &x in class {
                        rows[i][x as usize - 1] = 1;
                    }
                }
                words.push(McwcWord::new(rows, w)?);
            }
            let designed = 2 * m * w;
            let declared = if designed >= 3 { Some(designed - 2) } else { None };
            Ok(CodeFile::Mcwc(McwcCode::new(m, n, w, words, declared)?))
        }
        _ => {
            let q = class_count as u32 + 1;
            let mut words = Vec::with_capacity(mains.len());
            for block in mains {
                let mut symbols = vec![0u32; n as usize];
                for (i, class) in block.classes().iter().enumerate() {
                    for &x in class {
                        symbols[x as usize - 1] = i as u32 + 1;
                    }
                }
                words.push(Codeword::new(symbols, q)?);
            }
            let w0 = words[0].weight();
            match kind {
                ConstructionKind::Ccc2w2 | ConstructionKind::Ccc2w3 => {
                    let c0 = composition_of(&words[0]);
                    for word in &words {
                        if composition_of(word) != c0 {
                            return Err(Error::KindMismatch(format!(
                                "constant-composition construction got mixed compositions {} and {}",
                                c0,
                                composition_of(word)
                            )));
                        }
                    }
                }
                _ => {
                    for word in &words {
                        if word.weight() != w0 {
                            return Err(Error::KindMismatch(format!(
                                "constant-weight construction got mixed weights {} and {w0}",
                                word.weight()
                            )));
                        }
                    }
                }
            }
            let designed: i64 = match kind {
                ConstructionKind::Ccc2w2 | ConstructionKind::Cwc2w2 => 2 * i64::from(w0) - 2,
                _ => 2 * i64::from(w0) - 3,
            };
            let declared = if designed >= 1 { Some(designed as u32) } else { None };
            Ok(CodeFile::Qary(Code::new(q, n, words, declared)?))
        }
    }
}

// ---------------------------------------------------------------------------
// Pairwise conditions
// ---------------------------------------------------------------------------

/// Outcome of one of the pairwise characterizations.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    /// Pair-distinctness condition (first condition of the pair).
    pub pairs_ok: bool,
    /// Support-intersection condition (second condition of the pair).
    pub supports_ok: bool,
    /// The target distance is trivially met at this weight; the checks still
    /// ran but carry no information.
    pub vacuous: bool,
    pub violations: Vec<String>,
}

impl ConditionReport {
    pub fn ok(&self) -> bool {
        self.pairs_ok && self.supports_ok
    }
}

fn require_constant_weight(code: &Code) -> Result<u32> {
    let Some(first) = code.codewords().first() else { return Ok(0) };
    let w = first.weight();
    for word in code.codewords() {
        if word.weight() != w {
            return Err(Error::InvalidCode(format!(
                "expected constant weight {w}, found a word of weight {}",
                word.weight()
            )));
        }
    }
    Ok(w)
}

fn support_pairs_ok(code: &Code, violations: &mut Vec<String>) -> bool {
    let mut ok = true;
    let words = code.codewords();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let si = words[i].support();
            let sj = words[j].support();
            let inter = si.iter().filter(|x| sj.contains(x)).count();
            if inter > 2 {
                ok = false;
                violations.push(format!(
                    "words {i} and {j} share {inter} support positions (allowed 2)"
                ));
            }
        }
    }
    ok
}

/// Check the distance-`2w-2` characterization: (C1) over each nonzero symbol
/// `i`, the ordered pairs `(x, y)` with `u_x = i` and `y` in the support are
/// distinct across the code; (C2) pairwise support intersections of size at
/// most 2.
pub fn check_c1_c2(code: &Code) -> Result<ConditionReport> {
    let w = require_constant_weight(code)?;
    let mut violations = Vec::new();
    let mut seen: HashMap<(u32, u32, u32), usize> = HashMap::new();
    let mut pairs_ok = true;
    for (widx, word) in code.codewords().iter().enumerate() {
        let support = word.support();
        for &x in &support {
            let i = word.symbols()[x as usize - 1];
            for &y in &support {
                if y == x {
                    continue;
                }
                if let Some(&other) = seen.get(&(i, x, y)) {
                    pairs_ok = false;
                    violations.push(format!(
                        "pair ({x},{y}) under symbol {i} appears in words {other} and {widx}"
                    ));
                } else {
                    seen.insert((i, x, y), widx);
                }
            }
        }
    }
    let supports_ok = support_pairs_ok(code, &mut violations);
    Ok(ConditionReport { pairs_ok, supports_ok, vacuous: w <= 1, violations })
}

/// Check the distance-`2w-3` sufficient conditions: (C3) over each ordered
/// symbol pair `(i, j)`, the ordered support pairs `(x, y)` with `u_x = i`,
/// `u_y = j` are distinct across the code; (C4) as (C2).
pub fn check_c3_c4(code: &Code) -> Result<ConditionReport> {
    let w = require_constant_weight(code)?;
    let mut violations = Vec::new();
    let mut seen: HashMap<(u32, u32, u32, u32), usize> = HashMap::new();
    let mut pairs_ok = true;
    for (widx, word) in code.codewords().iter().enumerate() {
        let support = word.support();
        for &x in &support {
            let i = word.symbols()[x as usize - 1];
            for &y in &support {
                if y == x {
                    continue;
                }
                let j = word.symbols()[y as usize - 1];
                if let Some(&other) = seen.get(&(i, j, x, y)) {
                    pairs_ok = false;
                    violations.push(format!(
                        "pair ({x},{y}) under symbols ({i},{j}) appears in words {other} and {widx}"
                    ));
                } else {
                    seen.insert((i, j, x, y), widx);
                }
            }
        }
    }
    let supports_ok = support_pairs_ok(code, &mut violations);
    Ok(ConditionReport { pairs_ok, supports_ok, vacuous: w <= 2, violations })
}

// ---------------------------------------------------------------------------
// Code verification
// ---------------------------------------------------------------------------

/// What a code is expected to be.
#[derive(Debug, Clone)]
pub enum CodeExpectation {
    Ccc { d: u32, composition: Composition },
    Cwc { d: u32, w: u32 },
    Mcwc { d: u32, m: u32, n: u32, w: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVerdict {
    /// Size equals the applicable upper bound.
    Optimal,
    /// Size is below the bound by this much.
    BelowBoundBy(u64),
    /// Size exceeds the bound: the code or the bound evaluation is wrong.
    ExceedsBound,
    /// No bound of the implemented forms applies to this distance.
    NoApplicableBound,
}

#[derive(Debug, Clone)]
pub struct CodeVerifyReport {
    pub ok: bool,
    pub size: u64,
    pub min_distance: Option<u32>,
    pub distance_ok: bool,
    pub uniform_ok: bool,
    pub bound: Option<u64>,
    pub bound_equation: Option<&'static str>,
    pub verdict: BoundVerdict,
    pub messages: Vec<String>,
}

/// Check uniformity (weight/composition/row weights), the pairwise minimum
/// distance, and compare the size against the matching upper bound.
pub fn verify_code(code: &CodeFile, expected: &CodeExpectation) -> Result<CodeVerifyReport> {
    let mut messages = Vec::new();
    let mut uniform_ok = true;
    let (size, min_distance, d_expected, bound, bound_equation) = match (code, expected) {
        (CodeFile::Qary(code), CodeExpectation::Ccc { d, composition }) => {
            if code.q() != composition.q() {
                return Err(Error::Dimension(format!(
                    "code alphabet {} but composition is over q = {}",
                    code.q(),
                    composition.q()
                )));
            }
            for (i, word) in code.codewords().iter().enumerate() {
                let got = composition_of(word);
                if got != *composition {
                    uniform_ok = false;
                    messages.push(format!("word {i} has composition {got}, expected {composition}"));
                }
            }
            let w = composition.weight();
            let (bound, eq) = match () {
                _ if w >= 2 && *d == 2 * w - 2 => {
                    (Some(bounds::bound_ccc_2w2(code.n().into(), composition)?), Some("(1)"))
                }
                _ if w >= 3 && *d == 2 * w - 3 => {
                    (Some(bounds::bound_ccc_2w3(code.n().into(), composition)?), Some("(2)"))
                }
                _ if *d == 2 * w => {
                    (Some(bounds::base_full_distance(code.n().into(), w)?), Some("base"))
                }
                _ => (None, None),
            };
            (code.len() as u64, code.min_distance()?, *d, bound, eq)
        }
        (CodeFile::Qary(code), CodeExpectation::Cwc { d, w }) => {
            for (i, word) in code.codewords().iter().enumerate() {
                if word.weight() != *w {
                    uniform_ok = false;
                    messages.push(format!("word {i} has weight {}, expected {w}", word.weight()));
                }
            }
            let (bound, eq) = match () {
                _ if *w >= 2 && *d == 2 * w - 2 => {
                    (Some(bounds::bound_cwc_2w2(code.q(), code.n().into(), *w)?), Some("(3)"))
                }
                _ if *w >= 2 && *d == 2 * w - 3 => {
                    (Some(bounds::bound_cwc_2w3(code.q(), code.n().into(), *w)?), Some("(4)"))
                }
                _ if *d == 2 * w => {
                    (Some(bounds::base_full_distance(code.n().into(), *w)?), Some("base"))
                }
                _ => (None, None),
            };
            (code.len() as u64, code.min_distance()?, *d, bound, eq)
        }
        (CodeFile::Mcwc(code), CodeExpectation::Mcwc { d, m, n, w }) => {
            if code.m() != *m || code.n() != *n || code.w() != *w {
                return Err(Error::Dimension(format!(
                    "code is MCWC({},{},*,{}), expected MCWC({m},{n},*,{w})",
                    code.m(),
                    code.n(),
                    code.w()
                )));
            }
            // Row weights are enforced by the word type; uniformity holds.
            let (bound, eq) = if *d == 2 * m * w - 2 {
                (Some(bounds::bound_mcwc(*m, (*n).into(), *w)?), Some("(5)"))
            } else {
                (None, None)
            };
            (code.len() as u64, code.min_distance()?, *d, bound, eq)
        }
        (CodeFile::Qary(_), CodeExpectation::Mcwc { .. }) => {
            return Err(Error::KindMismatch("q-ary code checked against MCWC expectation".into()))
        }
        (CodeFile::Mcwc(_), _) => {
            return Err(Error::KindMismatch("MCWC code checked against q-ary expectation".into()))
        }
    };

    let distance_ok = match min_distance {
        Some(found) if found < d_expected => {
            messages.push(format!("minimum distance {found} is below the declared {d_expected}"));
            false
        }
        _ => true,
    };
    let verdict = match bound {
        None => BoundVerdict::NoApplicableBound,
        Some(b) if size == b => BoundVerdict::Optimal,
        Some(b) if size < b => BoundVerdict::BelowBoundBy(b - size),
        Some(b) => {
            messages.push(format!("size {size} EXCEEDS BOUND {b}: this indicates a bug"));
            BoundVerdict::ExceedsBound
        }
    };
    let ok = distance_ok && uniform_ok && verdict != BoundVerdict::ExceedsBound;
    Ok(CodeVerifyReport {
        ok,
        size,
        min_distance,
        distance_ok,
        uniform_ok,
        bound,
        bound_equation,
        verdict,
        messages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_hstar;
    use crate::model::{hamming_distance, mcwc_distance};
    use crate::search::{solve, SearchConfig};

    fn word(symbols: &[u32], q: u32) -> Codeword {
        Codeword::new(symbols.to_vec(), q).unwrap()
    }

    fn example_code_words() -> Vec<Codeword> {
        [
            [0, 1, 2, 1, 0],
            [0, 2, 1, 0, 1],
            [1, 0, 1, 2, 0],
            [1, 1, 0, 0, 2],
            [2, 0, 0, 1, 1],
        ]
        .iter()
        .map(|s| word(s, 3))
        .collect()
    }

    fn example_decomposition() -> Decomposition {
        let mains = [
            (vec![2, 4], vec![3]),
            (vec![3, 5], vec![2]),
            (vec![1, 3], vec![4]),
            (vec![1, 2], vec![5]),
            (vec![4, 5], vec![1]),
        ];
        let singles =
            [(1, 2), (2, 1), (3, 1), (4, 2), (5, 3), (1, 3), (2, 4), (3, 5), (4, 5), (5, 4)];
        let mut blocks: Vec<Block> = mains
            .into_iter()
            .map(|(s1, s2)| Block {
                member: "G[2,1]".into(),
                shape: BlockShape::Classes(vec![s1, s2]),
            })
            .collect();
        blocks.extend(
            singles
                .into_iter()
                .map(|(y, z)| Block { member: "G2".into(), shape: BlockShape::Pair(y, z) }),
        );
        Decomposition { n: 5, family: "G[2,1]".into(), superpure: true, blocks }
    }

    #[test]
    fn example_decomposition_yields_expected_code() {
        let dec = example_decomposition();
        let built = decomposition_to_code(&dec, ConstructionKind::Ccc2w2).unwrap();
        let CodeFile::Qary(code) = built else { panic!("expected q-ary code") };
        let got: Vec<Vec<u32>> = code.codewords().iter().map(|w| w.symbols().to_vec()).collect();
        let want: Vec<Vec<u32>> =
            example_code_words().iter().map(|w| w.symbols().to_vec()).collect();
        assert_eq!(got, want);
        assert_eq!(code.declared_distance(), Some(4));
    }

    #[test]
    fn single_block_codeword() {
        let dec = Decomposition {
            n: 5,
            family: "G[2,1]".into(),
            superpure: true,
            blocks: vec![Block {
                member: "G[2,1]".into(),
                shape: BlockShape::Classes(vec![vec![2, 4], vec![3]]),
            }],
        };
        let built = decomposition_to_code(&dec, ConstructionKind::Ccc2w2).unwrap();
        let CodeFile::Qary(code) = built else { panic!() };
        assert_eq!(code.codewords()[0].symbols(), &[0, 1, 2, 1, 0]);
    }

    #[test]
    fn non_superpure_input_is_rejected_for_ccc() {
        let mut dec = example_decomposition();
        dec.superpure = false;
        assert!(matches!(
            decomposition_to_code(&dec, ConstructionKind::Ccc2w2),
            Err(Error::KindMismatch(_))
        ));
    }

    #[test]
    fn mcwc_construction_from_hstar21() {
        let family = family_hstar(2, 1).unwrap();
        let report = solve(&family, 3, &SearchConfig::default()).unwrap();
        let built = decomposition_to_code(&report.solutions[0], ConstructionKind::Mcwc).unwrap();
        let CodeFile::Mcwc(code) = built else { panic!("expected MCWC code") };
        assert_eq!((code.m(), code.n(), code.w()), (2, 3, 1));
        assert_eq!(code.len(), 6); // n(n-1)/w^2
        assert_eq!(code.declared_distance(), Some(2));
        // Distance identity: d(u,v) = 2mw - 2 * sum_i |S_i(u) ∩ S_i(v)|.
        for i in 0..code.len() {
            for j in i + 1..code.len() {
                let u = &code.words()[i];
                let v = &code.words()[j];
                let mut common = 0u32;
                for row in 1..=code.m() {
                    let su = u.row_support(row);
                    let sv = v.row_support(row);
                    common += su.iter().filter(|x| sv.contains(x)).count() as u32;
                }
                assert!(common <= 1, "blocks share more than one aligned vertex");
                let d = mcwc_distance(u, v).unwrap();
                assert_eq!(d, 2 * code.m() * code.w() - 2 * common);
            }
        }
    }

    #[test]
    fn mcwc_single_block_rows() {
        let dec = Decomposition {
            n: 3,
            family: "H*(2,1)".into(),
            superpure: false,
            blocks: vec![Block {
                member: "H*(2,1)".into(),
                shape: BlockShape::Classes(vec![vec![1], vec![3]]),
            }],
        };
        let built = decomposition_to_code(&dec, ConstructionKind::Mcwc).unwrap();
        let CodeFile::Mcwc(code) = built else { panic!() };
        assert_eq!(code.words()[0].rows(), &[vec![1, 0, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn example_code_satisfies_both_condition_pairs() {
        let code = Code::new(3, 5, example_code_words(), None).unwrap();
        let r12 = check_c1_c2(&code).unwrap();
        assert!(r12.ok(), "{:?}", r12.violations);
        assert!(!r12.vacuous);
        let r34 = check_c3_c4(&code).unwrap();
        assert!(r34.ok(), "{:?}", r34.violations);
    }

    #[test]
    fn two_word_codes_from_named_examples() {
        let code =
            Code::new(2, 3, vec![word(&[1, 1, 0], 2), word(&[1, 0, 1], 2)], None).unwrap();
        let rep = check_c1_c2(&code).unwrap();
        assert!(rep.ok(), "{:?}", rep.violations);
        assert_eq!(
            hamming_distance(&code.codewords()[0], &code.codewords()[1]).unwrap(),
            2
        );

        let code = Code::new(
            3,
            4,
            vec![word(&[1, 2, 0, 0], 3), word(&[1, 0, 2, 0], 3)],
            None,
        )
        .unwrap();
        let rep = check_c1_c2(&code).unwrap();
        assert!(rep.ok(), "{:?}", rep.violations);
        let rep = check_c3_c4(&code).unwrap();
        assert!(rep.ok(), "{:?}", rep.violations);
    }

    #[test]
    fn single_word_code_holds_vacuously() {
        let code = Code::new(3, 4, vec![word(&[1, 2, 2, 0], 3)], None).unwrap();
        assert!(check_c1_c2(&code).unwrap().ok());
        assert!(check_c3_c4(&code).unwrap().ok());
    }

    #[test]
    fn repeated_symbol_pair_fails_c3() {
        // Both words carry symbols (1,1) on the ordered pair (1,2).
        let code =
            Code::new(2, 4, vec![word(&[1, 1, 1, 0], 2), word(&[1, 1, 0, 1], 2)], None).unwrap();
        let rep = check_c3_c4(&code).unwrap();
        assert!(!rep.pairs_ok);
        let rep = check_c1_c2(&code).unwrap();
        assert!(!rep.pairs_ok);
    }

    #[test]
    fn non_constant_weight_input_is_an_error() {
        let code = Code::new(2, 3, vec![word(&[1, 1, 0], 2), word(&[1, 0, 0], 2)], None).unwrap();
        assert!(check_c1_c2(&code).is_err());
        assert!(check_c3_c4(&code).is_err());
    }

    #[test]
    fn verify_example_code_is_optimal() {
        let code = CodeFile::Qary(Code::new(3, 5, example_code_words(), None).unwrap());
        let exp = CodeExpectation::Ccc {
            d: 4,
            composition: Composition::new(vec![2, 1]).unwrap(),
        };
        let rep = verify_code(&code, &exp).unwrap();
        assert!(rep.ok, "{:?}", rep.messages);
        assert_eq!(rep.min_distance, Some(4));
        assert_eq!(rep.bound, Some(5));
        assert_eq!(rep.bound_equation, Some("(1)"));
        assert_eq!(rep.verdict, BoundVerdict::Optimal);
    }

    #[test]
    fn verify_reports_distance_shortfall() {
        let code = CodeFile::Qary(Code::new(3, 5, example_code_words(), None).unwrap());
        let exp = CodeExpectation::Ccc {
            d: 5,
            composition: Composition::new(vec![2, 1]).unwrap(),
        };
        let rep = verify_code(&code, &exp).unwrap();
        assert!(!rep.ok);
        assert!(!rep.distance_ok);
        assert_eq!(rep.min_distance, Some(4));
    }

    #[test]
    fn verify_empty_code_is_vacuously_valid() {
        let code = CodeFile::Qary(Code::new(3, 5, vec![], None).unwrap());
        let exp = CodeExpectation::Cwc { d: 4, w: 3 };
        let rep = verify_code(&code, &exp).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.size, 0);
        assert_eq!(rep.min_distance, None);
    }

    /// All words of weight exactly `w` over `Z_q` of length `n`.
    fn weight_w_words(q: u32, n: u32, w: u32) -> Vec<Codeword> {
        let mut out = Vec::new();
        let mut symbols = vec![0u32; n as usize];
        fn rec(q: u32, n: u32, pos: usize, left: u32, symbols: &mut Vec<u32>, out: &mut Vec<Codeword>) {
            let remaining = n as usize - pos;
            if (left as usize) > remaining {
                return;
            }
            if pos == n as usize {
                out.push(Codeword::new(symbols.clone(), q).unwrap());
                return;
            }
            symbols[pos] = 0;
            rec(q, n, pos + 1, left, symbols, out);
            if left > 0 {
                for s in 1..q {
                    symbols[pos] = s;
                    rec(q, n, pos + 1, left - 1, symbols, out);
                }
            }
            symbols[pos] = 0;
        }
        rec(q, n, 0, w, &mut symbols, &mut out);
        out
    }

    #[test]
    fn condition_equivalences_on_a_small_grid() {
        // Two-word codes: (C1 and C2) iff distance >= 2w-2, and
        // (C3 and C4) implies distance >= 2w-3. Full grid in the acceptance
        // suite; a reduced grid here.
        for q in [2u32, 3] {
            for w in [2u32, 3] {
                for n in w..=5 {
                    let words = weight_w_words(q, n, w);
                    for i in 0..words.len() {
                        for j in 0..words.len() {
                            if i == j {
                                continue;
                            }
                            let pair =
                                Code::new(q, n, vec![words[i].clone(), words[j].clone()], None)
                                    .unwrap();
                            let d = hamming_distance(&words[i], &words[j]).unwrap();
                            let r12 = check_c1_c2(&pair).unwrap();
                            assert_eq!(
                                r12.ok(),
                                d >= 2 * w - 2,
                                "C1C2 mismatch: {:?} vs {:?} (d={d})",
                                words[i].symbols(),
                                words[j].symbols()
                            );
                            let r34 = check_c3_c4(&pair).unwrap();
                            if r34.ok() {
                                assert!(
                                    d + 3 >= 2 * w,
                                    "C3C4 held but d={d} < 2w-3 for {:?} vs {:?}",
                                    words[i].symbols(),
                                    words[j].symbols()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
