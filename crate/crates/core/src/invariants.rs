//! Decomposition invariants of a digraph family: the constants alpha and
//! beta, admissibility, and the integrality conditions a decomposition of
//! `K_n^(r)` must satisfy.
//!
//! alpha is the gcd of all `t > 0` such that `t*(1,...,1)` is a nonnegative
//! integral combination of the degree vectors of the family; beta is the same
//! over the edge vectors. Rather than reproducing per-family witness
//! calculations, this module implements a generic decision procedure:
//!
//! 1. [`lattice_constant`] finds the least `t0 > 0` with `t0*(1,...,1)` in
//!    the integer lattice spanned by the vectors (signs unrestricted), by
//!    exact integer row reduction.
//! 2. [`cone_gcd`] then searches bounded nonnegative feasibility for two
//!    consecutive multiples `k*t0` and `(k+1)*t0`. Since achievable constants
//!    are closed under addition and all are multiples of `t0`, two
//!    consecutive achievable multipliers force the gcd to be exactly `t0`.
//!    If the bound is exhausted first the result is reported unresolved,
//!    never silently wrong.
//!
//! Admissibility (the all-ones vector as a *positive rational* combination of
//! edge vectors) is decided by a small exact-rational simplex that maximizes
//! the minimum coefficient. All arithmetic is arbitrary-precision; no
//! floating point.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::families::DigraphFamily;

// ---------------------------------------------------------------------------
// Exact integer row reduction
// ---------------------------------------------------------------------------

/// Row echelon form of integer rows under unimodular row operations, with the
/// transform recorded: `u * a == h` where `u` is unimodular.
struct RowReduction {
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    /// `(row, col)` of each pivot; columns strictly increasing, pivots positive.
    pivots: Vec<(usize, usize)>,
}

fn row_reduce(a: &[Vec<BigInt>]) -> RowReduction {
    let m = a.len();
    let k = a.first().map_or(0, |r| r.len());
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..k {
        if row == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for r in row..m {
                if !h[r][col].is_zero()
                    && best.map_or(true, |b| h[r][col].magnitude() < h[b][col].magnitude())
                {
                    best = Some(r);
                }
            }
            let Some(best) = best else { break };
            h.swap(row, best);
            u.swap(row, best);
            let mut clean = true;
            for r in row + 1..m {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = &h[r][col] / &h[row][col];
                if !q.is_zero() {
                    for c in 0..k {
                        let t = &h[row][c] * &q;
                        h[r][c] -= t;
                    }
                    for c in 0..m {
                        let t = &u[row][c] * &q;
                        u[r][c] -= t;
                    }
                }
                if !h[r][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                if h[row][col].is_negative() {
                    for c in 0..k {
                        h[row][c] = -h[row][c].clone();
                    }
                    for c in 0..m {
                        u[row][c] = -u[row][c].clone();
                    }
                }
                pivots.push((row, col));
                row += 1;
                break;
            }
        }
    }
    RowReduction { h, u, pivots }
}

fn check_dims(vectors: &[Vec<BigInt>]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Err(Error::InvalidParameter("empty vector list".into()));
    };
    let k = first.len();
    if k == 0 || vectors.iter().any(|v| v.len() != k) {
        return Err(Error::Dimension("vectors of differing or zero dimension".into()));
    }
    Ok(k)
}

fn ones(k: usize, scale: &BigInt) -> Vec<BigInt> {
    vec![scale.clone(); k]
}

/// Least `t0 > 0` such that `t0*(1,...,1)` lies in the integer lattice
/// generated by the vectors (coefficients of either sign), together with a
/// witness combination, or `None` when no positive multiple of the all-ones
/// vector is in the lattice.
pub fn lattice_constant(vectors: &[Vec<BigInt>]) -> Result<Option<(BigInt, Vec<BigInt>)>> {
    let k = check_dims(vectors)?;
    // Augmented lattice: rows (v_i | 0) plus (1,...,1 | 1). An element
    // (0,...,0 | t) of this lattice says exactly that t*(1,...,1) is minus
    // the v-row contribution.
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            let mut row = v.clone();
            row.push(BigInt::zero());
            row
        })
        .collect();
    let mut target = ones(k, &BigInt::one());
    target.push(BigInt::one());
    rows.push(target);
    let red = row_reduce(&rows);
    // A row whose pivot sits in the appended column is zero on the first k
    // coordinates; its pivot value is the constant t0.
    for &(r, c) in &red.pivots {
        if c == k {
            let t0 = red.h[r][k].clone();
            debug_assert_eq!(red.u[r][vectors.len()], t0);
            let witness: Vec<BigInt> = (0..vectors.len()).map(|j| -red.u[r][j].clone()).collect();
            return Ok(Some((t0, witness)));
        }
    }
    Ok(None)
}

/// Decide whether `target` is an integer (sign-unrestricted) combination of
/// the vectors; returns the coefficients when it is.
pub fn integral_membership(vectors: &[Vec<BigInt>], target: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let k = check_dims(vectors)?;
    if target.len() != k {
        return Err(Error::Dimension(format!(
            "target dimension {} != vector dimension {k}",
            target.len()
        )));
    }
    let red = row_reduce(vectors);
    let mut residue = target.to_vec();
    let mut z = vec![BigInt::zero(); vectors.len()];
    for &(r, c) in &red.pivots {
        if residue[c].is_zero() {
            continue;
        }
        let (q, rem) = residue[c].div_rem(&red.h[r][c]);
        if !rem.is_zero() {
            return Ok(None);
        }
        for col in 0..k {
            let t = &red.h[r][col] * &q;
            residue[col] -= t;
        }
        z[r] = q;
    }
    if residue.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let coeffs: Vec<BigInt> = (0..vectors.len())
        .map(|j| {
            let mut acc = BigInt::zero();
            for (r, zr) in z.iter().enumerate() {
                if !zr.is_zero() {
                    acc += zr * &red.u[r][j];
                }
            }
            acc
        })
        .collect();
    Ok(Some(coeffs))
}

// ---------------------------------------------------------------------------
// Bounded nonnegative feasibility
// ---------------------------------------------------------------------------

/// Find nonnegative integer coefficients expressing `target` as a combination
/// of `vectors` (all entries nonnegative), or `None` if there are none.
///
/// Depth-first over vector multiplicities, largest vectors first, pruning on
/// coordinates no remaining vector can cover and memoizing failed states.
/// `node_budget` caps the search; exhaustion counts as "not found".
pub fn nonneg_combination(
    vectors: &[Vec<BigInt>],
    target: &[BigInt],
    node_budget: u64,
) -> Result<Option<Vec<BigInt>>> {
    let k = check_dims(vectors)?;
    if target.len() != k {
        return Err(Error::Dimension(format!(
            "target dimension {} != vector dimension {k}",
            target.len()
        )));
    }
    if vectors.iter().any(|v| v.iter().any(|x| x.is_negative()))
        || target.iter().any(|x| x.is_negative())
    {
        return Err(Error::InvalidParameter("nonneg_combination requires nonnegative data".into()));
    }
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    let sum = |v: &[BigInt]| v.iter().fold(BigInt::zero(), |a, b| a + b);
    order.sort_by_key(|&i| std::cmp::Reverse((sum(&vectors[i]), vectors[i].clone())));
    let ordered: Vec<&Vec<BigInt>> = order.iter().map(|&i| &vectors[i]).collect();

    // suffix_cover[i][j]: some vector at position >= i has a positive j-entry.
    let mut suffix_cover = vec![vec![false; k]; ordered.len() + 1];
    for i in (0..ordered.len()).rev() {
        for j in 0..k {
            suffix_cover[i][j] = suffix_cover[i + 1][j] || ordered[i][j].is_positive();
        }
    }

    struct Dfs<'a> {
        ordered: &'a [&'a Vec<BigInt>],
        suffix_cover: &'a [Vec<bool>],
        failed: HashSet<(usize, Vec<BigInt>)>,
        nodes: u64,
        budget: u64,
    }
    impl Dfs<'_> {
        /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
        fn run(
            &mut self,
            i: usize,
            remaining: &mut Vec<BigInt>,
            coeffs: &mut Vec<BigInt>,
        ) -> Option<bool> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            if remaining.iter().all(|x| x.is_zero()) {
                return Some(true);
            }
            if i == self.ordered.len() {
                return Some(false);
            }
            for j in 0..remaining.len() {
                if remaining[j].is_positive() && !self.suffix_cover[i][j] {
                    return Some(false);
                }
            }
            let key = (i, remaining.clone());
            if self.failed.contains(&key) {
                return Some(false);
            }
            let v = self.ordered[i];
            let mut cmax: Option<BigInt> = None;
            for j in 0..remaining.len() {
                if v[j].is_positive() {
                    let q = &remaining[j] / &v[j];
                    cmax = Some(cmax.map_or(q.clone(), |m: BigInt| m.min(q)));
                }
            }
            let mut c = cmax.unwrap_or_else(BigInt::zero);
            loop {
                let mut next: Vec<BigInt> =
                    remaining.iter().zip(v.iter()).map(|(r, x)| r - x * &c).collect();
                coeffs[i] = c.clone();
                match self.run(i + 1, &mut next, coeffs) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
                if c.is_zero() {
                    break;
                }
                c -= 1;
            }
            coeffs[i] = BigInt::zero();
            self.failed.insert(key);
            Some(false)
        }
    }

    let mut dfs = Dfs {
        ordered: &ordered,
        suffix_cover: &suffix_cover,
        failed: HashSet::new(),
        nodes: 0,
        budget: node_budget,
    };
    let mut remaining = target.to_vec();
    let mut coeffs = vec![BigInt::zero(); ordered.len()];
    match dfs.run(0, &mut remaining, &mut coeffs) {
        Some(true) => {
            let mut out = vec![BigInt::zero(); vectors.len()];
            for (pos, &orig) in order.iter().enumerate() {
                out[orig] = coeffs[pos].clone();
            }
            Ok(Some(out))
        }
        _ => Ok(None),
    }
}

// ---------------------------------------------------------------------------
// Cone gcd
// ---------------------------------------------------------------------------

/// Options for [`cone_gcd`].
#[derive(Debug, Clone)]
pub struct ConeOptions {
    /// Largest multiplier of the lattice constant tried for nonnegative
    /// feasibility. Defaults to `max(4, 2 * #vectors * max_entry)`.
    pub k_max: Option<u64>,
    /// Node cap for each feasibility search.
    pub node_budget: u64,
}

impl Default for ConeOptions {
    fn default() -> Self {
        ConeOptions { k_max: None, node_budget: 2_000_000 }
    }
}

/// Outcome of [`cone_gcd`]: `value` is the resolved gcd, or `None` when the
/// bounded search could not settle it.
#[derive(Debug, Clone)]
pub struct ConeResult {
    pub value: Option<BigInt>,
    /// Least positive lattice constant `t0`, when one exists.
    pub lattice_t0: Option<BigInt>,
    /// Nonnegative coefficients producing `achieved[0] * (1,...,1)`.
    pub witness: Option<Vec<BigInt>>,
    /// Constants `t` shown nonnegatively achievable, ascending.
    pub achieved: Vec<BigInt>,
    /// The consecutive multiplier pair that settled the gcd.
    pub consecutive: Option<(u64, u64)>,
}

impl ConeResult {
    fn unresolved(lattice_t0: Option<BigInt>, achieved: Vec<BigInt>, witness: Option<Vec<BigInt>>) -> Self {
        ConeResult { value: None, lattice_t0, witness, achieved, consecutive: None }
    }
}

/// Gcd of all `t > 0` such that `t*(1,...,1)` is a nonnegative integral
/// combination of the vectors. See the module docs for the procedure.
pub fn cone_gcd(vectors: &[Vec<BigInt>], opts: &ConeOptions) -> Result<ConeResult> {
    let k = check_dims(vectors)?;
    let nonzero: Vec<Vec<BigInt>> =
        vectors.iter().filter(|v| !v.iter().all(|x| x.is_zero())).cloned().collect();
    if nonzero.is_empty() {
        return Ok(ConeResult::unresolved(None, Vec::new(), None));
    }
    let Some((t0, _)) = lattice_constant(&nonzero)? else {
        return Ok(ConeResult::unresolved(None, Vec::new(), None));
    };
    let max_entry =
        nonzero.iter().flat_map(|v| v.iter()).max().cloned().unwrap_or_else(BigInt::one);
    let k_max = opts.k_max.unwrap_or_else(|| {
        let me: u64 = max_entry.try_into().unwrap_or(u64::MAX / 4);
        (2 * nonzero.len() as u64).saturating_mul(me).max(4)
    });

    let expand_witness = |coeffs: Vec<BigInt>| -> Vec<BigInt> {
        // Coefficients over the nonzero subset, mapped back to input slots.
        let mut out = vec![BigInt::zero(); vectors.len()];
        let mut it = coeffs.into_iter();
        for (slot, v) in vectors.iter().enumerate() {
            if !v.iter().all(|x| x.is_zero()) {
                out[slot] = it.next().unwrap();
            }
        }
        out
    };

    let mut achieved: Vec<BigInt> = Vec::new();
    let mut witness: Option<Vec<BigInt>> = None;
    let mut prev_achieved = false;
    for mult in 1..=k_max {
        let t = &t0 * BigInt::from(mult);
        let target = ones(k, &t);
        let found = nonneg_combination(&nonzero, &target, opts.node_budget)?;
        if let Some(coeffs) = found {
            achieved.push(t.clone());
            if witness.is_none() {
                witness = Some(expand_witness(coeffs));
            }
            if prev_achieved {
                return Ok(ConeResult {
                    value: Some(t0.clone()),
                    lattice_t0: Some(t0),
                    witness,
                    achieved,
                    consecutive: Some((mult - 1, mult)),
                });
            }
            prev_achieved = true;
        } else {
            prev_achieved = false;
        }
    }
    Ok(ConeResult::unresolved(Some(t0), achieved, witness))
}

// ---------------------------------------------------------------------------
// Family invariants
// ---------------------------------------------------------------------------

/// Distinct vectors with a label for the first place each occurs.
#[derive(Debug, Clone)]
pub struct LabeledVectors {
    pub labels: Vec<String>,
    pub vectors: Vec<Vec<BigInt>>,
}

fn push_unique(
    acc: &mut LabeledVectors,
    seen: &mut HashMap<Vec<BigInt>, usize>,
    label: String,
    v: Vec<BigInt>,
) {
    if !seen.contains_key(&v) {
        seen.insert(v.clone(), acc.vectors.len());
        acc.labels.push(label);
        acc.vectors.push(v);
    }
}

/// Distinct degree vectors `tau(u, G)` over all vertices of all members, as
/// `2r`-dimensional integer vectors.
pub fn family_degree_vectors(family: &DigraphFamily) -> LabeledVectors {
    let mut acc = LabeledVectors { labels: Vec::new(), vectors: Vec::new() };
    let mut seen = HashMap::new();
    for member in &family.members {
        for v in 1..=member.graph.vertex_count() {
            let dv = member.graph.degree_vector(v).expect("vertex in range");
            let vec: Vec<BigInt> = dv.entries().iter().map(|&x| BigInt::from(x)).collect();
            push_unique(&mut acc, &mut seen, format!("{}:v{}", member.label, v), vec);
        }
    }
    acc
}

/// Distinct edge vectors `mu(G)` over the members, as `r`-dimensional integer
/// vectors.
pub fn family_edge_vectors(family: &DigraphFamily) -> LabeledVectors {
    let mut acc = LabeledVectors { labels: Vec::new(), vectors: Vec::new() };
    let mut seen = HashMap::new();
    for member in &family.members {
        let ev = member.graph.edge_vector();
        let vec: Vec<BigInt> = ev.entries().iter().map(|&x| BigInt::from(x)).collect();
        push_unique(&mut acc, &mut seen, member.label.clone(), vec);
    }
    acc
}

/// A resolved-or-unresolved invariant with the vectors it was computed from.
#[derive(Debug, Clone)]
pub struct FamilyInvariant {
    pub result: ConeResult,
    pub vectors: LabeledVectors,
}

/// alpha(family): cone gcd over the degree vectors.
pub fn alpha(family: &DigraphFamily) -> Result<FamilyInvariant> {
    let vectors = family_degree_vectors(family);
    let result = cone_gcd(&vectors.vectors, &ConeOptions::default())?;
    Ok(FamilyInvariant { result, vectors })
}

/// beta(family): cone gcd over the edge vectors.
pub fn beta(family: &DigraphFamily) -> Result<FamilyInvariant> {
    let vectors = family_edge_vectors(family);
    let result = cone_gcd(&vectors.vectors, &ConeOptions::default())?;
    Ok(FamilyInvariant { result, vectors })
}

// ---------------------------------------------------------------------------
// Admissibility via exact rational simplex
// ---------------------------------------------------------------------------

enum SimplexOutcome {
    Infeasible,
    Optimal { value: BigRational, solution: Vec<BigRational> },
}

/// Maximize `objective . x` subject to `rows * x = rhs`, `x >= 0`, with all
/// `rhs >= 0` and a bounded optimum (callers cap the objective variable).
/// Two-phase dense tableau with Bland's rule; exact rationals throughout.
fn simplex_max(
    rows: &[Vec<BigRational>],
    rhs: &[BigRational],
    objective: &[BigRational],
) -> SimplexOutcome {
    let m = rows.len();
    let n = objective.len();
    let zero = BigRational::zero();
    // Tableau columns: n structural + m artificial + rhs.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        let mut r: Vec<BigRational> = row.clone();
        r.resize(n + m, zero.clone());
        r[n + i] = BigRational::one();
        r.push(rhs[i].clone());
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    fn pivot(
        t: &mut [Vec<BigRational>],
        obj: &mut [BigRational],
        basis: &mut [usize],
        r: usize,
        s: usize,
    ) {
        let p = t[r][s].clone();
        for x in t[r].iter_mut() {
            *x /= p.clone();
        }
        for i in 0..t.len() {
            if i != r && !t[i][s].is_zero() {
                let f = t[i][s].clone();
                for c in 0..t[i].len() {
                    let d = &t[r][c] * &f;
                    t[i][c] -= d;
                }
            }
        }
        if !obj[s].is_zero() {
            let f = obj[s].clone();
            for c in 0..obj.len() {
                let d = &t[r][c] * &f;
                obj[c] -= d;
            }
        }
        basis[r] = s;
    }

    fn optimize(
        t: &mut [Vec<BigRational>],
        obj: &mut [BigRational],
        basis: &mut [usize],
        allowed: usize,
    ) {
        loop {
            // Bland: entering = least column with a positive reduced cost.
            let Some(s) = (0..allowed).find(|&j| obj[j].is_positive()) else { break };
            let mut leave: Option<usize> = None;
            for r in 0..t.len() {
                if t[r][s].is_positive() {
                    let better = match leave {
                        None => true,
                        Some(lr) => {
                            let last = t[r].len() - 1;
                            let cand = &t[r][last] / &t[r][s];
                            let best = &t[lr][last] / &t[lr][s];
                            cand < best || (cand == best && basis[r] < basis[lr])
                        }
                    };
                    if better {
                        leave = Some(r);
                    }
                }
            }
            let Some(r) = leave else { break };
            pivot(t, obj, basis, r, s);
        }
    }

    // Phase 1: maximize -sum(artificials); feasible iff the optimum is 0.
    let mut obj1: Vec<BigRational> = vec![zero.clone(); n + m + 1];
    for x in obj1[n..n + m].iter_mut() {
        *x = -BigRational::one();
    }
    for i in 0..m {
        let f = obj1[n + i].clone();
        if !f.is_zero() {
            for c in 0..obj1.len() {
                let d = &t[i][c] * &f;
                obj1[c] -= d;
            }
        }
    }
    optimize(&mut t, &mut obj1, &mut basis, n + m);
    // Objective value is minus the objective-row rhs; max(-sum a) < 0 means
    // no feasible point.
    let phase1 = -obj1.last().unwrap().clone();
    if phase1.is_negative() {
        return SimplexOutcome::Infeasible;
    }
    // Drive any zero-level artificials out of the basis.
    for r in 0..m {
        if basis[r] >= n {
            if let Some(s) = (0..n).find(|&j| !t[r][j].is_zero()) {
                let mut zero_obj = vec![zero.clone(); n + m + 1];
                pivot(&mut t, &mut zero_obj, &mut basis, r, s);
            }
        }
    }

    // Phase 2: the real objective (artificials barred from re-entering).
    let mut obj2: Vec<BigRational> = objective.to_vec();
    obj2.resize(n + m, zero.clone());
    obj2.push(zero.clone());
    for r in 0..m {
        if basis[r] < n {
            let f = obj2[basis[r]].clone();
            if !f.is_zero() {
                for c in 0..obj2.len() {
                    let d = &t[r][c] * &f;
                    obj2[c] -= d;
                }
            }
        }
    }
    optimize(&mut t, &mut obj2, &mut basis, n);
    let value = -obj2.last().unwrap().clone();
    let mut solution = vec![BigRational::zero(); n];
    for r in 0..m {
        if basis[r] < n {
            let last = t[r].len() - 1;
            solution[basis[r]] = t[r][last].clone();
        }
    }
    SimplexOutcome::Optimal { value, solution }
}

/// Outcome of the admissibility test, with the positive rational witness when
/// the family is admissible.
#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// One coefficient per family member, aligned with `member_labels`.
    pub witness: Option<Vec<BigRational>>,
    pub member_labels: Vec<String>,
}

/// Decide whether `(1,...,1)` is a positive rational combination of the
/// members' edge vectors, maximizing the minimum coefficient.
///
/// With `lambda_G = y_G + t`, `y_G >= 0`, the system becomes
/// `sum y_G mu(G) + t*s = 1` where `s` is the sum of all edge vectors.
/// Achievable `t` form an interval `[0, T]` (the cone is closed under adding
/// `t*s`), so capping `t <= 1` keeps the LP bounded without changing the sign
/// of the optimum.
pub fn admissible(family: &DigraphFamily) -> Result<AdmissibilityReport> {
    let member_labels: Vec<String> = family.members.iter().map(|m| m.label.clone()).collect();
    let mu: Vec<Vec<BigInt>> = family
        .members
        .iter()
        .map(|m| m.graph.edge_vector().entries().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if mu.is_empty() {
        return Err(Error::InvalidParameter("family has no members".into()));
    }
    let k = family.color_count as usize;
    let g = mu.len();
    let rat = |x: &BigInt| BigRational::from_integer(x.clone());
    // Variables: y_1..y_g, t, slack u. Rows: k color equations plus t + u = 1.
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(k + 1);
    for c in 0..k {
        let mut row: Vec<BigRational> = (0..g).map(|i| rat(&mu[i][c])).collect();
        let s: BigInt = mu.iter().map(|v| v[c].clone()).sum();
        row.push(rat(&s));
        row.push(BigRational::zero());
        rows.push(row);
    }
    let mut cap = vec![BigRational::zero(); g];
    cap.push(BigRational::one());
    cap.push(BigRational::one());
    rows.push(cap);
    let rhs = vec![BigRational::one(); k + 1];
    let mut objective = vec![BigRational::zero(); g + 2];
    objective[g] = BigRational::one();

    match simplex_max(&rows, &rhs, &objective) {
        SimplexOutcome::Infeasible => {
            Ok(AdmissibilityReport { admissible: false, witness: None, member_labels })
        }
        SimplexOutcome::Optimal { value, solution } => {
            if value.is_positive() {
                let t = &solution[g];
                let witness: Vec<BigRational> = (0..g).map(|i| &solution[i] + t).collect();
                Ok(AdmissibilityReport { admissible: true, witness: Some(witness), member_labels })
            } else {
                Ok(AdmissibilityReport { admissible: false, witness: None, member_labels })
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Congruence and integrality conditions
// ---------------------------------------------------------------------------

/// The two divisibility conditions of the asymptotic existence theorem:
/// `n(n-1) = 0 mod beta` and `n-1 = 0 mod alpha`. Both are necessary for any
/// decomposition of `K_n^(r)` by edge and degree counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceReport {
    pub beta_ok: bool,
    pub alpha_ok: bool,
}

pub fn theorem_congruences(alpha: &BigInt, beta: &BigInt, n: u64) -> Result<CongruenceReport> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::InvalidParameter("zero modulus in congruence check".into()));
    }
    let n = BigInt::from(n);
    let beta_rem: BigInt = &n * (&n - 1) % beta;
    let alpha_rem: BigInt = (&n - 1) % alpha;
    Ok(CongruenceReport { beta_ok: beta_rem.is_zero(), alpha_ok: alpha_rem.is_zero() })
}

/// The three integrality/admissibility conditions for a family at a given
/// `n`: (i) `n(n-1)*(1,...,1)` integral over edge vectors, (ii)
/// `(n-1)*(1,...,1)` integral over degree vectors, (iii) admissibility.
#[derive(Debug, Clone)]
pub struct IntegralityReport {
    pub edge_combination: Option<Vec<BigInt>>,
    pub edge_labels: Vec<String>,
    pub degree_combination: Option<Vec<BigInt>>,
    pub degree_labels: Vec<String>,
    pub admissibility: AdmissibilityReport,
}

pub fn integrality_conditions(family: &DigraphFamily, n: u64) -> Result<IntegralityReport> {
    let n = BigInt::from(n);
    let edges = family_edge_vectors(family);
    let degrees = family_degree_vectors(family);
    let nn1 = &n * (&n - 1);
    let n1 = &n - 1;
    let edge_combination =
        integral_membership(&edges.vectors, &ones(family.color_count as usize, &nn1))?;
    let degree_combination =
        integral_membership(&degrees.vectors, &ones(2 * family.color_count as usize, &n1))?;
    Ok(IntegralityReport {
        edge_combination,
        edge_labels: edges.labels,
        degree_combination,
        degree_labels: degrees.labels,
        admissibility: admissible(family)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family_g, family_g_cwc, family_gstar, family_hstar};
    use crate::model::Composition;

    fn big(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn verify_combination(vectors: &[Vec<BigInt>], coeffs: &[BigInt], target: &[BigInt]) {
        let k = target.len();
        let mut acc = vec![BigInt::zero(); k];
        for (v, c) in vectors.iter().zip(coeffs) {
            for j in 0..k {
                acc[j] += &v[j] * c;
            }
        }
        assert_eq!(acc, target, "witness does not reproduce target");
    }

    #[test]
    fn lattice_constant_examples() {
        let vecs = [big(&[4, 2]), big(&[0, 1])];
        let (t0, w) = lattice_constant(&vecs).unwrap().unwrap();
        assert_eq!(t0, BigInt::from(4));
        verify_combination(&vecs, &w, &big(&[4, 4]));

        let (t0, _) = lattice_constant(&[big(&[1, 1])]).unwrap().unwrap();
        assert_eq!(t0, BigInt::one());

        let (t0, _) = lattice_constant(&[big(&[2, 0]), big(&[0, 2])]).unwrap().unwrap();
        assert_eq!(t0, BigInt::from(2));

        // Color 2 is never touched: no constant vector at all.
        assert!(lattice_constant(&[big(&[1, 0])]).unwrap().is_none());
    }

    #[test]
    fn integral_membership_examples() {
        // Edge vectors of the weight-3 generalized-composition family for
        // q = 3 reach n(n-1)*(1,1) at n = 7.
        let vecs = [big(&[6, 0]), big(&[0, 6]), big(&[4, 2]), big(&[2, 4])];
        let target = big(&[42, 42]);
        let coeffs = integral_membership(&vecs, &target).unwrap().unwrap();
        verify_combination(&vecs, &coeffs, &target);

        assert!(integral_membership(&[big(&[2, 0])], &big(&[1, 0])).unwrap().is_none());

        let coeffs = integral_membership(&vecs, &big(&[4, 2])).unwrap().unwrap();
        verify_combination(&vecs, &coeffs, &big(&[4, 2]));
    }

    #[test]
    fn cone_gcd_unit_vectors() {
        let r = cone_gcd(&[big(&[1, 0]), big(&[0, 1])], &ConeOptions::default()).unwrap();
        assert_eq!(r.value, Some(BigInt::one()));
    }

    #[test]
    fn cone_gcd_g21_degree_vectors() {
        let vecs =
            [big(&[1, 2, 1, 0]), big(&[2, 0, 0, 2]), big(&[0, 0, 0, 1]), big(&[0, 0, 1, 0])];
        let r = cone_gcd(&vecs, &ConeOptions::default()).unwrap();
        assert_eq!(r.value, Some(BigInt::from(4)));
        let w = r.witness.unwrap();
        verify_combination(&vecs, &w, &big(&[4, 4, 4, 4]));
    }

    #[test]
    fn cone_gcd_g21_edge_vectors() {
        let vecs = [big(&[4, 2]), big(&[0, 1])];
        let r = cone_gcd(&vecs, &ConeOptions::default()).unwrap();
        assert_eq!(r.value, Some(BigInt::from(4)));
    }

    /// Breadth-first enumeration of every nonnegatively achievable point in
    /// the box `[0, cap]^k`; the oracle for small cone_gcd instances.
    fn brute_cone_gcd(vectors: &[Vec<BigInt>], cap: u64) -> Option<u64> {
        use std::collections::VecDeque;
        let k = vectors[0].len();
        let capb = BigInt::from(cap);
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        let start = vec![BigInt::zero(); k];
        seen.insert(start.clone());
        queue.push_back(start);
        let mut achieved: Vec<u64> = Vec::new();
        while let Some(p) = queue.pop_front() {
            if !p[0].is_zero() && p.iter().all(|x| x == &p[0]) {
                achieved.push(p[0].clone().try_into().unwrap());
            }
            for v in vectors {
                let q: Vec<BigInt> = p.iter().zip(v).map(|(a, b)| a + b).collect();
                if q.iter().all(|x| x <= &capb) && seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        achieved.into_iter().reduce(num_integer::gcd)
    }

    #[test]
    fn cone_gcd_matches_brute_enumeration() {
        let cases: Vec<Vec<Vec<BigInt>>> = vec![
            vec![big(&[1, 2, 1, 0]), big(&[2, 0, 0, 2]), big(&[0, 0, 0, 1]), big(&[0, 0, 1, 0])],
            vec![big(&[4, 2]), big(&[0, 1])],
            vec![big(&[2, 0]), big(&[0, 2])],
            vec![big(&[3, 1]), big(&[1, 3])],
            vec![big(&[2, 3]), big(&[0, 1]), big(&[1, 0])],
            vec![big(&[6, 3, 3, 0]), big(&[0, 1, 0, 0]), big(&[0, 0, 1, 0]), big(&[0, 0, 0, 1])],
        ];
        for vecs in cases {
            let got = cone_gcd(&vecs, &ConeOptions::default()).unwrap();
            let brute = brute_cone_gcd(&vecs, 24);
            match (got.value, brute) {
                (Some(v), Some(b)) => {
                    let v: u64 = v.try_into().unwrap();
                    assert_eq!(v, b, "vectors {vecs:?}");
                }
                (None, None) => {}
                (v, b) => panic!("cone_gcd {v:?} vs brute {b:?} for {vecs:?}"),
            }
        }
    }

    #[test]
    fn alpha_beta_of_g21() {
        let f = family_g(&comp(&[2, 1])).unwrap();
        let a = alpha(&f).unwrap();
        let b = beta(&f).unwrap();
        assert_eq!(a.result.value, Some(BigInt::from(4)));
        assert_eq!(b.result.value, Some(BigInt::from(4)));
    }

    #[test]
    fn alpha_beta_of_gstar32() {
        let f = family_gstar(&comp(&[3, 2])).unwrap();
        assert_eq!(alpha(&f).unwrap().result.value, Some(BigInt::from(6)));
        assert_eq!(beta(&f).unwrap().result.value, Some(BigInt::from(6)));
    }

    #[test]
    fn alpha_beta_of_hstar22() {
        let f = family_hstar(2, 2).unwrap();
        assert_eq!(alpha(&f).unwrap().result.value, Some(BigInt::from(2)));
        assert_eq!(beta(&f).unwrap().result.value, Some(BigInt::from(4)));
    }

    #[test]
    fn admissible_g21() {
        let f = family_g(&comp(&[2, 1])).unwrap();
        let rep = admissible(&f).unwrap();
        assert!(rep.admissible);
        let w = rep.witness.unwrap();
        // lambda = (1/4, 1/2) is the max-min witness.
        assert_eq!(w[0], BigRational::new(BigInt::one(), BigInt::from(4)));
        assert_eq!(w[1], BigRational::new(BigInt::one(), BigInt::from(2)));
        // Expand: sum lambda_G mu(G) = (1,1).
        let mu: Vec<Vec<BigInt>> = f
            .members
            .iter()
            .map(|m| m.graph.edge_vector().entries().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        for c in 0..2 {
            let total: BigRational = mu
                .iter()
                .zip(&w)
                .map(|(v, l)| BigRational::from_integer(v[c].clone()) * l)
                .sum();
            assert_eq!(total, BigRational::one());
        }
    }

    #[test]
    fn inadmissible_single_color_family() {
        // One member with edge vector (1, 0): color 2 is uncoverable.
        use crate::families::{DigraphFamily, FamilyMember};
        let mut g = crate::model::ColoredDigraph::new(2, 2);
        g.add_edge(1, 2, 1).unwrap();
        let f = DigraphFamily {
            name: "single".into(),
            color_count: 2,
            params: None,
            members: vec![FamilyMember {
                label: "e1".into(),
                main: true,
                graph: g,
                classes: vec![vec![1], vec![2]],
            }],
        };
        let rep = admissible(&f).unwrap();
        assert!(!rep.admissible);
    }

    #[test]
    fn admissible_cwc_families() {
        // Symmetry makes the sum of all edge vectors constant, so every
        // weight-w family over every alphabet in the grid is admissible.
        for q in 2..=4u32 {
            for w in 2..=5u32 {
                let g = family_g_cwc(q, w).unwrap();
                assert!(admissible(&g).unwrap().admissible, "G(q={q},w={w})");
                let gs = crate::families::family_gstar_cwc(q, w).unwrap();
                assert!(admissible(&gs).unwrap().admissible, "G*(q={q},w={w})");
            }
        }
    }

    #[test]
    fn congruences_for_g21() {
        let f = family_g(&comp(&[2, 1])).unwrap();
        let a = alpha(&f).unwrap().result.value.unwrap();
        let b = beta(&f).unwrap().result.value.unwrap();
        assert_eq!(
            theorem_congruences(&a, &b, 5).unwrap(),
            CongruenceReport { beta_ok: true, alpha_ok: true }
        );
        assert_eq!(
            theorem_congruences(&a, &b, 4).unwrap(),
            CongruenceReport { beta_ok: true, alpha_ok: false }
        );
    }

    #[test]
    fn congruences_for_hstar22() {
        let f = family_hstar(2, 2).unwrap();
        let a = alpha(&f).unwrap().result.value.unwrap();
        let b = beta(&f).unwrap().result.value.unwrap();
        assert_eq!(
            theorem_congruences(&a, &b, 5).unwrap(),
            CongruenceReport { beta_ok: true, alpha_ok: true }
        );
    }

    #[test]
    fn integrality_conditions_g3_q3() {
        let f = family_g_cwc(3, 3).unwrap();
        for n in [3u64, 7, 9, 13] {
            let rep = integrality_conditions(&f, n).unwrap();
            let edge = rep.edge_combination.expect("condition (i)");
            let nn1 = BigInt::from(n) * BigInt::from(n - 1);
            let edges = family_edge_vectors(&f);
            verify_combination(&edges.vectors, &edge, &ones(2, &nn1));
            let deg = rep.degree_combination.expect("condition (ii)");
            let degs = family_degree_vectors(&f);
            verify_combination(&degs.vectors, &deg, &ones(4, &(BigInt::from(n) - 1)));
            assert!(rep.admissibility.admissible);
        }
    }

    #[test]
    fn zero_vectors_are_ignored() {
        let r = cone_gcd(&[big(&[0, 0]), big(&[1, 1])], &ConeOptions::default()).unwrap();
        assert_eq!(r.value, Some(BigInt::one()));
        let r = cone_gcd(&[big(&[0, 0])], &ConeOptions::default()).unwrap();
        assert_eq!(r.value, None);
        assert!(cone_gcd(&[], &ConeOptions::default()).is_err());
    }
}
