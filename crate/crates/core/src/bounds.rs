//! Johnson-type upper bounds on the sizes of constant-composition,
//! constant-weight and multiply constant-weight codes.
//!
//! Everything here is evaluated in exact integer arithmetic. The nested
//! floors are order-sensitive: the inner floor is computed first, then the
//! product, then the outer floor, i.e. `floor(n/a * x)` is evaluated as
//! `floor(n * x / a)` with `x` already floored. No floating point is used.

use crate::error::{Error, Result};
use crate::model::Composition;

fn floor_div_mul(n: u64, inner: u64, denom: u64) -> Result<u64> {
    if denom == 0 {
        return Err(Error::InvalidParameter("division by zero in bound".into()));
    }
    let prod = (n as u128) * (inner as u128);
    u64::try_from(prod / denom as u128).map_err(|_| Error::Overflow("bound evaluation"))
}

/// One step of the Johnson recursion for constant-composition codes:
/// `A_q(n,d,[w_1,...]) <= floor(n/w_1 * inner)` where `inner` bounds
/// `A_q(n-1,d,[w_1-1,...])`.
pub fn johnson_step_ccc(n: u64, composition: &Composition, inner: u64) -> Result<u64> {
    let w1 = u64::from(composition.parts()[0]);
    if w1 == 0 {
        return Err(Error::InvalidComposition("w_1 = 0 in Johnson step".into()));
    }
    floor_div_mul(n, inner, w1)
}

fn check_ccc(n: u64, composition: &Composition, min_weight: u32) -> Result<()> {
    composition.require_monotone()?;
    let w = composition.weight();
    if w < min_weight {
        return Err(Error::InvalidComposition(format!(
            "weight {w} < {min_weight} for this bound"
        )));
    }
    if n < u64::from(w) {
        return Err(Error::InvalidParameter(format!("n = {n} < w = {w}")));
    }
    Ok(())
}

/// Upper bound on `A_q(n, 2w-2, [w_1,...,w_{q-1}])`:
/// `floor(n/w_1 * floor((n-1)/(w-1)))`.
pub fn bound_ccc_2w2(n: u64, composition: &Composition) -> Result<u64> {
    check_ccc(n, composition, 2)?;
    let w1 = u64::from(composition.parts()[0]);
    let w = u64::from(composition.weight());
    let inner = (n - 1) / (w - 1);
    floor_div_mul(n, inner, w1)
}

/// Upper bound on `A_q(n, 2w-3, [w_1,...,w_{q-1}])`:
/// `floor(n/w_1 * floor((n-1)/(w_1-1)))` when `w_1 > w_2`, and
/// `floor(n/w_1 * floor((n-1)/w_1))` otherwise.
pub fn bound_ccc_2w3(n: u64, composition: &Composition) -> Result<u64> {
    check_ccc(n, composition, 3)?;
    let parts = composition.parts();
    let w1 = u64::from(parts[0]);
    let w2 = parts.get(1).copied().map_or(0, u64::from);
    let denom = if w1 > w2 { w1 - 1 } else { w1 };
    if denom == 0 {
        return Err(Error::InvalidComposition("w_1 - 1 = 0 in the w_1 > w_2 case".into()));
    }
    let inner = (n - 1) / denom;
    floor_div_mul(n, inner, w1)
}

fn check_cwc(q: u32, n: u64, w: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("alphabet size {q} < 2")));
    }
    if w < 2 {
        return Err(Error::InvalidParameter(format!("weight {w} < 2 for this bound")));
    }
    if n < u64::from(w) {
        return Err(Error::InvalidParameter(format!("n = {n} < w = {w}")));
    }
    Ok(())
}

/// Upper bound on `A_q(n, 2w-2, w)`:
/// `floor((q-1)n/w * floor((n-1)/(w-1)))`.
pub fn bound_cwc_2w2(q: u32, n: u64, w: u32) -> Result<u64> {
    check_cwc(q, n, w)?;
    let w = u64::from(w);
    let inner = (n - 1) / (w - 1);
    floor_div_mul(u64::from(q - 1) * n, inner, w)
}

/// Upper bound on `A_q(n, 2w-3, w)`:
/// `floor((q-1)n/w * floor((q-1)(n-1)/(w-1)))`.
pub fn bound_cwc_2w3(q: u32, n: u64, w: u32) -> Result<u64> {
    check_cwc(q, n, w)?;
    let w = u64::from(w);
    let inner = u64::from(q - 1) * (n - 1) / (w - 1);
    floor_div_mul(u64::from(q - 1) * n, inner, w)
}

/// Upper bound on `M(m, n, 2mw-2, w)`: `floor(n/w * floor(n/w))`.
pub fn bound_mcwc(m: u32, n: u64, w: u32) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidParameter("m = 0".into()));
    }
    if w == 0 || u64::from(w) > n {
        return Err(Error::InvalidParameter(format!("need 1 <= w <= n, got w = {w}, n = {n}")));
    }
    let w = u64::from(w);
    floor_div_mul(n, n / w, w)
}

/// `A_q(n, 2w, anything of weight w) = floor(n/w)`: the full-distance base
/// case of the Johnson recursion.
pub fn base_full_distance(n: u64, w: u32) -> Result<u64> {
    if w == 0 || u64::from(w) > n {
        return Err(Error::InvalidParameter(format!("need 1 <= w <= n, got w = {w}, n = {n}")));
    }
    Ok(n / u64::from(w))
}
