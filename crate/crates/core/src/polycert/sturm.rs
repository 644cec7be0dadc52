//! Sturm chains and exact real-root counting on rational intervals.

use num_rational::BigRational;
use num_traits::Zero;

use super::interval::RationalInterval;
use super::poly::RationalPoly;
use super::PolyCertError;

/// Canonical Sturm chain: `p`, `p'`, then negated remainders. Each element is
/// rescaled to its primitive integer form (a positive scaling, so every sign
/// evaluation is unchanged). The terminal element is a nonzero constant when
/// `p` is square-free, otherwise the gcd-reduced terminal.
pub fn sturm_chain(p: &RationalPoly) -> Result<Vec<RationalPoly>, PolyCertError> {
    if p.is_zero() {
        return Err(PolyCertError::DegenerateInput);
    }
    let mut chain = vec![p.primitive_part()];
    if p.degree() == Some(0) {
        return Ok(chain);
    }
    chain.push(p.derivative().primitive_part());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive_part());
        if chain.last().expect("just pushed").degree() == Some(0) {
            break;
        }
    }
    Ok(chain)
}

/// Sign variations of the chain evaluated at `x` (zeros skipped).
pub(crate) fn sign_variations_at(chain: &[RationalPoly], x: &BigRational) -> usize {
    let mut variations = 0;
    let mut last: Option<bool> = None; // sign as "is positive"
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v > BigRational::zero();
        if let Some(prev) = last {
            if prev != pos {
                variations += 1;
            }
        }
        last = Some(pos);
    }
    variations
}

/// Exact number of distinct real roots of `p` in the interval, honoring the
/// open/closed endpoint flags. Roots sitting exactly at a rational endpoint
/// are divided out before the Sturm count, so no perturbation is needed.
pub fn count_real_roots(
    p: &RationalPoly,
    iv: &RationalInterval,
) -> Result<usize, PolyCertError> {
    if p.is_zero() {
        return Err(PolyCertError::DegenerateInput);
    }
    if iv.is_point() {
        let at_point = p.eval(iv.lo()).is_zero();
        return Ok(usize::from(at_point));
    }
    let mut sf = p.square_free_part();
    let mut lo_root = false;
    while sf.eval(iv.lo()).is_zero() {
        sf = sf.deflate_root(iv.lo());
        lo_root = true;
    }
    let mut hi_root = false;
    while sf.eval(iv.hi()).is_zero() {
        sf = sf.deflate_root(iv.hi());
        hi_root = true;
    }
    let interior = if sf.degree().is_none() || sf.degree() == Some(0) {
        0
    } else {
        let chain = sturm_chain(&sf)?;
        // Endpoints are non-roots of `sf` here, so (lo, hi] equals (lo, hi).
        sign_variations_at(&chain, iv.lo()) - sign_variations_at(&chain, iv.hi())
    };
    let mut count = interior;
    if lo_root && !iv.lo_open() {
        count += 1;
    }
    if hi_root && !iv.hi_open() {
        count += 1;
    }
    Ok(count)
}

/// Shrinks a bracket around the unique root of `p` in `iv` down to the given
/// width by bisection on exact Sturm counts. Endpoints of the result are
/// rational, the root lies strictly inside unless it is hit exactly.
pub fn isolate_root(
    p: &RationalPoly,
    iv: &RationalInterval,
    width: &BigRational,
) -> Result<(BigRational, BigRational), PolyCertError> {
    let found = count_real_roots(p, iv)?;
    if found != 1 {
        return Err(PolyCertError::RootCountMismatch(found));
    }
    let sf = p.square_free_part();
    let mut lo = iv.lo().clone();
    let mut hi = iv.hi().clone();
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        if sf.eval(&mid).is_zero() {
            // Exact hit: return a degenerate-width bracket around it.
            let half = width / BigRational::from_integer(2.into());
            return Ok((&mid - &half, &mid + &half));
        }
        let left = RationalInterval::new(lo.clone(), mid.clone(), iv.lo_open(), true)?;
        if count_real_roots(&sf, &left)? == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}
