//! Eulerian numbers, descent classes, bounded weak compositions, and the
//! exact evaluation of both sides of the Brenti–Welker identity
//!
//! ```text
//! sum_{j=1}^{d} C(r-1, d+1, i*r - j) * A(d, j)  =  r^d * A(d, i)
//! ```
//!
//! where `A(d, i)` is the Eulerian number (permutations of `[d]` with `i - 1`
//! descents) and `C(r, d, i)` counts weak compositions of `i` into `d` parts,
//! each part at most `r`. Everything is computed in arbitrary precision.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// One row of the Eulerian triangle: `A(d, 1), ..., A(d, d)`.
///
/// Built by the recurrence `A(d, i) = i*A(d-1, i) + (d-i+1)*A(d-1, i-1)`
/// with `A(1, 1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTable {
    d: usize,
    row: Vec<BigUint>,
}

impl EulerianTable {
    pub fn new(d: usize) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameter(format!("d must be >= 1, got {d}")));
        }
        let mut row = vec![BigUint::one()];
        for n in 2..=d {
            let mut next = Vec::with_capacity(n);
            for i in 1..=n {
                // a(i) = i*A(n-1, i) + (n-i+1)*A(n-1, i-1), out-of-range terms are 0.
                let mut entry = BigUint::zero();
                if i < n {
                    entry += BigUint::from(i) * &row[i - 1];
                }
                if i >= 2 {
                    entry += BigUint::from(n - i + 1) * &row[i - 2];
                }
                next.push(entry);
            }
            row = next;
        }
        Ok(EulerianTable { d, row })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `A(d, i)`; zero for `i` outside `[1, d]`.
    pub fn get(&self, i: i64) -> BigUint {
        if i < 1 || i > self.d as i64 {
            BigUint::zero()
        } else {
            self.row[(i - 1) as usize].clone()
        }
    }

    /// The entries `A(d, 1), ..., A(d, d)`.
    pub fn row(&self) -> &[BigUint] {
        &self.row
    }
}

/// The Eulerian number `A(d, i)`: permutations of `[d]` with exactly `i - 1`
/// descents. Returns zero for `i` outside `[1, d]`; rejects `d < 1`.
pub fn eulerian(d: usize, i: i64) -> Result<BigUint> {
    Ok(EulerianTable::new(d)?.get(i))
}

/// Largest `d` for which [`descent_class`] will enumerate all `d!` permutations.
pub const DESCENT_ENUMERATION_CAP: usize = 9;

/// Number of descents of a permutation: positions `t` with `perm[t] > perm[t+1]`.
pub fn descents(perm: &[usize]) -> usize {
    perm.windows(2).filter(|w| w[0] > w[1]).count()
}

/// All permutations of `[d]` (as 1-based value vectors, in lexicographic
/// order) with exactly `j - 1` descents. This is the brute-force counterpart
/// of [`eulerian`]: the two are computed by independent routes and
/// cross-checked in tests.
pub fn descent_class(d: usize, j: i64) -> Result<Vec<Vec<usize>>> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be >= 1, got {d}")));
    }
    if d > DESCENT_ENUMERATION_CAP {
        return Err(Error::EnumerationTooLarge {
            d,
            cap: DESCENT_ENUMERATION_CAP,
        });
    }
    if j < 1 || j > d as i64 {
        return Ok(Vec::new());
    }
    let wanted = (j - 1) as usize;
    let mut perm: Vec<usize> = (1..=d).collect();
    let mut out = Vec::new();
    loop {
        if descents(&perm) == wanted {
            out.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

/// Advance `perm` to its lexicographic successor; false once at the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut pivot = n - 1;
    while pivot > 0 && perm[pivot - 1] >= perm[pivot] {
        pivot -= 1;
    }
    if pivot == 0 {
        return false;
    }
    let mut swap = n - 1;
    while perm[swap] <= perm[pivot - 1] {
        swap -= 1;
    }
    perm.swap(pivot - 1, swap);
    perm[pivot..].reverse();
    true
}

/// A weak composition with bounded parts: `parts` sum to the prescribed total
/// and each part lies in `[0, bound]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundedComposition {
    parts: Vec<usize>,
    bound: usize,
}

impl BoundedComposition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Every vector of length `d` with parts in `[0, bound]` summing to `total`,
/// in lexicographic order. Empty when `total < 0` or `total > bound * d`.
pub fn compositions_bounded(bound: usize, d: usize, total: i64) -> Result<Vec<BoundedComposition>> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be >= 1, got {d}")));
    }
    let mut out = Vec::new();
    if total < 0 {
        return Ok(out);
    }
    let total = total as usize;
    if (total as u128) > bound as u128 * d as u128 {
        return Ok(out);
    }
    let mut parts = vec![0usize; d];
    fill_compositions(bound, total, 0, &mut parts, &mut out);
    Ok(out)
}

fn fill_compositions(
    bound: usize,
    remaining: usize,
    pos: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<BoundedComposition>,
) {
    let slots_after = parts.len() - pos - 1;
    if pos == parts.len() - 1 {
        // remaining <= bound is guaranteed by the lower limit below.
        parts[pos] = remaining;
        out.push(BoundedComposition {
            parts: parts.clone(),
            bound,
        });
        return;
    }
    let capacity_after = bound as u128 * slots_after as u128;
    let low = if (remaining as u128) > capacity_after {
        remaining - (capacity_after as usize)
    } else {
        0
    };
    let high = bound.min(remaining);
    for p in low..=high {
        parts[pos] = p;
        fill_compositions(bound, remaining - p, pos + 1, parts, out);
    }
}

/// `C(bound, d, total)`: the number of weak compositions of `total` into `d`
/// parts, each at most `bound`. Computed by dynamic programming so it scales
/// far past what [`compositions_bounded`] can materialize.
pub fn composition_count(bound: usize, d: usize, total: i64) -> Result<BigUint> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be >= 1, got {d}")));
    }
    if total < 0 {
        return Ok(BigUint::zero());
    }
    let total = total as usize;
    if (total as u128) > bound as u128 * d as u128 {
        return Ok(BigUint::zero());
    }
    // ways[t] = number of bounded compositions of t into the parts seen so far.
    let mut ways = vec![BigUint::zero(); total + 1];
    ways[0] = BigUint::one();
    for _ in 0..d {
        // prefix[t] = sum of ways[0..=t]; next[t] = prefix[t] - prefix[t - bound - 1].
        let mut prefix = Vec::with_capacity(total + 2);
        prefix.push(BigUint::zero());
        for w in &ways {
            let last = prefix.last().expect("non-empty").clone();
            prefix.push(last + w);
        }
        for t in (0..=total).rev() {
            let lo = t.saturating_sub(bound);
            ways[t] = &prefix[t + 1] - &prefix[lo];
        }
    }
    Ok(ways[total].clone())
}

/// Both sides of the identity for one parameter triple, as exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub d: usize,
    pub i: usize,
    pub r: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluate `sum_j C(r-1, d+1, i*r - j) * A(d, j)` against `r^d * A(d, i)`.
pub fn identity_check(r: usize, d: usize, i: usize) -> Result<IdentityCheck> {
    let table = EulerianTable::new(d)?;
    identity_check_with(&table, r, i)
}

fn identity_check_with(table: &EulerianTable, r: usize, i: usize) -> Result<IdentityCheck> {
    let d = table.d();
    if r < 1 {
        return Err(Error::InvalidParameter(format!("r must be >= 1, got {r}")));
    }
    if i < 1 || i > d {
        return Err(Error::InvalidParameter(format!(
            "i must lie in [1, {d}], got {i}"
        )));
    }
    let ir = (i as i64)
        .checked_mul(r as i64)
        .ok_or_else(|| Error::InvalidParameter(format!("i*r overflows: i={i}, r={r}")))?;
    let mut lhs = BigUint::zero();
    for j in 1..=d {
        let count = composition_count(r - 1, d + 1, ir - j as i64)?;
        lhs += count * table.get(j as i64);
    }
    let exp = u32::try_from(d)
        .map_err(|_| Error::InvalidParameter(format!("d too large for exponent: {d}")))?;
    let rhs = BigUint::from(r).pow(exp) * table.get(i as i64);
    Ok(IdentityCheck { d, i, r, lhs, rhs })
}

/// Result of sweeping [`identity_check`] over a parameter box.
#[derive(Debug, Clone)]
pub struct IdentitySweep {
    pub d_max: usize,
    pub r_max: usize,
    pub entries: Vec<IdentityCheck>,
}

impl IdentitySweep {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.entries.iter().filter(|e| !e.holds())
    }
}

/// Check the identity on every triple `1 <= d <= d_max`, `1 <= i <= d`,
/// `1 <= r <= r_max`, in (d, i, r) order.
pub fn identity_sweep(d_max: usize, r_max: usize) -> Result<IdentitySweep> {
    if d_max < 1 || r_max < 1 {
        return Err(Error::InvalidParameter(format!(
            "d_max and r_max must be >= 1, got {d_max}, {r_max}"
        )));
    }
    let mut entries = Vec::new();
    for d in 1..=d_max {
        let table = EulerianTable::new(d)?;
        for i in 1..=d {
            for r in 1..=r_max {
                entries.push(identity_check_with(&table, r, i)?);
            }
        }
    }
    Ok(IdentitySweep {
        d_max,
        r_max,
        entries,
    })
}
