//! Relative ideals of a numerical semigroup: bounded-below sets `E ⊆ ℤ`
//! with `E + H ⊆ E`. They model the monomial fractional ideals of the
//! semigroup ring (the maximal ideal, the canonical ideal, conductors).

use std::fmt;

use crate::error::{ArfError, Result};
use crate::semigroup::NumericalSemigroup;

/// A relative ideal stored as a membership table over `[min, bound)`;
/// every integer at or above `bound` is a member and nothing below `min` is.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    min: i64,
    bound: i64,
    window: Vec<bool>,
}

impl RelativeIdeal {
    /// Builds the ideal whose membership is `member` on `[lo, tail)`, with
    /// `[tail, ∞)` included and nothing below `lo`. Closure under the ambient
    /// is the caller's responsibility.
    pub(crate) fn from_fn(
        ambient: &NumericalSemigroup,
        lo: i64,
        tail: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let e = Self::build(ambient, lo, tail, member);
        debug_assert!(e.closure_violation().is_none(), "not an ideal: {e}");
        e
    }

    fn build(ambient: &NumericalSemigroup, lo: i64, tail: i64, member: impl Fn(i64) -> bool) -> Self {
        let tail = tail.max(lo);
        let min = (lo..tail).find(|&n| member(n)).unwrap_or(tail);
        let bound = (min..tail).rev().find(|&n| !member(n)).map_or(min, |n| n + 1);
        let window = (min..bound).map(&member).collect();
        RelativeIdeal {
            ambient: ambient.clone(),
            min,
            bound,
            window,
        }
    }

    /// The ideal `members ∪ [tail, ∞)`, checked for `E + H ⊆ E`.
    pub fn new(ambient: &NumericalSemigroup, members: &[i64], tail: i64) -> Result<Self> {
        let lo = members.iter().copied().min().unwrap_or(tail).min(tail);
        let e = Self::build(ambient, lo, tail, |n| members.contains(&n));
        match e.closure_violation() {
            None => Ok(e),
            Some(n) => Err(ArfError::Domain(format!(
                "{n} must belong to the set for it to be an ideal of {ambient}"
            ))),
        }
    }

    /// The semigroup itself as an ideal over itself (the unit ideal).
    pub fn principal(ambient: &NumericalSemigroup) -> Self {
        Self::from_fn(ambient, 0, ambient.conductor(), |n| ambient.contains(n))
    }

    /// `M = H \ {0}`.
    pub fn maximal(ambient: &NumericalSemigroup) -> Self {
        Self::from_fn(ambient, 1, ambient.conductor().max(1), |n| ambient.contains(n))
    }

    /// An oversemigroup `T ⊇ H` viewed as an ideal of `H`.
    pub fn from_semigroup(ambient: &NumericalSemigroup, t: &NumericalSemigroup) -> Result<Self> {
        if !ambient.is_subset_of(t) {
            return Err(ArfError::Domain(format!("{ambient} is not contained in {t}")));
        }
        Ok(Self::from_fn(ambient, 0, t.conductor(), |n| t.contains(n)))
    }

    /// `E + H'`, the ideal of `ambient` generated by the elements of `E`.
    pub fn generated_over(&self, ambient: &NumericalSemigroup) -> Self {
        let unit = Self::principal(ambient);
        sumset(ambient, self, &unit)
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    /// Smallest element.
    pub fn min(&self) -> i64 {
        self.min
    }

    /// Normalized tail start: `[bound, ∞) ⊆ E` and `bound - 1 ∉ E` unless
    /// `bound == min`.
    pub fn bound(&self) -> i64 {
        self.bound
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        if n < self.min {
            false
        } else if n >= self.bound {
            true
        } else {
            self.window[(n - self.min) as usize]
        }
    }

    /// Members in `[min, bound)`.
    pub fn finite_part(&self) -> Vec<i64> {
        (self.min..self.bound).filter(|&n| self.contains(n)).collect()
    }

    pub fn translate(&self, k: i64) -> Self {
        RelativeIdeal {
            ambient: self.ambient.clone(),
            min: self.min + k,
            bound: self.bound + k,
            window: self.window.clone(),
        }
    }

    pub fn is_subset_of(&self, other: &RelativeIdeal) -> bool {
        self.min >= other.min
            && (self.min..self.bound.max(other.bound)).all(|n| !self.contains(n) || other.contains(n))
    }

    /// Elementwise sumset `E + F`.
    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(sumset(&self.ambient, self, other))
    }

    /// Colon `E - F = {x : x + F ⊆ E}`.
    pub fn quotient(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_ambient(other)?;
        // Below min(E) - min(F) the shifted minimum of F misses E; from
        // bound(E) - min(F) on, all of x + F sits in the tail of E.
        let lo = self.min - other.min;
        let tail = self.bound - other.min;
        Ok(Self::from_fn(&self.ambient, lo, tail, |x| {
            (other.min..self.bound - x).all(|f| !other.contains(f) || self.contains(x + f))
        }))
    }

    /// `|E \ F|` for `F ⊆ E`.
    pub fn colength(&self, sub: &RelativeIdeal) -> Result<usize> {
        self.same_ambient(sub)?;
        if !sub.is_subset_of(self) {
            return Err(ArfError::Domain(format!("{sub} is not contained in {self}")));
        }
        let top = self.bound.max(sub.bound);
        Ok((self.min..top)
            .filter(|&n| self.contains(n) && !sub.contains(n))
            .count())
    }

    /// The `x` with `E + E = x + E`, if `E` is stable. Comparing minima forces
    /// `x = min(E)`, so that is the only candidate.
    pub fn stability_witness(&self) -> Option<i64> {
        let double = sumset(&self.ambient, self, self);
        (double == self.translate(self.min)).then_some(self.min)
    }

    pub fn is_stable(&self) -> bool {
        self.stability_witness().is_some()
    }

    /// An element of `E + E` outside `min(E) + E`, if any.
    pub fn instability_witness(&self) -> Option<i64> {
        let double = sumset(&self.ambient, self, self);
        let shifted = self.translate(self.min);
        (double.min..double.bound.max(shifted.bound)).find(|&n| double.contains(n) && !shifted.contains(n))
    }

    /// The smallest numerical semigroup containing `E`; requires `min(E) = 0`.
    pub fn generated_monoid(&self) -> Result<NumericalSemigroup> {
        if self.min != 0 {
            return Err(ArfError::Domain(format!(
                "generated monoid needs min 0, got {}",
                self.min
            )));
        }
        // Sums landing at or above the bound are already members.
        let b = self.bound;
        let mut table = vec![false; b.max(1) as usize];
        table[0] = true;
        for n in 1..b {
            let i = n as usize;
            table[i] = self.contains(n) || (1..n).any(|a| table[a as usize] && table[i - a as usize]);
        }
        Ok(NumericalSemigroup::from_membership(b, |n| table[n as usize]))
    }

    /// The ideal as a numerical semigroup, when it is one (contains 0 and is
    /// additively closed).
    pub fn as_semigroup(&self) -> Option<NumericalSemigroup> {
        if self.min != 0 {
            return None;
        }
        let fin = self.finite_part();
        let closed = fin
            .iter()
            .all(|&a| fin.iter().all(|&b| a + b >= self.bound || self.contains(a + b)));
        closed.then(|| NumericalSemigroup::from_membership(self.bound, |n| self.contains(n)))
    }

    fn same_ambient(&self, other: &RelativeIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(ArfError::AmbientMismatch)
        }
    }

    /// Some `e + a ∉ E` with `e ∈ E`, `a` a generator of the ambient.
    fn closure_violation(&self) -> Option<i64> {
        let gens = self.ambient.generators();
        (self.min..self.bound)
            .filter(|&e| self.contains(e))
            .flat_map(|e| gens.iter().map(move |&a| e + a))
            .find(|&n| !self.contains(n))
    }
}

fn sumset(ambient: &NumericalSemigroup, a: &RelativeIdeal, b: &RelativeIdeal) -> RelativeIdeal {
    let lo = a.min + b.min;
    // a + min(b) and min(a) + b already cover these tails.
    let tail = (a.bound + b.min).min(a.min + b.bound);
    let len = (tail - lo).max(0) as usize;
    let mut table = vec![false; len];
    let fa = a.finite_part();
    let fb = b.finite_part();
    for &x in &fa {
        for &y in &fb {
            let n = x + y;
            if n < tail {
                table[(n - lo) as usize] = true;
            }
        }
    }
    RelativeIdeal::from_fn(ambient, lo, tail, |n| table[(n - lo) as usize])
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin = self
            .finite_part()
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if fin.is_empty() {
            write!(f, "[{},inf)", self.bound)
        } else {
            write!(f, "{{{fin}}} u [{},inf)", self.bound)
        }
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ambient)
    }
}
