//! The canonical ideal `K`, the semigroup `S` it generates, the conductor
//! `c = H - S` and the colength `ell = |H \ c|`.
//!
//! `K` is normalized to `{F - z : z ∉ H}`, the representative with minimum 0
//! sitting between `H` and ℕ. The translation that would carry a reduction
//! element of the canonical ideal to 0 is absorbed into this normalization.

use serde::Serialize;

use crate::ideal::RelativeIdeal;
use crate::lipman::endomorphism_semigroup;
use crate::semigroup::NumericalSemigroup;

/// `K = {x : F - x ∉ H}`.
pub fn canonical_ideal(h: &NumericalSemigroup) -> RelativeIdeal {
    let f = h.frobenius();
    RelativeIdeal::from_fn(h, 0, f + 1, |x| !h.contains(f - x))
}

/// `S`, the monoid generated by the canonical ideal.
pub fn extension_s(h: &NumericalSemigroup) -> NumericalSemigroup {
    canonical_ideal(h)
        .generated_monoid()
        .expect("canonical ideal has minimum 0")
}

/// The conductor `H - S` and its colength in `H`.
pub fn conductor_and_length(h: &NumericalSemigroup) -> (RelativeIdeal, usize) {
    conductor_of(h, &extension_s(h))
}

fn conductor_of(h: &NumericalSemigroup, s: &NumericalSemigroup) -> (RelativeIdeal, usize) {
    let unit = RelativeIdeal::principal(h);
    let s_ideal = RelativeIdeal::from_semigroup(h, s).expect("H ⊆ S");
    let c = unit.quotient(&s_ideal).expect("same ambient");
    let ell = unit.colength(&c).expect("the conductor lies in H");
    (c, ell)
}

/// Canonical ideal, its generated semigroup, the conductor and its colength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalData {
    pub k: RelativeIdeal,
    pub s: NumericalSemigroup,
    pub conductor: RelativeIdeal,
    pub ell: usize,
}

impl CanonicalData {
    pub fn compute(h: &NumericalSemigroup) -> Self {
        let k = canonical_ideal(h);
        let s = k.generated_monoid().expect("canonical ideal has minimum 0");
        let (conductor, ell) = conductor_of(h, &s);
        CanonicalData { k, s, conductor, ell }
    }

    pub fn summary(&self) -> CanonicalSummary {
        CanonicalSummary {
            k_finite_part: self.k.finite_part(),
            k_bound: self.k.bound(),
            s_gens: self.s.generators().to_vec(),
            conductor_finite_part: self.conductor.finite_part(),
            conductor_min_full_tail: self.conductor.bound(),
            ell: self.ell,
        }
    }
}

/// JSON block for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalSummary {
    #[serde(rename = "K_finite_part")]
    pub k_finite_part: Vec<i64>,
    #[serde(rename = "K_bound")]
    pub k_bound: i64,
    #[serde(rename = "S_gens")]
    pub s_gens: Vec<i64>,
    pub conductor_finite_part: Vec<i64>,
    pub conductor_min_full_tail: i64,
    pub ell: usize,
}

/// With `B = M - M`, `L = K + B` and `B[L]` the monoid it generates, the
/// colength of the conductor `B - B[L]` in `B`.
///
/// Only defined for semigroups of maximal embedding dimension that are not
/// symmetric and have multiplicity at least 3; returns `None` otherwise.
pub fn b_extension_length(h: &NumericalSemigroup) -> Option<usize> {
    let symmetric = 2 * h.genus() as i64 == h.frobenius() + 1;
    if !h.has_max_embedding_dimension() || symmetric || h.multiplicity() < 3 {
        return None;
    }
    let b = endomorphism_semigroup(h);
    let l = canonical_ideal(h).generated_over(&b);
    let bl = l.generated_monoid().expect("L contains 0");
    let (_, len) = conductor_of(&b, &bl);
    Some(len)
}
