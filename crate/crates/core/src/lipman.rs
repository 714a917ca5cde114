//! Blowups at the maximal ideal and Lipman sequences.

use serde::Serialize;

use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Blowup at the maximal ideal: `<a1, a2 - a1, ..., ak - a1>` for minimal
/// generators `a1 < ... < ak`.
pub fn blowup(h: &NumericalSemigroup) -> NumericalSemigroup {
    let gens = h.generators();
    let a1 = gens[0];
    let mut shifted = vec![a1];
    shifted.extend(gens[1..].iter().map(|&a| a - a1));
    NumericalSemigroup::from_generators(&shifted).expect("gcd is preserved by the shift")
}

/// Blowup computed as `nM - nM` once `(n+1)M = m + nM`. Independent of
/// [`blowup`]; kept as a cross-check.
pub fn blowup_oracle(h: &NumericalSemigroup) -> NumericalSemigroup {
    let m = RelativeIdeal::maximal(h);
    let mut power = m.clone();
    loop {
        let next = power.sum(&m).expect("same ambient");
        if next == power.translate(h.multiplicity()) {
            break;
        }
        power = next;
    }
    power
        .quotient(&power)
        .expect("same ambient")
        .as_semigroup()
        .expect("the colon of an ideal by itself is a monoid")
}

/// `B = M - M`, the endomorphism semigroup of the maximal ideal.
pub fn endomorphism_semigroup(h: &NumericalSemigroup) -> NumericalSemigroup {
    let m = RelativeIdeal::maximal(h);
    m.quotient(&m)
        .expect("same ambient")
        .as_semigroup()
        .expect("the colon of an ideal by itself is a monoid")
}

/// The chain `H = H_0 ⊊ H_1 ⊊ ... ⊊ H_T = ℕ` of iterated blowups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LipmanSequence {
    steps: Vec<NumericalSemigroup>,
}

impl LipmanSequence {
    pub fn new(h: &NumericalSemigroup) -> Self {
        let mut steps = vec![h.clone()];
        // The genus drops at every step until ℕ is reached.
        while !steps.last().unwrap().is_natural() {
            let next = blowup(steps.last().unwrap());
            steps.push(next);
        }
        LipmanSequence { steps }
    }

    pub fn steps(&self) -> &[NumericalSemigroup] {
        &self.steps
    }

    pub fn multiplicities(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.multiplicity()).collect()
    }

    /// Number of blowups needed to reach ℕ.
    pub fn len_to_natural(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn position(&self, s: &NumericalSemigroup) -> Option<usize> {
        self.steps.iter().position(|x| x == s)
    }
}

pub fn lipman_sequence(h: &NumericalSemigroup) -> LipmanSequence {
    LipmanSequence::new(h)
}
