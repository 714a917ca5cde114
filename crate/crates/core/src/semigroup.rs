//! Numerical semigroups: cofinite submonoids of the nonnegative integers.
//!
//! A semigroup is stored as a dense membership table over `[0, F + 1]`
//! where `F` is the Frobenius number; every integer above `F` is a member
//! implicitly. The full monoid of nonnegative integers is encoded with
//! `F = -1` and generators `{1}`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ArfError, Result};

/// Largest Frobenius number the dense table will accept.
pub const MAX_FROBENIUS: i64 = 1 << 26;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    gens: Vec<i64>,
    frobenius: i64,
    genus: usize,
    /// Membership of `0..=F+1`.
    window: Vec<bool>,
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.abs()
}

impl NumericalSemigroup {
    /// The monoid of all nonnegative integers.
    pub fn natural() -> Self {
        NumericalSemigroup {
            gens: vec![1],
            frobenius: -1,
            genus: 0,
            window: vec![true],
        }
    }

    /// Builds `<gens>`. Non-minimal and repeated generators are accepted and
    /// reduced.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(ArfError::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(ArfError::NonPositiveGenerator(bad));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(ArfError::GcdNotOne(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        if m == 1 {
            return Ok(Self::natural());
        }

        // Shortest paths on residues mod m give the Apery set with respect to m.
        let m_us = usize::try_from(m).map_err(|_| too_large())?;
        if m > MAX_FROBENIUS {
            return Err(too_large());
        }
        let mut apery = vec![i64::MAX; m_us];
        apery[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > apery[r] {
                continue;
            }
            for &a in &sorted[1..] {
                let nd = d.checked_add(a).ok_or_else(too_large)?;
                let nr = (r + (a % m) as usize) % m_us;
                if nd < apery[nr] {
                    apery[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;
        if frobenius > MAX_FROBENIUS {
            return Err(too_large());
        }
        Ok(Self::from_membership(frobenius + 1, |n| {
            n >= apery[(n % m) as usize]
        }))
    }

    /// Builds a semigroup from a membership predicate that is trusted on
    /// `[0, conductor)`; every integer at or above `conductor` is a member.
    /// The predicate must describe an additively closed set containing 0.
    pub(crate) fn from_membership(conductor: i64, member: impl Fn(i64) -> bool) -> Self {
        let conductor = conductor.max(0);
        let table: Vec<bool> = (0..conductor).map(|n| n == 0 || member(n)).collect();
        let frobenius = table.iter().rposition(|&b| !b).map_or(-1, |p| p as i64);
        if frobenius < 0 {
            return Self::natural();
        }
        let mut window = table[..=frobenius as usize].to_vec();
        window.push(true);
        let genus = window.iter().filter(|&&b| !b).count();

        let m = window.iter().skip(1).position(|&b| b).map_or(frobenius + 1, |p| p as i64 + 1);
        let is_member = |n: i64| n >= 0 && (n > frobenius || window[n as usize]);

        // Apery elements w.r.t. m; the minimal generators are m together with
        // the Apery elements that are not a sum of another Apery element and
        // a member.
        let mut apery = vec![-1i64; m as usize];
        let mut found = 0;
        let mut n = 0;
        while found < m as usize {
            if is_member(n) && apery[(n % m) as usize] < 0 {
                apery[(n % m) as usize] = n;
                found += 1;
            }
            n += 1;
        }
        let mut gens = vec![m];
        for &w in &apery[1..] {
            let decomposable = apery[1..]
                .iter()
                .any(|&v| v != w && v < w && is_member(w - v));
            if !decomposable {
                gens.push(w);
            }
        }
        gens.sort_unstable();
        debug_assert!(window[0]);
        NumericalSemigroup {
            gens,
            frobenius,
            genus,
            window,
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    /// Largest integer not in the semigroup; `-1` for the natural numbers.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `F + 1`: every integer at or above it is a member.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> i64 {
        self.gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    /// Embedding dimension equals multiplicity (minimal multiplicity).
    pub fn has_max_embedding_dimension(&self) -> bool {
        self.embedding_dimension() as i64 == self.multiplicity()
    }

    pub fn is_natural(&self) -> bool {
        self.frobenius < 0
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.window[n as usize]
        }
    }

    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        (1..=self.frobenius).filter(move |&n| !self.contains(n))
    }

    /// Members strictly below `bound`, ascending.
    pub fn members_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..bound).filter(move |&n| self.contains(n))
    }

    /// For each residue class mod `n`, the smallest member in that class,
    /// indexed by residue.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(ArfError::NotAPositiveMember(n));
        }
        let mut out = vec![-1i64; n as usize];
        let mut left = n as usize;
        let mut x = 0;
        while left > 0 {
            let r = (x % n) as usize;
            if out[r] < 0 && self.contains(x) {
                out[r] = x;
                left -= 1;
            }
            x += 1;
        }
        Ok(out)
    }

    /// Pseudo-Frobenius numbers: gaps `x` with `x + s` a member for every
    /// nonzero member `s`. By convention the natural numbers give `[-1]`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_natural() {
            return vec![-1];
        }
        // Checking the minimal generators suffices.
        self.gaps()
            .filter(|&x| self.gens.iter().all(|&a| self.contains(x + a)))
            .collect()
    }

    /// Cohen-Macaulay type: the number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        other.frobenius <= self.frobenius
            && (0..=self.frobenius).all(|n| !self.contains(n) || other.contains(n))
    }

    /// `H \ {g}` for a minimal generator `g > F`; this is the child rule of
    /// the semigroup tree.
    pub fn remove_generator(&self, g: i64) -> Option<NumericalSemigroup> {
        if g <= self.frobenius || !self.gens.contains(&g) {
            return None;
        }
        Some(Self::from_membership(g + 1, |n| n != g && self.contains(n)))
    }

    /// Canonical text form, `<a,b,c>` or `⟨a,b,c⟩`.
    pub fn to_text(&self, unicode: bool) -> String {
        let body = self
            .gens
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if unicode {
            format!("⟨{body}⟩")
        } else {
            format!("<{body}>")
        }
    }
}

fn too_large() -> ArfError {
    ArfError::Domain(format!(
        "Frobenius number exceeds the supported limit {MAX_FROBENIUS}"
    ))
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (F={}, g={})", self.to_text(false), self.frobenius, self.genus)
    }
}

/// Parses a comma-separated list of positive integers, optionally wrapped in
/// `<...>` or `⟨...⟩`.
pub fn parse_generators(input: &str) -> Result<Vec<i64>> {
    let err = |reason: &str| ArfError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let mut body = input.trim();
    for (open, close) in [("<", ">"), ("⟨", "⟩")] {
        if let Some(inner) = body.strip_prefix(open) {
            body = inner.strip_suffix(close).ok_or_else(|| err("unbalanced brackets"))?;
            break;
        }
    }
    if body.trim().is_empty() {
        return Err(ArfError::EmptyGenerators);
    }
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v: i64 = tok
                .parse()
                .map_err(|_| err(&format!("{tok:?} is not an integer")))?;
            if v <= 0 {
                return Err(ArfError::NonPositiveGenerator(v));
            }
            Ok(v)
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = ArfError;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_generators(&parse_generators(s)?)
    }
}

/// JSON shape of a semigroup.
#[derive(Serialize, Deserialize)]
struct SemigroupObject {
    gens: Vec<i64>,
    #[serde(default)]
    frobenius: Option<i64>,
    #[serde(default)]
    genus: Option<usize>,
    #[serde(default)]
    multiplicity: Option<i64>,
    #[serde(default)]
    embdim: Option<usize>,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupObject {
            gens: self.gens.clone(),
            frobenius: Some(self.frobenius),
            genus: Some(self.genus),
            multiplicity: Some(self.multiplicity()),
            embdim: Some(self.embedding_dimension()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let obj = SemigroupObject::deserialize(deserializer)?;
        let h = NumericalSemigroup::from_generators(&obj.gens).map_err(D::Error::custom)?;
        let mismatch = obj.frobenius.is_some_and(|v| v != h.frobenius())
            || obj.genus.is_some_and(|v| v != h.genus())
            || obj.multiplicity.is_some_and(|v| v != h.multiplicity())
            || obj.embdim.is_some_and(|v| v != h.embedding_dimension());
        if mismatch {
            return Err(D::Error::custom(format!(
                "stored invariants do not match {}",
                h.to_text(false)
            )));
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Membership by brute force: sums of generators up to `limit`.
    fn sums_table(gens: &[i64], limit: i64) -> Vec<bool> {
        let mut t = vec![false; limit as usize + 1];
        t[0] = true;
        for n in 1..=limit {
            t[n as usize] = gens.iter().any(|&g| g <= n && t[(n - g) as usize]);
        }
        t
    }

    #[test]
    fn natural_numbers() {
        let n = sg(&[1]);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.genus(), 0);
        assert_eq!(n.generators(), &[1]);
        assert!(n.contains(0));
        assert!(!n.contains(-1));
        assert_eq!(sg(&[1, 5, 7]), n);
    }

    #[test]
    fn three_seven_eleven() {
        let h = sg(&[3, 7, 11]);
        assert_eq!(h.frobenius(), 8);
        assert_eq!(h.genus(), 5);
        assert_eq!(h.generators(), &[3, 7, 11]);
        let table = sums_table(&[3, 7, 11], 20);
        for n in 0..=20 {
            assert_eq!(h.contains(n), table[n as usize], "n = {n}");
        }
        assert!(!h.contains(8));
        assert!(h.contains(100));
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[2, 4]),
            Err(ArfError::GcdNotOne(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(ArfError::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[3, 0]),
            Err(ArfError::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn non_minimal_input_is_reduced() {
        assert_eq!(sg(&[6, 3, 7, 11, 10, 3]).generators(), &[3, 7, 11]);
        assert_eq!(sg(&[4, 5, 6, 8, 9]).generators(), &[4, 5, 6]);
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sg(&[3, 7, 11]).apery_set(3).unwrap(), vec![0, 7, 11]);
        assert_eq!(sg(&[1]).apery_set(1).unwrap(), vec![0]);
        assert_eq!(sg(&[4, 7, 9, 10]).apery_set(4).unwrap(), vec![0, 9, 10, 7]);
        assert!(sg(&[3, 7, 11]).apery_set(4).is_err());
        assert!(sg(&[3, 7, 11]).apery_set(0).is_err());
    }

    #[test]
    fn pseudo_frobenius_numbers() {
        assert_eq!(sg(&[3, 7, 11]).pseudo_frobenius(), vec![4, 8]);
        assert_eq!(sg(&[1]).pseudo_frobenius(), vec![-1]);
        assert_eq!(sg(&[4, 5, 6]).pseudo_frobenius(), vec![7]);
        assert_eq!(sg(&[3, 7, 11]).semigroup_type(), 2);
    }

    #[test]
    fn parsing_and_text_form() {
        assert_eq!(parse_generators("4,7,9,10").unwrap(), vec![4, 7, 9, 10]);
        assert_eq!(parse_generators(" <4, 7,9,10> ").unwrap(), vec![4, 7, 9, 10]);
        assert_eq!(parse_generators("⟨3,7,11⟩").unwrap(), vec![3, 7, 11]);
        assert!(parse_generators("3,x").is_err());
        assert!(parse_generators("<3,4").is_err());
        assert_eq!(parse_generators(""), Err(ArfError::EmptyGenerators));
        let h: NumericalSemigroup = "3,7,11".parse().unwrap();
        assert_eq!(h.to_string(), "<3,7,11>");
        assert_eq!(h.to_text(true), "⟨3,7,11⟩");
    }

    #[test]
    fn json_object() {
        let h = sg(&[4, 7, 9, 10]);
        let v = serde_json::to_value(&h).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"gens":[4,7,9,10],"frobenius":6,"genus":5,"multiplicity":4,"embdim":4})
        );
        let back: NumericalSemigroup = serde_json::from_value(v).unwrap();
        assert_eq!(back, h);
        let bad = serde_json::json!({"gens":[4,7,9,10],"frobenius":7});
        assert!(serde_json::from_value::<NumericalSemigroup>(bad).is_err());
    }

    #[test]
    fn tree_child() {
        let h = sg(&[2, 3]);
        let child = h.remove_generator(3).unwrap();
        assert_eq!(child.generators(), &[2, 5]);
        assert_eq!(h.remove_generator(2).unwrap().generators(), &[3, 4, 5]);
        // 2 is below the Frobenius number 3 of <2,5>.
        assert!(sg(&[2, 5]).remove_generator(2).is_none());
        assert!(sg(&[2, 5]).remove_generator(4).is_none());
    }

    #[test]
    fn large_generators_stay_bounded() {
        let h = sg(&[1000, 1001]);
        assert_eq!(h.frobenius(), 1000 * 1001 - 1000 - 1001);
        assert_eq!(h.genus() as i64, (h.frobenius() + 1) / 2);
    }
}
