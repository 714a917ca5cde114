//! Arf, almost symmetric and generalized Gorenstein classification, the
//! criteria that characterize Arf semigroups within those classes, Arf
//! closure, and the per-semigroup report with its consistency audit.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::canonical::{b_extension_length, CanonicalData, CanonicalSummary};
use crate::ideal::RelativeIdeal;
use crate::lipman::{blowup, blowup_oracle, endomorphism_semigroup, LipmanSequence};
use crate::oracle::arf_by_pattern;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl TriState {
    pub fn as_str(self) -> &'static str {
        match self {
            TriState::True => "true",
            TriState::False => "false",
            TriState::Unknown => "unknown",
        }
    }
}

impl From<bool> for TriState {
    fn from(b: bool) -> Self {
        if b {
            TriState::True
        } else {
            TriState::False
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TriState {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Everything the predicates need, computed once per semigroup.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub h: NumericalSemigroup,
    pub canonical: CanonicalData,
    pub lipman: LipmanSequence,
    pub endomorphisms: NumericalSemigroup,
}

impl Analysis {
    pub fn new(h: &NumericalSemigroup) -> Self {
        Analysis {
            h: h.clone(),
            canonical: CanonicalData::compute(h),
            lipman: LipmanSequence::new(h),
            endomorphisms: endomorphism_semigroup(h),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric(&self.h)
    }

    pub fn max_embdim(&self) -> bool {
        self.h.has_max_embedding_dimension()
    }

    /// Smallest element of `M + K` outside `H`.
    pub fn almost_symmetric_witness(&self) -> Option<i64> {
        let m = RelativeIdeal::maximal(&self.h);
        let mk = m.sum(&self.canonical.k).expect("same ambient");
        (mk.min()..mk.bound().max(self.h.conductor())).find(|&n| mk.contains(n) && !self.h.contains(n))
    }

    pub fn is_almost_symmetric(&self) -> bool {
        self.almost_symmetric_witness().is_none()
    }

    pub fn is_arf(&self) -> bool {
        self.h.multiplicity() <= 2
            || self
                .lipman
                .steps()
                .iter()
                .all(NumericalSemigroup::has_max_embedding_dimension)
    }

    pub fn ggl_min_mult(&self) -> TriState {
        if self.is_symmetric() {
            return TriState::True;
        }
        if !self.max_embdim() {
            return TriState::Unknown;
        }
        let s = &self.canonical.s;
        let n = self.canonical.ell;
        let e = self.h.multiplicity();
        let steps = self.lipman.steps();
        let holds = is_symmetric(s)
            && steps.get(n) == Some(s)
            && steps[..n]
                .iter()
                .all(|r| r.has_max_embedding_dimension() && r.multiplicity() == e);
        holds.into()
    }

    /// An element of `2M` outside `m + M`; exists exactly when the maximal
    /// ideal is not stable.
    fn instability_witness(&self) -> Option<i64> {
        RelativeIdeal::maximal(&self.h).instability_witness()
    }

    pub fn criterion_main(&self) -> CriterionVerdict {
        let s = &self.canonical.s;
        let mut v = CriterionVerdict::new(
            "arf_via_canonical_extension",
            self.ggl_min_mult() == TriState::True,
        );
        v.notes = format!("S = {}, multiplicity {}", s, s.multiplicity());
        if let Some(w) = self.instability_witness() {
            v.fail(vec![w], "maximal ideal not stable");
        } else if s.multiplicity() > 2 {
            v.fail(vec![s.multiplicity()], "multiplicity of S exceeds 2");
        } else {
            v.pass(vec![s.multiplicity()]);
        }
        v
    }

    pub fn criterion_bf(&self) -> CriterionVerdict {
        let mut v = CriterionVerdict::new("two_plus_generators", true);
        let shifted: Vec<i64> = self.h.generators().iter().map(|a| a + 2).collect();
        let missing: Vec<i64> = shifted.iter().copied().filter(|&x| !self.h.contains(x)).collect();
        if missing.is_empty() {
            v.pass(shifted);
        } else {
            v.fail(missing, "2 + a_i outside H");
        }
        v
    }

    pub fn criterion_endo(&self) -> CriterionVerdict {
        let b = &self.endomorphisms;
        let mut v = CriterionVerdict::new("endomorphism_multiplicity", true);
        v.notes = format!("B = {}", b);
        if b.multiplicity() <= 2 {
            v.pass(vec![b.multiplicity()]);
        } else {
            v.fail(vec![b.multiplicity()], "multiplicity of B exceeds 2");
        }
        v
    }

    pub fn criterion_gg(&self) -> CriterionVerdict {
        let mut v = CriterionVerdict::new(
            "two_plus_colength_multiple",
            self.ggl_min_mult() == TriState::True,
        );
        let gens = self.h.generators();
        let lead = 2 + self.canonical.ell as i64 * gens[0];
        let mut certs = vec![lead];
        certs.extend(gens[1..].iter().map(|a| a + 2));
        let mut bad: Vec<i64> = certs.iter().copied().filter(|&x| !self.h.contains(x)).collect();
        let unstable = self.instability_witness();
        v.notes = format!("ell = {}", self.canonical.ell);
        if let Some(w) = unstable {
            bad.insert(0, w);
            v.fail(bad, "maximal ideal not stable");
        } else if !bad.is_empty() {
            v.fail(bad, "required element outside H");
        } else {
            v.pass(certs);
        }
        v
    }

    pub fn idealization_c_arf(&self) -> CriterionVerdict {
        let mut v = CriterionVerdict::new(
            "idealization_conductor_arf",
            self.ggl_min_mult() == TriState::True,
        );
        let s = &self.canonical.s;
        if let Some(w) = self.instability_witness() {
            v.fail(vec![w], "maximal ideal not stable");
        } else if !s.is_natural() {
            v.fail(vec![s.frobenius()], "S is not the integral closure");
        } else {
            v.pass(vec![]);
        }
        v
    }

    pub fn idealization_m_ag_arf(&self) -> CriterionVerdict {
        let mut v = CriterionVerdict::new("idealization_maximal_ideal_ag_arf", true);
        let m = self.h.multiplicity();
        match (m..=self.h.frobenius()).find(|&n| !self.h.contains(n)) {
            Some(w) => v.fail(vec![w], "m + n outside H for some n >= 0"),
            None => v.pass(vec![]),
        }
        v
    }

    pub fn criteria(&self) -> Vec<CriterionVerdict> {
        vec![
            self.criterion_main(),
            self.criterion_bf(),
            self.criterion_endo(),
            self.criterion_gg(),
            self.idealization_c_arf(),
            self.idealization_m_ag_arf(),
        ]
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            multiplicity: self.h.multiplicity(),
            embdim: self.h.embedding_dimension(),
            frobenius: self.h.frobenius(),
            genus: self.h.genus(),
            semigroup_type: self.h.semigroup_type(),
            ell: self.canonical.ell,
        }
    }

    pub fn flags(&self) -> Flags {
        Flags {
            symmetric: self.is_symmetric(),
            almost_symmetric: self.is_almost_symmetric(),
            max_embdim: self.max_embdim(),
            arf: self.is_arf(),
            ggl: self.ggl_min_mult(),
        }
    }

    pub fn report(&self) -> ClassificationReport {
        let violations = self.audit();
        ClassificationReport {
            semigroup: self.h.clone(),
            invariants: self.invariants(),
            flags: self.flags(),
            canonical: self.canonical.summary(),
            criteria: self.criteria(),
            consistent: violations.is_empty(),
            violations,
        }
    }

    /// Evaluates every applicable equivalence both ways; returns the
    /// disagreements.
    pub fn audit(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let h = &self.h;
        let mut check = |ok: bool, name: &str, detail: String, witnesses: Vec<i64>| {
            if !ok {
                out.push(Violation {
                    check: name.to_string(),
                    detail,
                    witnesses,
                });
            }
        };

        let arf = self.is_arf();
        let pattern = arf_by_pattern(h);
        check(
            arf == pattern,
            "arf_lipman_vs_pattern",
            format!("lipman {arf}, pattern {pattern}"),
            vec![],
        );

        let almost = self.is_almost_symmetric();
        let numeric = is_almost_symmetric_numeric(h);
        check(
            almost == numeric,
            "almost_symmetric_containment_vs_count",
            format!("M+K in H: {almost}, 2g = F + t: {numeric}"),
            self.almost_symmetric_witness().into_iter().collect(),
        );

        let med = self.max_embdim();
        let stable = RelativeIdeal::maximal(h).is_stable();
        check(
            stable == med,
            "stable_maximal_ideal_vs_max_embdim",
            format!("stable {stable}, max embdim {med}"),
            vec![h.multiplicity(), h.embedding_dimension() as i64],
        );

        let bf = self.criterion_bf();
        check(
            bf.holds == (arf && almost),
            "two_plus_generators_vs_arf_and_almost_symmetric",
            format!("criterion {}, arf {arf}, almost symmetric {almost}", bf.holds),
            bf.witnesses.clone(),
        );

        let endo = self.criterion_endo();
        check(
            endo.holds == bf.holds,
            "endomorphism_multiplicity_vs_two_plus_generators",
            format!("endo {}, bf {}", endo.holds, bf.holds),
            endo.witnesses.clone(),
        );

        let b_sym = is_symmetric(&self.endomorphisms);
        check(
            b_sym == (almost && med),
            "endomorphisms_symmetric_vs_almost_symmetric_and_max_embdim",
            format!("B = {} symmetric {b_sym}", self.endomorphisms),
            vec![self.endomorphisms.frobenius()],
        );

        let ggl = self.ggl_min_mult();
        if ggl == TriState::True {
            let main = self.criterion_main();
            check(
                main.holds == arf,
                "canonical_extension_criterion_vs_arf",
                format!("criterion {}, arf {arf}", main.holds),
                main.witnesses,
            );
            let gg = self.criterion_gg();
            check(
                gg.holds == arf,
                "colength_multiple_criterion_vs_arf",
                format!("criterion {}, arf {arf}", gg.holds),
                gg.witnesses,
            );
            if h.multiplicity() >= 3 {
                let s = &self.canonical.s;
                let pos = self.lipman.position(s);
                let ell = self.canonical.ell;
                check(
                    is_symmetric(s) && pos == Some(ell),
                    "extension_is_lipman_step_ell",
                    format!("S = {s} at step {pos:?}, ell = {ell}"),
                    vec![ell as i64],
                );
            }
            if !almost {
                if let Some(len) = b_extension_length(h) {
                    let ell = self.canonical.ell;
                    check(
                        len + 1 == ell,
                        "b_extension_length_is_ell_minus_one",
                        format!("length {len}, ell {ell}"),
                        vec![len as i64, ell as i64],
                    );
                }
            }
        }

        check(
            h.multiplicity() > 2 || arf,
            "low_multiplicity_is_arf",
            format!("multiplicity {}", h.multiplicity()),
            vec![h.multiplicity()],
        );

        let ic = self.idealization_c_arf();
        check(
            !(ic.applicable && ic.holds) || arf,
            "idealization_conductor_implies_arf",
            "idealization criterion holds but H is not Arf".into(),
            vec![],
        );

        let im = self.idealization_m_ag_arf();
        check(
            im.holds == (h.frobenius() < h.multiplicity()),
            "idealization_maximal_ideal_vs_frobenius_below_multiplicity",
            format!("criterion {}", im.holds),
            im.witnesses,
        );

        let up = blowup(h);
        let up_oracle = blowup_oracle(h);
        check(
            up == up_oracle,
            "blowup_generators_vs_power_colon",
            format!("{up} vs {up_oracle}"),
            vec![],
        );
        let b = &self.endomorphisms;
        check(
            b.is_subset_of(&up) && ((b == &up) == med),
            "endomorphisms_inside_blowup",
            format!("B = {b}, blowup = {up}"),
            vec![],
        );
        if med {
            let a1 = h.multiplicity();
            let bad: Vec<i64> = (0..=h.conductor() + a1)
                .filter(|&x| up.contains(x) != h.contains(x + a1))
                .collect();
            check(
                bad.is_empty(),
                "blowup_membership_is_shift_by_multiplicity",
                "x in blowup differs from x + a1 in H".into(),
                bad,
            );
        }

        let steps = self.lipman.steps();
        let bad_step = steps.windows(2).position(|w| {
            w[1].genus() >= w[0].genus()
                || w[1].multiplicity() > w[0].multiplicity()
                || !w[0].is_subset_of(&w[1])
        });
        check(
            bad_step.is_none() && steps.last().is_some_and(NumericalSemigroup::is_natural),
            "lipman_chain_shape",
            format!("irregular step {bad_step:?}"),
            bad_step.map(|p| p as i64).into_iter().collect(),
        );

        let canon = &self.canonical;
        let unit = RelativeIdeal::principal(h);
        let k_excess = canon.k.colength(&unit).unwrap_or(usize::MAX) as i64;
        if !h.is_natural() {
            check(
                k_excess == 2 * h.genus() as i64 - h.frobenius() - 1,
                "canonical_excess_is_2g_minus_conductor",
                format!("|K \\ H| = {k_excess}"),
                vec![k_excess],
            );
        }
        let sym = self.is_symmetric();
        check(
            (canon.ell == 0) == sym && (canon.ell == 0) == (canon.k == unit),
            "ell_zero_iff_symmetric",
            format!("ell = {}", canon.ell),
            vec![canon.ell as i64],
        );
        check(
            (canon.ell == 1) == (almost && !sym),
            "ell_one_iff_proper_almost_symmetric",
            format!("ell = {}", canon.ell),
            vec![canon.ell as i64],
        );
        let c_plus_s_in_h = canon
            .conductor
            .finite_part()
            .iter()
            .all(|&c| canon.s.members_below(canon.s.conductor() + 1).all(|s| h.contains(c + s)));
        check(
            c_plus_s_in_h && canon.conductor.is_subset_of(&unit),
            "conductor_times_s_in_h",
            format!("conductor {}", canon.conductor),
            vec![],
        );

        let closure = arf_closure(h);
        check(
            h.is_subset_of(&closure) && arf_by_pattern(&closure) && arf_closure(&closure) == closure,
            "arf_closure_extensive_arf_idempotent",
            format!("closure {closure}"),
            vec![],
        );

        out
    }
}

/// Symmetric (Gorenstein): `2g = F + 1`.
pub fn is_symmetric(h: &NumericalSemigroup) -> bool {
    2 * h.genus() as i64 == h.frobenius() + 1
}

/// Almost symmetric via `M + K ⊆ H`.
pub fn is_almost_symmetric(h: &NumericalSemigroup) -> bool {
    Analysis::new(h).is_almost_symmetric()
}

/// Almost symmetric via the count `2g = F + type`.
pub fn is_almost_symmetric_numeric(h: &NumericalSemigroup) -> bool {
    2 * h.genus() as i64 == h.frobenius() + h.semigroup_type() as i64
}

/// Arf via the Lipman sequence: every step has maximal embedding dimension.
/// Multiplicity at most 2 is Arf outright.
pub fn is_arf(h: &NumericalSemigroup) -> bool {
    h.multiplicity() <= 2
        || LipmanSequence::new(h)
            .steps()
            .iter()
            .all(NumericalSemigroup::has_max_embedding_dimension)
}

/// Generalized Gorenstein status, decidable here only under minimal
/// multiplicity: symmetric semigroups are `True`, non-symmetric ones without
/// maximal embedding dimension are `Unknown`.
pub fn ggl_min_mult(h: &NumericalSemigroup) -> TriState {
    Analysis::new(h).ggl_min_mult()
}

/// Smallest Arf semigroup containing `h`.
///
/// Saturates the table below the conductor `c` under `x + y - z` for
/// `x >= y >= z`. Triples with `x >= c` need no check since the result is
/// at least `x`. Every added element is forced in any Arf oversemigroup, so
/// the fixed point is the closure. Cubic in the number of small elements.
pub fn arf_closure(h: &NumericalSemigroup) -> NumericalSemigroup {
    let c = h.conductor();
    let mut table: Vec<bool> = (0..c).map(|n| h.contains(n)).collect();
    loop {
        let members: Vec<i64> = (0..c).filter(|&n| table[n as usize]).collect();
        let mut changed = false;
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members[..=i].iter().enumerate() {
                for &z in &members[..=j] {
                    let n = x + y - z;
                    if n < c && !table[n as usize] {
                        table[n as usize] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    NumericalSemigroup::from_membership(c, |n| table[n as usize])
}

pub fn criterion_main(h: &NumericalSemigroup) -> CriterionVerdict {
    Analysis::new(h).criterion_main()
}

pub fn criterion_bf(h: &NumericalSemigroup) -> CriterionVerdict {
    Analysis::new(h).criterion_bf()
}

pub fn criterion_endo(h: &NumericalSemigroup) -> CriterionVerdict {
    Analysis::new(h).criterion_endo()
}

pub fn criterion_gg(h: &NumericalSemigroup) -> CriterionVerdict {
    Analysis::new(h).criterion_gg()
}

pub fn idealization_c_arf(h: &NumericalSemigroup) -> CriterionVerdict {
    Analysis::new(h).idealization_c_arf()
}

pub fn idealization_m_ag_arf(h: &NumericalSemigroup) -> CriterionVerdict {
    Analysis::new(h).idealization_m_ag_arf()
}

pub fn classify_report(h: &NumericalSemigroup) -> ClassificationReport {
    Analysis::new(h).report()
}

pub fn consistency_audit(h: &NumericalSemigroup) -> Vec<Violation> {
    Analysis::new(h).audit()
}

/// Outcome of one criterion on one semigroup. When `applicable` is false,
/// `holds` is the raw, non-authoritative value and serializes as `"unknown"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub name: String,
    pub applicable: bool,
    pub holds: bool,
    pub witnesses: Vec<i64>,
    pub notes: String,
}

impl CriterionVerdict {
    fn new(name: &str, applicable: bool) -> Self {
        CriterionVerdict {
            name: name.to_string(),
            applicable,
            holds: false,
            witnesses: Vec::new(),
            notes: String::new(),
        }
    }

    fn pass(&mut self, certificates: Vec<i64>) {
        self.holds = true;
        self.witnesses = certificates;
    }

    fn fail(&mut self, witnesses: Vec<i64>, why: &str) {
        debug_assert!(!witnesses.is_empty(), "{}: failure without witness", self.name);
        self.holds = false;
        self.witnesses = witnesses;
        if self.notes.is_empty() {
            self.notes = why.to_string();
        } else {
            self.notes = format!("{why}; {}", self.notes);
        }
    }

    pub fn status(&self) -> TriState {
        if self.applicable {
            self.holds.into()
        } else {
            TriState::Unknown
        }
    }
}

impl Serialize for CriterionVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            name: &'a str,
            applicable: bool,
            holds: TriState,
            raw_holds: bool,
            witnesses: &'a [i64],
            notes: &'a str,
        }
        View {
            name: &self.name,
            applicable: self.applicable,
            holds: self.status(),
            raw_holds: self.holds,
            witnesses: &self.witnesses,
            notes: &self.notes,
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    #[serde(rename = "m")]
    pub multiplicity: i64,
    pub embdim: usize,
    #[serde(rename = "F")]
    pub frobenius: i64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub ell: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Flags {
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub max_embdim: bool,
    pub arf: bool,
    pub ggl: TriState,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
    pub witnesses: Vec<i64>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} {:?}", self.check, self.detail, self.witnesses)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub semigroup: NumericalSemigroup,
    pub invariants: Invariants,
    pub flags: Flags,
    pub canonical: CanonicalSummary,
    pub criteria: Vec<CriterionVerdict>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
}

impl ClassificationReport {
    pub fn criterion(&self, name: &str) -> Option<&CriterionVerdict> {
        self.criteria.iter().find(|c| c.name == name)
    }

    pub fn render(&self, unicode: bool) -> String {
        use std::fmt::Write;
        let inv = &self.invariants;
        let fl = &self.flags;
        let mut s = String::new();
        let _ = writeln!(s, "semigroup        {}", self.semigroup.to_text(unicode));
        let _ = writeln!(
            s,
            "invariants       m={} embdim={} F={} genus={} type={} ell={}",
            inv.multiplicity, inv.embdim, inv.frobenius, inv.genus, inv.semigroup_type, inv.ell
        );
        let _ = writeln!(
            s,
            "flags            symmetric={} almost_symmetric={} max_embdim={} arf={} ggl={}",
            fl.symmetric, fl.almost_symmetric, fl.max_embdim, fl.arf, fl.ggl
        );
        let _ = writeln!(s, "criteria");
        for c in &self.criteria {
            let _ = writeln!(
                s,
                "  {:<38} {:<7} witnesses={:?}{}",
                c.name,
                c.status().as_str(),
                c.witnesses,
                if c.notes.is_empty() {
                    String::new()
                } else {
                    format!("  ({})", c.notes)
                }
            );
        }
        let _ = writeln!(s, "consistent       {}", self.consistent);
        for v in &self.violations {
            let _ = writeln!(s, "  violation      {v}");
        }
        s
    }
}
