//! Six worked examples with known answers, run by `arfkit verify-paper`.

use crate::canonical::{canonical_ideal, CanonicalData};
use crate::classify::{Analysis, TriState};
use crate::lipman::{blowup, endomorphism_semigroup, lipman_sequence};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone)]
pub struct GoldenCheck {
    pub description: String,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct GoldenSuite {
    pub name: &'static str,
    pub subject: String,
    pub checks: Vec<GoldenCheck>,
}

impl GoldenSuite {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, description: impl Into<String>, passed: bool) {
        self.checks.push(GoldenCheck {
            description: description.into(),
            passed,
        });
    }
}

fn sg(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).expect("golden generators are valid")
}

/// Does `k` equal `⋃ (s + H)` over `shifts`? Compared on a window past
/// every bound involved.
fn is_union_of_shifts(h: &NumericalSemigroup, k: &crate::RelativeIdeal, shifts: &[i64]) -> bool {
    let top = k.bound().max(h.conductor()) + shifts.iter().max().copied().unwrap_or(0) + 1;
    (-1..=top).all(|n| k.contains(n) == shifts.iter().any(|&s| h.contains(n - s)))
}

fn almost_symmetric_not_arf() -> GoldenSuite {
    let h = sg(&[3, 7, 11]);
    let a = Analysis::new(&h);
    let mut s = GoldenSuite {
        name: "almost-symmetric-not-arf",
        subject: h.to_string(),
        checks: vec![],
    };
    s.check("type 2", h.semigroup_type() == 2);
    s.check("almost symmetric", a.is_almost_symmetric());
    s.check("not symmetric", !a.is_symmetric());
    s.check("not Arf", !a.is_arf());
    s.check("blowup = <3,4>", blowup(&h) == sg(&[3, 4]));
    s.check("K = H u (4+H)", is_union_of_shifts(&h, &canonical_ideal(&h), &[0, 4]));
    s.check("ggl = true", a.ggl_min_mult() == TriState::True);
    s
}

fn arf_not_ggl() -> GoldenSuite {
    let h = sg(&[4, 7, 9, 10]);
    let a = Analysis::new(&h);
    let mut s = GoldenSuite {
        name: "arf-not-generalized-gorenstein",
        subject: h.to_string(),
        checks: vec![],
    };
    s.check("Arf", a.is_arf());
    s.check("ggl = false", a.ggl_min_mult() == TriState::False);
    s.check(
        "Lipman chain [H, <3,4,5>, N]",
        lipman_sequence(&h).steps() == [h.clone(), sg(&[3, 4, 5]), NumericalSemigroup::natural()],
    );
    s
}

fn interval_family() -> GoldenSuite {
    let mut s = GoldenSuite {
        name: "interval-family",
        subject: "<e,...,2e-1>, e = 2..8".into(),
        checks: vec![],
    };
    for e in 2..=8i64 {
        let h = sg(&(e..2 * e).collect::<Vec<_>>());
        let a = Analysis::new(&h);
        s.check(format!("e={e}: two-plus criterion holds"), a.criterion_bf().holds);
        s.check(format!("e={e}: B = N"), endomorphism_semigroup(&h).is_natural());
        s.check(format!("e={e}: almost symmetric Arf"), a.is_arf() && a.is_almost_symmetric());
    }
    s
}

fn gapped_interval_family() -> GoldenSuite {
    let mut s = GoldenSuite {
        name: "gapped-interval-family",
        subject: "<e,e+2,...,2e-1,2e+1>, e = 3..8".into(),
        checks: vec![],
    };
    for e in 3..=8i64 {
        let mut gens = vec![e];
        gens.extend(e + 2..2 * e);
        gens.push(2 * e + 1);
        let h = sg(&gens);
        let a = Analysis::new(&h);
        s.check(format!("e={e}: two-plus criterion holds"), a.criterion_bf().holds);
        s.check(format!("e={e}: B = <2,3>"), endomorphism_semigroup(&h) == sg(&[2, 3]));
        s.check(format!("e={e}: almost symmetric Arf"), a.is_arf() && a.is_almost_symmetric());
    }
    s
}

fn ggl_arf_not_almost() -> GoldenSuite {
    let h = sg(&[5, 16, 17, 18, 19]);
    let a = Analysis::new(&h);
    let c = CanonicalData::compute(&h);
    let mut s = GoldenSuite {
        name: "generalized-gorenstein-arf-not-almost",
        subject: h.to_string(),
        checks: vec![],
    };
    s.check("ggl = true", a.ggl_min_mult() == TriState::True);
    s.check("Arf", a.is_arf());
    s.check("not almost symmetric (witness 6)", a.almost_symmetric_witness() == Some(6));
    s.check("ell = 3", c.ell == 3);
    s.check("conductor = [15,inf)", c.conductor.min() == 15 && c.conductor.bound() == 15);
    s.check("K = H u (1+H) u (2+H) u (3+H)", is_union_of_shifts(&h, &c.k, &[0, 1, 2, 3]));
    s.check("S = N", c.s.is_natural());
    let gg = a.criterion_gg();
    s.check("colength-multiple criterion holds (17 in H)", gg.applicable && gg.holds && gg.witnesses.first() == Some(&17));
    s
}

fn idealization_not_arf() -> GoldenSuite {
    let h = sg(&[4, 5, 6]);
    let a = Analysis::new(&h);
    let mut s = GoldenSuite {
        name: "idealization-maximal-ideal-not-arf",
        subject: h.to_string(),
        checks: vec![],
    };
    s.check("symmetric", a.is_symmetric());
    s.check("not Arf", !a.is_arf());
    let v = a.idealization_m_ag_arf();
    s.check("idealization criterion fails with witness 7", !v.holds && v.witnesses == [7]);
    s
}

pub fn golden_suites() -> Vec<GoldenSuite> {
    vec![
        almost_symmetric_not_arf(),
        arf_not_ggl(),
        interval_family(),
        gapped_interval_family(),
        ggl_arf_not_almost(),
        idealization_not_arf(),
    ]
}
