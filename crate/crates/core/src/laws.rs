//! Mechanically checkable identities around inverses along an element:
//! absorption laws for sums, commutation and reverse-order laws for products,
//! shift invariance, the twisted unit criterion as a falsifiable statement,
//! and Jacobson's lemma for one-sided completions.
//!
//! Every law evaluates to a three-way verdict on concrete inputs: `Holds`,
//! `Violated`, or `HypothesesUnmet` when the side conditions fail so the
//! identity asserts nothing. Hypotheses can be selectively dropped to hunt
//! for inputs that show a hypothesis is not decorative; the sweep functions
//! enumerate whole finite rings or candidate lists that way.

use crate::along::{all_sided_inverses, invert_along, sided_inverse_along, Side, SidedInverse};
use crate::centralizer::CentralizerMap;
use crate::classical::{drazin_inverse, group_inverse, moore_penrose, power_cycle};
use crate::error::{Error, Outcome, Result};
use crate::regular::{inner_inverse, is_regular};
use crate::ring::{Element, RingContext};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawId {
    /// One-sided absorption: for every left inverse al of a along d and right
    /// inverse br of b along d, al + br = al (a+b) br, and in product form
    /// al a br = br, al b br = al; dually with the sides swapped.
    AbsorptionOneSided,
    /// Two-sided absorption with a shared axis: along(a,d) + along(b,d) =
    /// along(a,d) (a+b) along(b,d).
    Absorption,
    /// Absorption across two axes linked by a centralizer: d1 = sigma(d2)
    /// gives along(a,d1) + along(b,d2) = along(a,d1) (a+b) along(b,d2).
    AbsorptionCross,
    /// Group-inverse absorption: a = sigma(b) gives a# + b# = a# (a+b) b#.
    AbsorptionGroup,
    /// Drazin absorption: a^n = sigma(b^m) for some n, m at or past the two
    /// indices gives aD + bD = aD (a+b) bD.
    AbsorptionDrazin,
    /// Moore-Penrose absorption: a* = sigma(b*) gives a+ + b+ = a+ (a+b) b+.
    AbsorptionMp,
    /// Mixed absorption: a = sigma(b*) gives a# + b+ = a# (a+b) b+.
    AbsorptionMixed,
    /// If ad = sigma(da) then along(a,d) commutes with a.
    Commutation,
    /// If ad = sigma(da) then along(ab,d) = along(b,d) along(a,d) and
    /// along(ba,d) = along(a,d) along(b,d).
    ReverseOrder,
    /// along(a, sigma(d)) = along(a, d), and along(sigma(a), d) =
    /// sigma^-1(along(a, d)), existence included.
    ShiftInvariance,
    /// u = sigma(da) + 1 - d d^- is a unit exactly when along(a,d) exists,
    /// and then sigma(u^-1) d is it. Falsifiable once sigma-bijective is
    /// dropped.
    AlongSigmaCriterion,
    /// Jacobson completion: (1+ab)c = 1 forces (1+ba)(1-bca) = 1.
    Jacobson,
}

pub const ALL_LAWS: [LawId; 12] = [
    LawId::AbsorptionOneSided,
    LawId::Absorption,
    LawId::AbsorptionCross,
    LawId::AbsorptionGroup,
    LawId::AbsorptionDrazin,
    LawId::AbsorptionMp,
    LawId::AbsorptionMixed,
    LawId::Commutation,
    LawId::ReverseOrder,
    LawId::ShiftInvariance,
    LawId::AlongSigmaCriterion,
    LawId::Jacobson,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// sigma is bijective (it must always at least be a centralizer).
    SigmaBijective,
    /// The axis link: d1 = sigma(d2), or its preset form a = sigma(b),
    /// a^n = sigma(b^m), a* = sigma(b*), a = sigma(b*).
    D1EqSigmaD2,
    /// The commutation link ad = sigma(da).
    AdEqSigmaDa,
}

impl Hypothesis {
    pub fn id(self) -> &'static str {
        match self {
            Hypothesis::SigmaBijective => "sigma-bijective",
            Hypothesis::D1EqSigmaD2 => "d1-eq-sigma-d2",
            Hypothesis::AdEqSigmaDa => "ad-eq-sigma-da",
        }
    }

    pub fn parse(s: &str) -> Option<Hypothesis> {
        Some(match s {
            "sigma-bijective" => Hypothesis::SigmaBijective,
            "d1-eq-sigma-d2" => Hypothesis::D1EqSigmaD2,
            "ad-eq-sigma-da" => Hypothesis::AdEqSigmaDa,
            _ => return None,
        })
    }
}

impl LawId {
    pub fn id(self) -> &'static str {
        match self {
            LawId::AbsorptionOneSided => "absorption-one-sided",
            LawId::Absorption => "absorption",
            LawId::AbsorptionCross => "absorption-cross",
            LawId::AbsorptionGroup => "absorption-group",
            LawId::AbsorptionDrazin => "absorption-drazin",
            LawId::AbsorptionMp => "absorption-mp",
            LawId::AbsorptionMixed => "absorption-mixed",
            LawId::Commutation => "commutation",
            LawId::ReverseOrder => "reverse-order",
            LawId::ShiftInvariance => "shift-invariance",
            LawId::AlongSigmaCriterion => "along-sigma-criterion",
            LawId::Jacobson => "jacobson",
        }
    }

    pub fn parse(s: &str) -> Option<LawId> {
        ALL_LAWS.iter().copied().find(|l| l.id() == s)
    }

    /// Input role names; searches enumerate them left to right, outermost
    /// first, with sigma innermost when the law uses one.
    pub fn roles(self) -> &'static [&'static str] {
        match self {
            LawId::AbsorptionOneSided | LawId::Absorption => &["a", "b", "d"],
            LawId::AbsorptionCross => &["a", "b", "d1", "d2"],
            LawId::AbsorptionGroup
            | LawId::AbsorptionDrazin
            | LawId::AbsorptionMp
            | LawId::AbsorptionMixed => &["a", "b"],
            LawId::Commutation | LawId::ShiftInvariance | LawId::AlongSigmaCriterion => {
                &["a", "d"]
            }
            LawId::ReverseOrder => &["a", "b", "d"],
            LawId::Jacobson => &["a", "b", "c"],
        }
    }

    pub fn uses_sigma(self) -> bool {
        !matches!(
            self,
            LawId::AbsorptionOneSided | LawId::Absorption | LawId::Jacobson
        )
    }

    /// Hypotheses this law can be evaluated without.
    pub fn droppable(self) -> &'static [Hypothesis] {
        match self {
            LawId::AbsorptionCross => &[Hypothesis::SigmaBijective, Hypothesis::D1EqSigmaD2],
            LawId::AbsorptionGroup
            | LawId::AbsorptionDrazin
            | LawId::AbsorptionMp
            | LawId::AbsorptionMixed => &[Hypothesis::SigmaBijective, Hypothesis::D1EqSigmaD2],
            LawId::Commutation | LawId::ReverseOrder => {
                &[Hypothesis::SigmaBijective, Hypothesis::AdEqSigmaDa]
            }
            LawId::AlongSigmaCriterion => &[Hypothesis::SigmaBijective],
            _ => &[],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    HypothesesUnmet,
}

impl Verdict {
    pub fn id(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::HypothesesUnmet => "hypotheses-unmet",
        }
    }
}

/// The outcome of checking one law on one tuple of inputs.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub law: LawId,
    /// Role name and value, in role order.
    pub inputs: Vec<(String, Element)>,
    /// The scaling element of the sigma in play, when the law uses one.
    pub sigma: Option<Element>,
    pub hypotheses_met: bool,
    pub lhs: Option<Element>,
    pub rhs: Option<Element>,
    pub verdict: Verdict,
    /// What failed or what was checked, in words.
    pub certificate: Option<String>,
}

struct Report {
    law: LawId,
    inputs: Vec<(String, Element)>,
    sigma: Option<Element>,
}

impl Report {
    fn new(law: LawId, inputs: &[Element], sigma: Option<&CentralizerMap>) -> Report {
        Report {
            law,
            inputs: law
                .roles()
                .iter()
                .zip(inputs)
                .map(|(r, e)| (r.to_string(), e.clone()))
                .collect(),
            sigma: sigma.map(|s| s.scaling_element().clone()),
        }
    }

    fn unmet(self, why: String) -> LawReport {
        LawReport {
            law: self.law,
            inputs: self.inputs,
            sigma: self.sigma,
            hypotheses_met: false,
            lhs: None,
            rhs: None,
            verdict: Verdict::HypothesesUnmet,
            certificate: Some(why),
        }
    }

    fn holds(self, lhs: Option<Element>, rhs: Option<Element>) -> LawReport {
        LawReport {
            law: self.law,
            inputs: self.inputs,
            sigma: self.sigma,
            hypotheses_met: true,
            lhs,
            rhs,
            verdict: Verdict::Holds,
            certificate: None,
        }
    }

    fn violated(self, lhs: Option<Element>, rhs: Option<Element>, why: String) -> LawReport {
        LawReport {
            law: self.law,
            inputs: self.inputs,
            sigma: self.sigma,
            hypotheses_met: true,
            lhs,
            rhs,
            verdict: Verdict::Violated,
            certificate: Some(why),
        }
    }

    fn compare(self, lhs: Element, rhs: Element, what: &str) -> LawReport {
        if lhs == rhs {
            self.holds(Some(lhs), Some(rhs))
        } else {
            let why = format!("{what}: {lhs} != {rhs}");
            self.violated(Some(lhs), Some(rhs), why)
        }
    }
}

/// Evaluate one law on one tuple. `inputs` follows `law.roles()`; `sigma`
/// defaults to the identity when the law uses one and none is given;
/// `dropped` lists hypotheses to evaluate without, which must come from
/// `law.droppable()`.
pub fn evaluate_law(
    law: LawId,
    inputs: &[Element],
    sigma: Option<&CentralizerMap>,
    dropped: &[Hypothesis],
) -> Result<LawReport> {
    let roles = law.roles();
    if inputs.len() != roles.len() {
        return Err(Error::PreconditionFailed(format!(
            "law {} takes {} inputs ({}), got {}",
            law.id(),
            roles.len(),
            roles.join(", "),
            inputs.len()
        )));
    }
    let ring = inputs[0].ring();
    for e in inputs {
        if e.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.spec(),
                right: e.ring().spec(),
            });
        }
    }
    if !law.uses_sigma() && sigma.is_some() {
        return Err(Error::PreconditionFailed(format!(
            "law {} does not involve a sigma",
            law.id()
        )));
    }
    for h in dropped {
        if !law.droppable().contains(h) {
            return Err(Error::PreconditionFailed(format!(
                "hypothesis {} cannot be dropped from law {}",
                h.id(),
                law.id()
            )));
        }
    }
    let identity;
    let sigma = if law.uses_sigma() {
        match sigma {
            Some(s) => {
                if s.ring() != ring {
                    return Err(Error::RingMismatch {
                        left: s.ring().spec(),
                        right: ring.spec(),
                    });
                }
                Some(s)
            }
            None => {
                identity = CentralizerMap::identity(ring);
                Some(&identity)
            }
        }
    } else {
        None
    };
    let drop_bij = dropped.contains(&Hypothesis::SigmaBijective);
    let drop_link = dropped.contains(&Hypothesis::D1EqSigmaD2);
    let drop_comm = dropped.contains(&Hypothesis::AdEqSigmaDa);
    let report = Report::new(law, inputs, sigma);

    // every sigma law needs at least a centralizer, bijective unless dropped
    if let Some(s) = sigma {
        if !s.is_centralizer() {
            return Ok(report.unmet(format!(
                "sigma x -> {} x is not a two-sided centralizer",
                s.scaling_element()
            )));
        }
        if !drop_bij && !s.is_bijective() {
            return Ok(report.unmet(format!(
                "sigma x -> {} x is not bijective",
                s.scaling_element()
            )));
        }
    }

    match law {
        LawId::AbsorptionOneSided => absorption_one_sided(report, inputs),
        LawId::Absorption => absorption(report, inputs),
        LawId::AbsorptionCross => {
            absorption_cross(report, &inputs[0], &inputs[1], &inputs[2], &inputs[3],
                             sigma.unwrap(), drop_link)
        }
        LawId::AbsorptionGroup | LawId::AbsorptionDrazin | LawId::AbsorptionMp
        | LawId::AbsorptionMixed => {
            absorption_preset(report, law, &inputs[0], &inputs[1], sigma.unwrap(), drop_link)
        }
        LawId::Commutation => commutation(report, &inputs[0], &inputs[1], sigma.unwrap(), drop_comm),
        LawId::ReverseOrder => {
            reverse_order(report, &inputs[0], &inputs[1], &inputs[2], sigma.unwrap(), drop_comm)
        }
        LawId::ShiftInvariance => shift_invariance(report, &inputs[0], &inputs[1], sigma.unwrap()),
        LawId::AlongSigmaCriterion => {
            along_sigma_criterion(report, &inputs[0], &inputs[1], sigma.unwrap())
        }
        LawId::Jacobson => jacobson_law(report, &inputs[0], &inputs[1], &inputs[2]),
    }
}

/// One-sided inverses along d to quantify over: all of them in a finite
/// ring, the canonical one elsewhere.
fn sided_choices(a: &Element, d: &Element, side: Side) -> Result<Vec<SidedInverse>> {
    if a.ring().is_finite() {
        all_sided_inverses(a, d, side)
    } else {
        Ok(match sided_inverse_along(a, d, side)? {
            Outcome::Found(s) => vec![s],
            Outcome::Absent(_) => Vec::new(),
        })
    }
}

fn absorption_one_sided(report: Report, inputs: &[Element]) -> Result<LawReport> {
    let (a, b, d) = (&inputs[0], &inputs[1], &inputs[2]);
    let lefts_a = sided_choices(a, d, Side::Left)?;
    let rights_b = sided_choices(b, d, Side::Right)?;
    let rights_a = sided_choices(a, d, Side::Right)?;
    let lefts_b = sided_choices(b, d, Side::Left)?;
    let part_one = !lefts_a.is_empty() && !rights_b.is_empty();
    let part_two = !lefts_b.is_empty() && !rights_a.is_empty();
    if !part_one && !part_two {
        return Ok(report.unmet(
            "no (left of a, right of b) pair and no (left of b, right of a) pair along d"
                .to_string(),
        ));
    }
    let sum = a.add(b)?;
    let mut shown: Option<(Element, Element)> = None;
    for al in &lefts_a {
        for br in &rights_b {
            let p1 = al.b.mul(a)?.mul(&br.b)?;
            if p1 != br.b {
                let why = format!(
                    "al a br = br fails for al = {} (witness {}), br = {} (witness {})",
                    al.b, al.witness, br.b, br.witness
                );
                return Ok(report.violated(Some(p1), Some(br.b.clone()), why));
            }
            let p2 = al.b.mul(b)?.mul(&br.b)?;
            if p2 != al.b {
                let why = format!(
                    "al b br = al fails for al = {} (witness {}), br = {} (witness {})",
                    al.b, al.witness, br.b, br.witness
                );
                return Ok(report.violated(Some(p2), Some(al.b.clone()), why));
            }
            let lhs = al.b.add(&br.b)?;
            let rhs = al.b.mul(&sum)?.mul(&br.b)?;
            if lhs != rhs {
                let why = format!(
                    "al + br = al (a+b) br fails for al = {}, br = {}",
                    al.b, br.b
                );
                return Ok(report.violated(Some(lhs), Some(rhs), why));
            }
            if shown.is_none() {
                shown = Some((lhs, rhs));
            }
        }
    }
    for bl in &lefts_b {
        for ar in &rights_a {
            let q1 = bl.b.mul(b)?.mul(&ar.b)?;
            if q1 != ar.b {
                let why = format!(
                    "bl b ar = ar fails for bl = {} (witness {}), ar = {} (witness {})",
                    bl.b, bl.witness, ar.b, ar.witness
                );
                return Ok(report.violated(Some(q1), Some(ar.b.clone()), why));
            }
            let q2 = bl.b.mul(a)?.mul(&ar.b)?;
            if q2 != bl.b {
                let why = format!(
                    "bl a ar = bl fails for bl = {} (witness {}), ar = {} (witness {})",
                    bl.b, bl.witness, ar.b, ar.witness
                );
                return Ok(report.violated(Some(q2), Some(bl.b.clone()), why));
            }
            let lhs = bl.b.add(&ar.b)?;
            let rhs = bl.b.mul(&sum)?.mul(&ar.b)?;
            if lhs != rhs {
                let why = format!(
                    "bl + ar = bl (a+b) ar fails for bl = {}, ar = {}",
                    bl.b, ar.b
                );
                return Ok(report.violated(Some(lhs), Some(rhs), why));
            }
            if shown.is_none() {
                shown = Some((lhs, rhs));
            }
        }
    }
    let (lhs, rhs) = shown.expect("at least one pair was checked");
    Ok(report.holds(Some(lhs), Some(rhs)))
}

fn absorption(report: Report, inputs: &[Element]) -> Result<LawReport> {
    let (a, b, d) = (&inputs[0], &inputs[1], &inputs[2]);
    let Outcome::Found(x) = invert_along(a, d)? else {
        return Ok(report.unmet(format!("a = {a} has no inverse along {d}")));
    };
    let Outcome::Found(y) = invert_along(b, d)? else {
        return Ok(report.unmet(format!("b = {b} has no inverse along {d}")));
    };
    let lhs = x.b.add(&y.b)?;
    let rhs = x.b.mul(&a.add(b)?)?.mul(&y.b)?;
    Ok(report.compare(lhs, rhs, "along(a,d) + along(b,d) = along(a,d) (a+b) along(b,d)"))
}

fn absorption_cross(
    report: Report,
    a: &Element,
    b: &Element,
    d1: &Element,
    d2: &Element,
    sigma: &CentralizerMap,
    drop_link: bool,
) -> Result<LawReport> {
    if !drop_link && *d1 != sigma.apply(d2)? {
        return Ok(report.unmet(format!(
            "d1 = {d1} is not sigma(d2) = {}",
            sigma.apply(d2)?
        )));
    }
    let Outcome::Found(x) = invert_along(a, d1)? else {
        return Ok(report.unmet(format!("a = {a} has no inverse along d1 = {d1}")));
    };
    let Outcome::Found(y) = invert_along(b, d2)? else {
        return Ok(report.unmet(format!("b = {b} has no inverse along d2 = {d2}")));
    };
    let lhs = x.b.add(&y.b)?;
    let rhs = x.b.mul(&a.add(b)?)?.mul(&y.b)?;
    Ok(report.compare(lhs, rhs, "along(a,d1) + along(b,d2) = along(a,d1) (a+b) along(b,d2)"))
}

/// The exponent pairs to try when hunting for a^n = sigma(b^m) with
/// n, m past the Drazin indices. Complete for modular rings, where powers
/// cycle; a documented cutoff of dim + 2 in matrix rings.
fn drazin_exponent_window(x: &Element, index: u32) -> std::ops::RangeInclusive<u32> {
    match power_cycle(x) {
        Some((tail, period)) => index..=(tail + period).max(index),
        None => {
            let dim = match x.ring() {
                RingContext::Matrix { dim } => *dim as u32,
                RingContext::Modular { .. } => unreachable!("power_cycle covers modular"),
            };
            index..=(dim + 2).max(index)
        }
    }
}

fn absorption_preset(
    report: Report,
    law: LawId,
    a: &Element,
    b: &Element,
    sigma: &CentralizerMap,
    drop_link: bool,
) -> Result<LawReport> {
    // the two inverses and the linking equation, per preset
    let (x, y, link, link_desc): (Element, Element, bool, String) = match law {
        LawId::AbsorptionGroup => {
            let Outcome::Found(x) = group_inverse(a, None)? else {
                return Ok(report.unmet(format!("a = {a} has no group inverse")));
            };
            let Outcome::Found(y) = group_inverse(b, None)? else {
                return Ok(report.unmet(format!("b = {b} has no group inverse")));
            };
            let link = *a == sigma.apply(b)?;
            (x, y, link, format!("a = {a} is not sigma(b) = {}", sigma.apply(b)?))
        }
        LawId::AbsorptionDrazin => {
            let Outcome::Found(x) = drazin_inverse(a, None)? else {
                return Ok(report.unmet(format!("a = {a} has no Drazin inverse")));
            };
            let Outcome::Found(y) = drazin_inverse(b, None)? else {
                return Ok(report.unmet(format!("b = {b} has no Drazin inverse")));
            };
            let mut link = false;
            'outer: for n in drazin_exponent_window(a, x.index) {
                let an = a.pow(n);
                for m in drazin_exponent_window(b, y.index) {
                    if an == sigma.apply(&b.pow(m))? {
                        link = true;
                        break 'outer;
                    }
                }
            }
            (
                x.inverse,
                y.inverse,
                link,
                format!(
                    "no exponents n, m past the indices give a^n = sigma(b^m) for a = {a}, b = {b}"
                ),
            )
        }
        LawId::AbsorptionMp => {
            let Outcome::Found(x) = moore_penrose(a, None)? else {
                return Ok(report.unmet(format!("a = {a} has no Moore-Penrose inverse")));
            };
            let Outcome::Found(y) = moore_penrose(b, None)? else {
                return Ok(report.unmet(format!("b = {b} has no Moore-Penrose inverse")));
            };
            let link = a.involution() == sigma.apply(&b.involution())?;
            (
                x,
                y,
                link,
                format!(
                    "a* = {} is not sigma(b*) = {}",
                    a.involution(),
                    sigma.apply(&b.involution())?
                ),
            )
        }
        LawId::AbsorptionMixed => {
            let Outcome::Found(x) = group_inverse(a, None)? else {
                return Ok(report.unmet(format!("a = {a} has no group inverse")));
            };
            let Outcome::Found(y) = moore_penrose(b, None)? else {
                return Ok(report.unmet(format!("b = {b} has no Moore-Penrose inverse")));
            };
            let link = *a == sigma.apply(&b.involution())?;
            (
                x,
                y,
                link,
                format!("a = {a} is not sigma(b*) = {}", sigma.apply(&b.involution())?),
            )
        }
        _ => unreachable!("not a preset law"),
    };
    if !drop_link && !link {
        return Ok(report.unmet(link_desc));
    }
    let lhs = x.add(&y)?;
    let rhs = x.mul(&a.add(b)?)?.mul(&y)?;
    Ok(report.compare(lhs, rhs, "inverse(a) + inverse(b) = inverse(a) (a+b) inverse(b)"))
}

fn commutation(
    report: Report,
    a: &Element,
    d: &Element,
    sigma: &CentralizerMap,
    drop_comm: bool,
) -> Result<LawReport> {
    if !drop_comm && a.mul(d)? != sigma.apply(&d.mul(a)?)? {
        return Ok(report.unmet(format!(
            "ad = {} is not sigma(da) = {}",
            a.mul(d)?,
            sigma.apply(&d.mul(a)?)?
        )));
    }
    let Outcome::Found(x) = invert_along(a, d)? else {
        return Ok(report.unmet(format!("a = {a} has no inverse along {d}")));
    };
    let lhs = a.mul(&x.b)?;
    let rhs = x.b.mul(a)?;
    Ok(report.compare(lhs, rhs, "a along(a,d) = along(a,d) a"))
}

fn reverse_order(
    report: Report,
    a: &Element,
    b: &Element,
    d: &Element,
    sigma: &CentralizerMap,
    drop_comm: bool,
) -> Result<LawReport> {
    if !drop_comm && a.mul(d)? != sigma.apply(&d.mul(a)?)? {
        return Ok(report.unmet(format!(
            "ad = {} is not sigma(da) = {}",
            a.mul(d)?,
            sigma.apply(&d.mul(a)?)?
        )));
    }
    let Outcome::Found(x) = invert_along(a, d)? else {
        return Ok(report.unmet(format!("a = {a} has no inverse along {d}")));
    };
    let Outcome::Found(y) = invert_along(b, d)? else {
        return Ok(report.unmet(format!("b = {b} has no inverse along {d}")));
    };
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    let want_ab = y.b.mul(&x.b)?;
    let want_ba = x.b.mul(&y.b)?;
    match invert_along(&ab, d)? {
        Outcome::Found(z) => {
            if z.b != want_ab {
                let why = format!("along(ab,d) = {} differs from along(b,d) along(a,d)", z.b);
                return Ok(report.violated(Some(z.b), Some(want_ab), why));
            }
        }
        Outcome::Absent(r) => {
            let why = format!("ab = {ab} has no inverse along {d} ({})", r.as_str());
            return Ok(report.violated(None, Some(want_ab), why));
        }
    }
    match invert_along(&ba, d)? {
        Outcome::Found(z) => {
            if z.b != want_ba {
                let why = format!("along(ba,d) = {} differs from along(a,d) along(b,d)", z.b);
                return Ok(report.violated(Some(z.b), Some(want_ba), why));
            }
            Ok(report.holds(Some(z.b), Some(want_ba)))
        }
        Outcome::Absent(r) => {
            let why = format!("ba = {ba} has no inverse along {d} ({})", r.as_str());
            Ok(report.violated(None, Some(want_ba), why))
        }
    }
}

fn shift_invariance(
    report: Report,
    a: &Element,
    d: &Element,
    sigma: &CentralizerMap,
) -> Result<LawReport> {
    let sd = sigma.apply(d)?;
    let base = invert_along(a, d)?;
    let shifted = invert_along(a, &sd)?;
    match (&base, &shifted) {
        (Outcome::Found(x), Outcome::Found(y)) => {
            if x.b != y.b {
                let why = format!("along(a, sigma(d)) = {} differs from along(a, d) = {}", y.b, x.b);
                return Ok(report.violated(Some(y.b.clone()), Some(x.b.clone()), why));
            }
        }
        (Outcome::Found(x), Outcome::Absent(r)) => {
            let why = format!(
                "along(a, d) = {} exists but along(a, sigma(d)) is absent ({})",
                x.b,
                r.as_str()
            );
            return Ok(report.violated(None, Some(x.b.clone()), why));
        }
        (Outcome::Absent(r), Outcome::Found(y)) => {
            let why = format!(
                "along(a, sigma(d)) = {} exists but along(a, d) is absent ({})",
                y.b,
                r.as_str()
            );
            return Ok(report.violated(Some(y.b.clone()), None, why));
        }
        (Outcome::Absent(_), Outcome::Absent(_)) => {}
    }
    let sa = sigma.apply(a)?;
    let twisted = invert_along(&sa, d)?;
    match (&base, &twisted) {
        (Outcome::Found(x), Outcome::Found(y)) => {
            let want = sigma.inverse_apply(&x.b)?;
            if y.b != want {
                let why = format!(
                    "along(sigma(a), d) = {} differs from sigma^-1(along(a, d)) = {want}",
                    y.b
                );
                return Ok(report.violated(Some(y.b.clone()), Some(want), why));
            }
            Ok(report.holds(Some(y.b.clone()), Some(want)))
        }
        (Outcome::Found(x), Outcome::Absent(r)) => {
            let why = format!(
                "along(a, d) = {} exists but along(sigma(a), d) is absent ({})",
                x.b,
                r.as_str()
            );
            Ok(report.violated(None, Some(sigma.inverse_apply(&x.b)?), why))
        }
        (Outcome::Absent(r), Outcome::Found(y)) => {
            let why = format!(
                "along(sigma(a), d) = {} exists but along(a, d) is absent ({})",
                y.b,
                r.as_str()
            );
            Ok(report.violated(Some(y.b.clone()), None, why))
        }
        (Outcome::Absent(_), Outcome::Absent(_)) => Ok(report.holds(None, None)),
    }
}

fn along_sigma_criterion(
    report: Report,
    a: &Element,
    d: &Element,
    sigma: &CentralizerMap,
) -> Result<LawReport> {
    if !is_regular(d) {
        return Ok(report.unmet(format!("d = {d} is not regular")));
    }
    let one = a.ring().one();
    let d_inner = inner_inverse(d)?;
    let u = sigma.apply(&d.mul(a)?)?.add(&one)?.sub(&d.mul(&d_inner)?)?;
    let v = sigma.apply(&a.mul(d)?)?.add(&one)?.sub(&d_inner.mul(d)?)?;
    if u.is_unit() != v.is_unit() {
        let why = format!("u = {u} and v = {v} disagree on invertibility");
        return Ok(report.violated(Some(u), Some(v), why));
    }
    let fires = u.is_unit();
    let actual = invert_along(a, d)?;
    match (fires, actual) {
        (true, Outcome::Found(x)) => {
            let predicted = sigma.apply(&u.unit_inverse()?)?.mul(d)?;
            if predicted != x.b {
                let why = format!(
                    "u = {u} is a unit but sigma(u^-1) d = {predicted} is not along(a,d) = {}",
                    x.b
                );
                return Ok(report.violated(Some(predicted), Some(x.b), why));
            }
            Ok(report.holds(Some(predicted), Some(x.b)))
        }
        (false, Outcome::Absent(_)) => Ok(report.holds(None, None)),
        (true, Outcome::Absent(r)) => {
            let why = format!(
                "u = {u} is a unit yet no inverse along exists ({})",
                r.as_str()
            );
            Ok(report.violated(Some(u), None, why))
        }
        (false, Outcome::Found(x)) => {
            let why = format!("u = {u} is not a unit yet the inverse along exists: {}", x.b);
            Ok(report.violated(None, Some(x.b), why))
        }
    }
}

fn jacobson_law(report: Report, a: &Element, b: &Element, c: &Element) -> Result<LawReport> {
    let one = a.ring().one();
    let left_factor = one.add(&a.mul(b)?)?;
    if left_factor.mul(c)? != one {
        return Ok(report.unmet(format!("(1 + ab) c = {} is not 1", left_factor.mul(c)?)));
    }
    let completed = one.sub(&b.mul(c)?.mul(a)?)?;
    let lhs = one.add(&b.mul(a)?)?.mul(&completed)?;
    Ok(report.compare(lhs, one, "(1 + ba)(1 - bca) = 1"))
}

/// From a right completion (1+ab)c = 1 (side Right) or a left completion
/// c (1+ab) = 1 (side Left), the same-sided completion 1 - bca of 1 + ba.
/// `PreconditionFailed` when c does not complete 1 + ab on that side.
pub fn jacobson_complete(
    a: &Element,
    b: &Element,
    c: &Element,
    side: Side,
) -> Result<Element> {
    let one = a.ring().one();
    let f = one.add(&a.mul(b)?)?;
    let precondition = match side {
        Side::Left => c.mul(&f)? == one,
        Side::Right => f.mul(c)? == one,
    };
    if !precondition {
        return Err(Error::PreconditionFailed(format!(
            "c = {c} does not complete 1 + ab = {f} on that side"
        )));
    }
    let g = one.sub(&b.mul(c)?.mul(a)?)?;
    let h = one.add(&b.mul(a)?)?;
    let closes = match side {
        Side::Left => g.mul(&h)? == one,
        Side::Right => h.mul(&g)? == one,
    };
    if !closes {
        return Err(Error::InternalFormulaMismatch {
            operation: "jacobson_complete",
            detail: format!("1 - bca = {g} does not complete 1 + ba = {h}"),
        });
    }
    Ok(g)
}

/// When 1 + ab is a unit, so is 1 + ba, with inverse 1 - b (1+ab)^-1 a.
pub fn jacobson_two_sided(a: &Element, b: &Element) -> Result<Outcome<Element>> {
    let one = a.ring().one();
    let f = one.add(&a.mul(b)?)?;
    let Ok(f_inv) = f.unit_inverse() else {
        return Ok(Outcome::Absent(crate::error::AbsentReason::UnitCriterionFailed));
    };
    let g = one.sub(&b.mul(&f_inv)?.mul(a)?)?;
    let h = one.add(&b.mul(a)?)?;
    if h.mul(&g)? != one || g.mul(&h)? != one {
        return Err(Error::InternalFormulaMismatch {
            operation: "jacobson_two_sided",
            detail: format!("1 - b (1+ab)^-1 a = {g} does not invert 1 + ba = {h}"),
        });
    }
    Ok(Outcome::Found(g))
}

/// Where a law sweep draws its elements from: a whole finite ring, or an
/// explicit candidate list (the only option for matrix rings).
#[derive(Clone, Debug)]
pub enum ElementSource {
    Ring(RingContext),
    Candidates(Vec<Element>),
}

impl ElementSource {
    fn elements(&self) -> Result<Vec<Element>> {
        match self {
            ElementSource::Ring(r) => r.enumerate(),
            ElementSource::Candidates(c) => {
                if c.is_empty() {
                    return Err(Error::PreconditionFailed(
                        "empty candidate list".to_string(),
                    ));
                }
                let ring = c[0].ring();
                for e in c {
                    if e.ring() != ring {
                        return Err(Error::RingMismatch {
                            left: ring.spec(),
                            right: e.ring().spec(),
                        });
                    }
                }
                Ok(c.clone())
            }
        }
    }
}

/// Tallies from sweeping one law over every tuple an [`ElementSource`]
/// offers. Tuples run in lexicographic role order with sigma innermost;
/// `violations` keeps that order.
#[derive(Clone, Debug)]
pub struct LawSweep {
    pub law: LawId,
    pub checked: u64,
    pub hypotheses_met: u64,
    pub holds: u64,
    pub violations: Vec<LawReport>,
}

/// Evaluate `law` on every tuple from `source` (sigma, when used, ranges
/// over scalings by the same elements). Runs on the global thread pool;
/// output order does not depend on thread count.
pub fn sweep_law(source: &ElementSource, law: LawId, dropped: &[Hypothesis]) -> Result<LawSweep> {
    sweep_law_with(source, law, dropped, None)
}

/// Per-thread tally: checked, hypotheses met, holds, violation reports.
type SweepPart = (u64, u64, u64, Vec<LawReport>);

/// [`sweep_law`] with the sigma pinned to one map instead of enumerated.
pub fn sweep_law_with(
    source: &ElementSource,
    law: LawId,
    dropped: &[Hypothesis],
    sigma: Option<&CentralizerMap>,
) -> Result<LawSweep> {
    for h in dropped {
        if !law.droppable().contains(h) {
            return Err(Error::PreconditionFailed(format!(
                "hypothesis {} cannot be dropped from law {}",
                h.id(),
                law.id()
            )));
        }
    }
    if sigma.is_some() && !law.uses_sigma() {
        return Err(Error::PreconditionFailed(format!(
            "law {} does not involve a sigma",
            law.id()
        )));
    }
    let elems = source.elements()?;
    let enumerate_sigma = law.uses_sigma() && sigma.is_none();
    let arity = law.roles().len() + usize::from(enumerate_sigma);
    let per_outer: Vec<Result<SweepPart>> = (0..elems.len())
        .into_par_iter()
        .map(|i0| {
            let mut checked = 0u64;
            let mut met = 0u64;
            let mut holds = 0u64;
            let mut violations = Vec::new();
            let mut idx = vec![0usize; arity - 1];
            loop {
                let mut tuple: Vec<&Element> = Vec::with_capacity(arity);
                tuple.push(&elems[i0]);
                for &i in &idx {
                    tuple.push(&elems[i]);
                }
                let (inputs, local_sigma) = if enumerate_sigma {
                    let (last, rest) = tuple.split_last().expect("arity >= 1");
                    (rest.to_vec(), Some(CentralizerMap::scaling(last)))
                } else {
                    (tuple, None)
                };
                let owned: Vec<Element> = inputs.into_iter().cloned().collect();
                let report = evaluate_law(law, &owned, local_sigma.as_ref().or(sigma), dropped)?;
                checked += 1;
                if report.hypotheses_met {
                    met += 1;
                }
                match report.verdict {
                    Verdict::Holds => holds += 1,
                    Verdict::Violated => violations.push(report),
                    Verdict::HypothesesUnmet => {}
                }
                // odometer over the inner positions, rightmost fastest
                let mut pos = idx.len();
                loop {
                    if pos == 0 {
                        return Ok((checked, met, holds, violations));
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < elems.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        })
        .collect();
    let mut sweep = LawSweep {
        law,
        checked: 0,
        hypotheses_met: 0,
        holds: 0,
        violations: Vec::new(),
    };
    for part in per_outer {
        let (checked, met, holds, violations) = part?;
        sweep.checked += checked;
        sweep.hypotheses_met += met;
        sweep.holds += holds;
        sweep.violations.extend(violations);
    }
    Ok(sweep)
}

/// Like [`sweep_law`] but keeps at most `bound` violation reports (the
/// earliest in enumeration order). `checked` still counts the whole space.
pub fn search_counterexamples(
    source: &ElementSource,
    law: LawId,
    dropped: &[Hypothesis],
    bound: usize,
) -> Result<LawSweep> {
    let mut sweep = sweep_law(source, law, dropped)?;
    sweep.violations.truncate(bound);
    Ok(sweep)
}
