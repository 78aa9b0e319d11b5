//! Machine-readable results for the command-line front end.
//!
//! A [`Report`] names every object and morphism it mentions and carries a
//! fingerprint of the category it was computed on. Field order is fixed by
//! the struct definitions and every search runs in a fixed order, so two
//! runs on the same input serialize to the same bytes once timing is left
//! out. The schema is described in `docs/report-schema.md`.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::biproduct::{BiproductWitness, CMonStructure, NaryBiproductWitness};
use crate::category::{Category, FinCat, MorId, ObjId};
use crate::dsl::{render, CatDoc};
use crate::universal::{CospanWitness, SpanWitness};
use crate::verdict::{Counterexample, Verdict};

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// SHA-256 of the canonical rendering of `cat` (and its addition tables),
/// with the category's own name left out so that renaming a file's category
/// does not change its fingerprint.
pub fn fingerprint(cat: &FinCat, cmon: Option<&CMonStructure>) -> String {
    let text = render(&CatDoc::from_fincat("_", cat, cmon));
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::from("sha256:");
    for byte in digest {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategorySummary {
    pub name: String,
    pub objects: usize,
    pub morphisms: usize,
    pub fingerprint: String,
}

impl CategorySummary {
    pub fn new(name: &str, cat: &FinCat, cmon: Option<&CMonStructure>) -> CategorySummary {
        CategorySummary {
            name: name.to_string(),
            objects: cat.object_count(),
            morphisms: cat.morphism_count(),
            fingerprint: fingerprint(cat, cmon),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// Held because the hypothesis of the checked statement was false.
    Vacuous,
    Fail,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Fail => "fail",
        }
    }
}

impl From<&Verdict> for Outcome {
    fn from(v: &Verdict) -> Outcome {
        match v {
            Verdict::Pass => Outcome::Pass,
            Verdict::Vacuous => Outcome::Vacuous,
            Verdict::Fail(_) => Outcome::Fail,
        }
    }
}

/// One named leg of a certificate, e.g. `pA = p1: AxB -> A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Leg {
    pub role: String,
    pub morphism: String,
    pub dom: String,
    pub cod: String,
}

/// A witness tuple by name: what a passing check found or accepted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub kind: String,
    pub carrier: String,
    pub legs: Vec<Leg>,
}

fn leg(cat: &FinCat, role: &str, m: MorId) -> Leg {
    Leg {
        role: role.to_string(),
        morphism: cat.morphism_name(m).to_string(),
        dom: cat.object_name(cat.dom(m)).to_string(),
        cod: cat.object_name(cat.cod(m)).to_string(),
    }
}

impl Certificate {
    fn new(name: &str, kind: &str, cat: &FinCat, carrier: ObjId, legs: Vec<Leg>) -> Certificate {
        Certificate {
            name: name.to_string(),
            kind: kind.to_string(),
            carrier: cat.object_name(carrier).to_string(),
            legs,
        }
    }

    pub fn biproduct(name: &str, cat: &FinCat, w: &BiproductWitness) -> Certificate {
        let legs = vec![
            leg(cat, "pA", w.p_a),
            leg(cat, "pB", w.p_b),
            leg(cat, "iA", w.i_a),
            leg(cat, "iB", w.i_b),
        ];
        Certificate::new(name, "biproduct", cat, w.carrier, legs)
    }

    pub fn product(name: &str, cat: &FinCat, w: &SpanWitness) -> Certificate {
        let legs = vec![leg(cat, "pA", w.left), leg(cat, "pB", w.right)];
        Certificate::new(name, "product", cat, w.apex, legs)
    }

    pub fn coproduct(name: &str, cat: &FinCat, w: &CospanWitness) -> Certificate {
        let legs = vec![leg(cat, "iA", w.left), leg(cat, "iB", w.right)];
        Certificate::new(name, "coproduct", cat, w.nadir, legs)
    }

    pub fn nary(name: &str, cat: &FinCat, w: &NaryBiproductWitness) -> Certificate {
        let mut legs = Vec::new();
        for (k, &p) in w.projections.iter().enumerate() {
            legs.push(leg(cat, &format!("p{}", k + 1), p));
        }
        for (k, &i) in w.injections.iter().enumerate() {
            legs.push(leg(cat, &format!("i{}", k + 1), i));
        }
        Certificate::new(name, "nary-biproduct", cat, w.carrier, legs)
    }

    /// The zero morphism chosen for one homset.
    pub fn zero(cat: &FinCat, m: MorId) -> Certificate {
        Certificate::new(
            &format!(
                "zero({}, {})",
                cat.object_name(cat.dom(m)),
                cat.object_name(cat.cod(m))
            ),
            "zero",
            cat,
            cat.dom(m),
            vec![leg(cat, "zero", m)],
        )
    }

    /// `name = pA: C -> A, ...` on one line.
    pub fn describe(&self) -> String {
        let legs: Vec<String> = self
            .legs
            .iter()
            .map(|l| format!("{} = {}: {} -> {}", l.role, l.morphism, l.dom, l.cod))
            .collect();
        format!(
            "{} {} on {}: {}",
            self.kind,
            self.name,
            self.carrier,
            legs.join(", ")
        )
    }
}

/// [`Counterexample`] with names in place of indices. Morphism chains are
/// composed right to left and `lhs_value`/`rhs_value` are their composites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NamedCounterexample {
    Unequal {
        lhs: Vec<String>,
        rhs: Vec<String>,
        lhs_value: Option<String>,
        rhs_value: Option<String>,
    },
    /// `left` is `h . (g . f)` and `right` is `(h . g) . f`.
    NotAssociative {
        h: String,
        g: String,
        f: String,
        left: Option<String>,
        right: Option<String>,
    },
    NotComposable {
        first: String,
        second: String,
    },
    Mistyped {
        morphism: String,
        expected_dom: String,
        expected_cod: String,
    },
    NoMediator {
        object: String,
        cone: Vec<String>,
    },
    ManyMediators {
        object: String,
        cone: Vec<String>,
        mediators: [String; 2],
    },
    NoZero {
        from: String,
        to: String,
    },
    ManyZeros {
        from: String,
        to: String,
        zeros: Vec<String>,
    },
    NotZero {
        morphism: String,
        constant: bool,
        coconstant: bool,
    },
    NotIso {
        morphism: String,
    },
    NotUnique {
        first: String,
        second: String,
    },
    NoBiproduct {
        left: String,
        right: String,
    },
    Sum {
        summands: Vec<String>,
        sum: String,
        expected: String,
    },
    Disagreement {
        witness: Vec<String>,
        detail: String,
    },
}

impl NamedCounterexample {
    pub fn new(cat: &FinCat, cx: &Counterexample) -> NamedCounterexample {
        let m = |x: MorId| cat.morphism_name(x).to_string();
        let o = |x: ObjId| cat.object_name(x).to_string();
        let chain = |xs: &[MorId]| xs.iter().map(|&x| m(x)).collect::<Vec<_>>();
        match cx {
            Counterexample::Unequal { lhs, rhs } => NamedCounterexample::Unequal {
                lhs: chain(lhs),
                rhs: chain(rhs),
                lhs_value: cat.compose_chain(lhs).map(m),
                rhs_value: cat.compose_chain(rhs).map(m),
            },
            Counterexample::NotAssociative { h, g, f } => NamedCounterexample::NotAssociative {
                h: m(*h),
                g: m(*g),
                f: m(*f),
                left: cat.compose(*g, *f).and_then(|gf| cat.compose(*h, gf)).map(m),
                right: cat.compose(*h, *g).and_then(|hg| cat.compose(hg, *f)).map(m),
            },
            Counterexample::NotComposable { first, second } => NamedCounterexample::NotComposable {
                first: m(*first),
                second: m(*second),
            },
            Counterexample::Mistyped {
                morphism,
                expected_dom,
                expected_cod,
            } => NamedCounterexample::Mistyped {
                morphism: m(*morphism),
                expected_dom: o(*expected_dom),
                expected_cod: o(*expected_cod),
            },
            Counterexample::NoMediator { object, cone } => NamedCounterexample::NoMediator {
                object: o(*object),
                cone: chain(cone),
            },
            Counterexample::ManyMediators {
                object,
                cone,
                mediators,
            } => NamedCounterexample::ManyMediators {
                object: o(*object),
                cone: chain(cone),
                mediators: [m(mediators[0]), m(mediators[1])],
            },
            Counterexample::NoZero { from, to } => NamedCounterexample::NoZero {
                from: o(*from),
                to: o(*to),
            },
            Counterexample::ManyZeros { from, to, zeros } => NamedCounterexample::ManyZeros {
                from: o(*from),
                to: o(*to),
                zeros: chain(zeros),
            },
            Counterexample::NotZero { morphism, class } => NamedCounterexample::NotZero {
                morphism: m(*morphism),
                constant: class.constant,
                coconstant: class.coconstant,
            },
            Counterexample::NotIso { morphism } => NamedCounterexample::NotIso {
                morphism: m(*morphism),
            },
            Counterexample::NotUnique { first, second } => NamedCounterexample::NotUnique {
                first: m(*first),
                second: m(*second),
            },
            Counterexample::NoBiproduct { left, right } => NamedCounterexample::NoBiproduct {
                left: o(*left),
                right: o(*right),
            },
            Counterexample::Sum {
                summands,
                sum,
                expected,
            } => NamedCounterexample::Sum {
                summands: chain(summands),
                sum: m(*sum),
                expected: m(*expected),
            },
            Counterexample::Disagreement { witness, detail } => NamedCounterexample::Disagreement {
                witness: chain(witness),
                detail: detail.clone(),
            },
        }
    }

    pub fn describe(&self) -> String {
        let dots = |xs: &[String]| xs.join(" . ");
        let value = |v: &Option<String>| v.clone().unwrap_or_else(|| "(undefined)".into());
        match self {
            NamedCounterexample::Unequal {
                lhs,
                rhs,
                lhs_value,
                rhs_value,
            } => format!(
                "{} = {} differs from {} = {}",
                dots(lhs),
                value(lhs_value),
                dots(rhs),
                value(rhs_value)
            ),
            NamedCounterexample::NotAssociative {
                h,
                g,
                f,
                left,
                right,
            } => format!(
                "{h} . ({g} . {f}) = {} differs from ({h} . {g}) . {f} = {}",
                value(left),
                value(right)
            ),
            NamedCounterexample::NotComposable { first, second } => {
                format!("composite {first} . {second} has the wrong type")
            }
            NamedCounterexample::Mistyped {
                morphism,
                expected_dom,
                expected_cod,
            } => format!("{morphism} is not a morphism {expected_dom} -> {expected_cod}"),
            NamedCounterexample::NoMediator { object, cone } => {
                format!(
                    "no mediating morphism for the cone ({}) at {object}",
                    cone.join(", ")
                )
            }
            NamedCounterexample::ManyMediators {
                object,
                cone,
                mediators,
            } => format!(
                "{} and {} both mediate the cone ({}) at {object}",
                mediators[0],
                mediators[1],
                cone.join(", ")
            ),
            NamedCounterexample::NoZero { from, to } => {
                format!("hom({from}, {to}) contains no zero morphism")
            }
            NamedCounterexample::ManyZeros { from, to, zeros } => {
                format!(
                    "hom({from}, {to}) contains several zero morphisms: {}",
                    zeros.join(", ")
                )
            }
            NamedCounterexample::NotZero {
                morphism,
                constant,
                coconstant,
            } => format!("{morphism} is not zero (constant: {constant}, coconstant: {coconstant})"),
            NamedCounterexample::NotIso { morphism } => format!("{morphism} is not an isomorphism"),
            NamedCounterexample::NotUnique { first, second } => {
                format!("{first} and {second} both qualify")
            }
            NamedCounterexample::NoBiproduct { left, right } => {
                format!("no biproduct of ({left}, {right}) in this fragment")
            }
            NamedCounterexample::Sum {
                summands,
                sum,
                expected,
            } => format!("{} = {sum}, expected {expected}", summands.join(" + ")),
            NamedCounterexample::Disagreement { witness, detail } => {
                format!("definitions disagree on ({}): {detail}", witness.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    #[serde(flatten)]
    pub detail: NamedCounterexample,
    /// Whether replaying the counterexample in the input category reproduces
    /// the violation.
    pub replays: bool,
}

/// One verdict inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub outcome: Outcome,
    /// First failing clause, when the check failed.
    pub clause: Option<String>,
    pub certificates: Vec<Certificate>,
    pub counterexample: Option<CounterexampleReport>,
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(check: impl Into<String>, outcome: Outcome) -> Check {
        Check {
            check: check.into(),
            outcome,
            clause: None,
            certificates: Vec::new(),
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn from_verdict(check: impl Into<String>, cat: &FinCat, v: &Verdict) -> Check {
        let mut out = Check::new(check, v.into());
        if let Some(f) = v.failure() {
            out.clause = Some(f.clause.clone());
            out.counterexample = f.counterexample.as_ref().map(|cx| CounterexampleReport {
                detail: NamedCounterexample::new(cat, cx),
                replays: cx.replays(cat),
            });
        }
        out
    }

    pub fn certificate(mut self, c: Certificate) -> Check {
        self.certificates.push(c);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Check {
        self.notes.push(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    /// The command line, program name excluded.
    pub command: Vec<String>,
    pub category: Option<CategorySummary>,
    pub outcome: Outcome,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: Vec<String>, category: Option<CategorySummary>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            category,
            outcome: Outcome::Pass,
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    /// Appends a check and updates the overall outcome: any failure fails
    /// the report, and it is vacuous only when every check was.
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.outcome = if self.checks.iter().any(|c| c.outcome == Outcome::Fail) {
            Outcome::Fail
        } else if self.checks.iter().all(|c| c.outcome == Outcome::Vacuous) {
            Outcome::Vacuous
        } else {
            Outcome::Pass
        };
    }

    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Fail => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(c) = &self.category {
            let _ = writeln!(
                out,
                "category {} ({} objects, {} morphisms) {}",
                c.name, c.objects, c.morphisms, c.fingerprint
            );
        }
        for check in &self.checks {
            let _ = write!(
                out,
                "{:<7} {}",
                check.outcome.label().to_uppercase(),
                check.check
            );
            if let Some(clause) = &check.clause {
                let _ = write!(out, ": {clause}");
            }
            out.push('\n');
            for c in &check.certificates {
                let _ = writeln!(out, "  {}", c.describe());
            }
            if let Some(cx) = &check.counterexample {
                let _ = writeln!(out, "  counterexample: {}", cx.detail.describe());
            }
            for n in &check.notes {
                let _ = writeln!(out, "  note: {n}");
            }
        }
        let _ = write!(out, "result: {}", self.outcome.label());
        if let Some(ms) = self.timing_ms {
            let _ = write!(out, " ({ms:.3} ms)");
        }
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biproduct::find_biproducts;
    use crate::category::{fixtures, validate_category};

    #[test]
    fn fingerprint_ignores_the_name_but_not_the_table() {
        let a = fixtures::walking_arrow();
        let b = fixtures::thin(2, |i, j| i <= j);
        let c = fixtures::thin(2, |_, _| true);
        assert_eq!(fingerprint(&a, None), fingerprint(&a, None));
        assert_ne!(fingerprint(&b, None), fingerprint(&c, None));
        assert!(fingerprint(&a, None).starts_with("sha256:"));
        assert_eq!(fingerprint(&a, None).len(), "sha256:".len() + 64);
    }

    #[test]
    fn outcome_aggregates() {
        let cat = fixtures::terminal();
        let mut r = Report::new(vec![], None);
        r.push(Check::new("a", Outcome::Vacuous));
        assert_eq!(r.outcome, Outcome::Vacuous);
        r.push(Check::from_verdict("b", &cat, &validate_category(&cat)));
        assert_eq!(r.outcome, Outcome::Pass);
        r.push(Check::new("c", Outcome::Fail));
        assert_eq!((r.outcome, r.exit_code()), (Outcome::Fail, 1));
    }

    #[test]
    fn json_field_order_is_fixed() {
        let cat = fixtures::thin(2, |_, _| true);
        let w = find_biproducts(&cat, ObjId(0), ObjId(1))[0];
        let mut r = Report::new(
            vec!["biproducts".into()],
            Some(CategorySummary::new("I", &cat, None)),
        );
        r.push(
            Check::new("biproducts", Outcome::Pass)
                .certificate(Certificate::biproduct("w0", &cat, &w)),
        );
        let json = r.to_json();
        let keys = ["schema_version", "command", "category", "outcome", "checks"];
        let at: Vec<usize> = keys
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(at.windows(2).all(|p| p[0] < p[1]), "{json}");
        assert!(!json.contains("timing_ms"));
        assert!(r.to_text().contains("biproduct w0 on"));
    }
}
