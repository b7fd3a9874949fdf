//! Element-level claim audit for a single algebra table.
//!
//! Given a table and the Zinbiel orientation it is supposed to satisfy, the
//! audit evaluates every consequence commonly asserted for Zinbiel algebras
//! and reports each as holding or failing with exact witnesses. Both
//! orientation variants of every relation are always evaluated, so the report
//! shows which one the table really satisfies.

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::identity::{catalog_entry, evaluate, Identity};
use crate::models::Orientation;
use crate::report::{Finding, Report};

/// Claims evaluated by [`audit_claims`], in report order.
pub const AUDIT_CLAIMS: &[&str] = &[
    "left_relation",
    "left_relation_tensor_a",
    "left_relation_tensor_b",
    "right_relation",
    "right_relation_tensor_a",
    "right_relation_tensor_b",
    "tensor_identity_1",
    "tensor_identity_1_mirrored",
    "tensor_identity_2",
    "tensor_identity_2_mirrored",
    "tensor_identity_3",
    "tensor_identity_3_mirrored",
    "tensor_identity_4",
    "tensor_identity_4_mirrored",
    "aguiar_commutative",
    "aguiar_associative",
    "lie_admissible",
    "center_symmetric",
];

pub fn zinbiel_identity(orientation: Orientation) -> &'static Identity {
    let name = match orientation {
        Orientation::Left => "left_zinbiel",
        Orientation::Right => "right_zinbiel",
    };
    catalog_entry(name).expect("catalog entry")
}

fn identity_finding(table: &AlgebraTable, claim: &str, id: &Identity) -> Finding {
    let two_sided = !id.rhs().is_empty();
    Finding::from_residuals(claim, id.to_string(), &evaluate(table, id), two_sided)
}

fn attributed(orientation: &str) -> String {
    format!("asserted for {orientation} Zinbiel algebras")
}

fn claim_finding(table: &AlgebraTable, claim: &str) -> Result<Finding> {
    let cat = |n: &str| catalog_entry(n).expect("catalog entry");
    let f = match claim {
        "left_relation" | "left_relation_tensor_a" | "left_relation_tensor_b" => {
            identity_finding(table, claim, cat(claim)).with_note(attributed("left"))
        }
        "right_relation" | "right_relation_tensor_a" | "right_relation_tensor_b" => {
            identity_finding(table, claim, cat(claim)).with_note(attributed("right"))
        }
        "tensor_identity_1" | "tensor_identity_2" | "tensor_identity_3" | "tensor_identity_4" => {
            identity_finding(table, claim, cat(claim)).with_note("asserted for every Zinbiel algebra")
        }
        c if c.starts_with("tensor_identity_") && c.ends_with("_mirrored") => {
            let base = c.trim_end_matches("_mirrored");
            let id = cat(base).mirror();
            identity_finding(table, claim, &id).with_note(format!("{base} read in the opposite algebra"))
        }
        "aguiar_commutative" => {
            identity_finding(&table.symmetrize(), claim, cat("commutative")).with_note("on the symmetrized product x*y + y*x")
        }
        "aguiar_associative" => {
            identity_finding(&table.symmetrize(), claim, cat("associative")).with_note("on the symmetrized product x*y + y*x")
        }
        "lie_admissible" => {
            identity_finding(&table.commutator(), claim, cat("jacobi")).with_note("Jacobi identity of the commutator x*y - y*x")
        }
        "center_symmetric" => identity_finding(table, claim, cat("center_symmetric")).with_note("(x,y,z) = (z,y,x) for the associator"),
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(f)
}

/// Run the listed claims (all of [`AUDIT_CLAIMS`] when `claims` is `None`).
pub fn audit_selected(table: &AlgebraTable, orientation: Orientation, subject: &str, claims: Option<&[String]>) -> Result<Report> {
    let mut report = Report::new("audit", format!("{subject} (orientation {orientation})"));
    let pre = identity_finding(table, &format!("{orientation}_zinbiel"), zinbiel_identity(orientation))
        .with_note("standing hypothesis");
    report.vacuous = !pre.passed();
    report.push(pre);
    match claims {
        None => {
            for c in AUDIT_CLAIMS {
                report.push(claim_finding(table, c)?);
            }
        }
        Some(list) => {
            for c in list {
                report.push(claim_finding(table, c)?);
            }
        }
    }
    Ok(report)
}

pub fn audit_claims(table: &AlgebraTable, orientation: Orientation) -> Report {
    audit_selected(table, orientation, "table", None).expect("built-in claims")
}

/// Orientation a table actually satisfies, preferring right when both hold.
pub fn detect_orientation(table: &AlgebraTable) -> Option<Orientation> {
    if table.is_right_zinbiel() {
        Some(Orientation::Right)
    } else if table.is_left_zinbiel() {
        Some(Orientation::Left)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::trunc_integration;
    use crate::report::Value;
    use crate::scalar::Scalar;
    use crate::tensor::Vector;

    #[test]
    fn right_model_audit() {
        let r = audit_claims(&trunc_integration(5, Orientation::Right), Orientation::Right);
        assert!(!r.vacuous);
        assert!(r.finding("left_relation").unwrap().passed());
        let rel = r.finding("right_relation").unwrap();
        assert!(!rel.passed());
        let w = rel.witness().unwrap();
        assert_eq!(w.tuple, ["e0", "e0", "e1"]);
        let (l, rr) = w.sides.clone().unwrap();
        assert_eq!(l, Value::Vector(Vector::basis(6, 3).scaled(&Scalar::frac(1, 2))));
        assert_eq!(rr, Value::Vector(Vector::basis(6, 3).scaled(&Scalar::frac(1, 3))));

        let lie = r.finding("lie_admissible").unwrap();
        assert_eq!(lie.witness().unwrap().to_string(), "(e0,e1,e2): residual -(1/30)e5");
    }

    #[test]
    fn zero_table_audit_holds_everywhere() {
        let r = audit_claims(&AlgebraTable::zero(3), Orientation::Right);
        assert!(!r.vacuous);
        assert!(r.all_hold());
    }

    #[test]
    fn wrong_orientation_marks_report_vacuous() {
        let r = audit_claims(&trunc_integration(3, Orientation::Left), Orientation::Right);
        assert!(r.vacuous);
    }

    #[test]
    fn unknown_claim_is_an_error() {
        let t = AlgebraTable::zero(1);
        assert!(audit_selected(&t, Orientation::Right, "t", Some(&["nope".to_string()])).is_err());
    }

    #[test]
    fn orientation_detection() {
        assert_eq!(detect_orientation(&trunc_integration(3, Orientation::Left)), None);
        assert_eq!(detect_orientation(&crate::models::positive_degree(3, Orientation::Left)), Some(Orientation::Left));
        assert_eq!(detect_orientation(&trunc_integration(3, Orientation::Right)), Some(Orientation::Right));
        assert_eq!(detect_orientation(&crate::models::idempotent()), None);
    }
}
