//! Built-in identities.
//!
//! Orientation names follow the usual convention for Zinbiel algebras:
//! *left* means `(x*y)*z = x*(y*z) + x*(z*y)`, *right* means
//! `x*(y*z) = (x*y)*z + (y*x)*z`. The two `*_relation` entries carry the
//! attribution under which they are commonly stated; which orientation
//! actually implies which relation is something the audit measures.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::tensor_map::{compose, expand_law, mu_tau, tensor, MapExpr};
use super::{parse_identity, Identity};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const CATALOG_NAMES: &[&str] = &[
    "left_zinbiel",
    "right_zinbiel",
    "left_associator_form",
    "right_associator_form",
    "left_relation",
    "left_relation_tensor_a",
    "left_relation_tensor_b",
    "right_relation",
    "right_relation_tensor_a",
    "right_relation_tensor_b",
    "tensor_identity_1",
    "tensor_identity_2",
    "tensor_identity_3",
    "tensor_identity_4",
    "commutative",
    "associative",
    "symmetrized_associative",
    "jacobi",
    "lie_admissible",
    "center_symmetric",
];

fn dsl(src: &str) -> Identity {
    parse_identity(src).expect("catalog entry parses")
}

fn law(lhs: &[MapExpr], rhs: &[MapExpr]) -> Identity {
    let wrap = |side: &[MapExpr]| side.iter().map(|m| (Scalar::one(), m.clone())).collect::<Vec<_>>();
    expand_law(&wrap(lhs), &wrap(rhs)).expect("catalog law expands")
}

fn build() -> BTreeMap<&'static str, Identity> {
    use MapExpr::{Id, Mu, Tau};
    let mu_id_mu = || compose([Mu, tensor([Id, Mu])]);
    let mu_mu_id = || compose([Mu, tensor([Mu, Id])]);
    let tau_id = || tensor([Tau, Id]);
    let id_tau = || tensor([Id, Tau]);

    let jacobi = dsl("(x (y z)) + (y (z x)) + (z (x y))");
    let associative = dsl("((x y) z) = (x (y z))");

    let entries = [
        ("left_zinbiel", dsl("((x y) z) = (x (y z)) + (x (z y))")),
        ("right_zinbiel", dsl("(x (y z)) = ((x y) z) + ((y x) z)")),
        ("left_associator_form", dsl("((x y) z) - (x (y z)) = (x (z y))")),
        ("right_associator_form", dsl("((x y) z) - (x (y z)) = -((y x) z)")),
        ("left_relation", dsl("(x (y z)) = (y (x z))")),
        ("left_relation_tensor_a", law(&[mu_id_mu()], &[compose([Mu, tensor([Id, Mu]), tau_id()])])),
        ("left_relation_tensor_b", law(&[mu_id_mu()], &[compose([mu_tau(), tensor([Mu, Id]), id_tau()])])),
        ("right_relation", dsl("((x y) z) = ((x z) y)")),
        ("right_relation_tensor_a", law(&[mu_mu_id()], &[compose([Mu, tensor([Mu, Id]), id_tau()])])),
        ("right_relation_tensor_b", law(&[mu_mu_id()], &[compose([mu_tau(), tensor([Id, Mu]), tau_id()])])),
        (
            "tensor_identity_1",
            law(
                &[compose([Mu, tensor([Id, mu_tau()])])],
                &[compose([Mu, tensor([Mu, Id]), id_tau()]), compose([mu_tau(), tensor([Id, mu_tau()]), tau_id()])],
            ),
        ),
        (
            "tensor_identity_2",
            law(
                &[compose([mu_tau(), tensor([Mu, Id])])],
                &[compose([Mu, tensor([Mu, Id]), id_tau()]), compose([mu_tau(), tensor([Id, mu_tau()]), tau_id()])],
            ),
        ),
        (
            "tensor_identity_3",
            law(
                &[compose([mu_tau(), tensor([mu_tau(), Id])])],
                &[compose([mu_tau(), tensor([Id, Mu])]), compose([mu_tau(), tensor([Id, mu_tau()])])],
            ),
        ),
        ("tensor_identity_4", law(&[mu_id_mu()], &[compose([Mu, tensor([Id, Mu]), tau_id()])])),
        ("commutative", dsl("(x y) = (y x)")),
        ("symmetrized_associative", associative.through_anticommutator().expect("nonzero")),
        ("associative", associative),
        ("lie_admissible", jacobi.through_commutator().expect("nonzero")),
        ("jacobi", jacobi),
        ("center_symmetric", dsl("((x y) z) - (x (y z)) = ((z y) x) - (z (y x))")),
    ];
    entries.into_iter().collect()
}

/// The fixed catalog, by name.
pub fn catalog() -> &'static BTreeMap<&'static str, Identity> {
    static CATALOG: OnceLock<BTreeMap<&'static str, Identity>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn catalog_entry(name: &str) -> Result<&'static Identity> {
    catalog().get(name).ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}
