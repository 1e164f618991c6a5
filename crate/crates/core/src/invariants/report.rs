use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::aut::{is_color_rigid, Coloring};
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::graph6::emit_graph6;
use crate::graph::Graph;

use super::{cost_with, determining_number, distinguishing_number, group_order, is_determining_set};

/// Which invariants to compute. `D` is always computed since the cost needs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection {
    pub rho: bool,
    pub det: bool,
}

impl Selection {
    pub const ALL: Selection = Selection { rho: true, det: true };
    pub const D_ONLY: Selection = Selection { rho: false, det: false };
}

/// Computed invariants with witnesses. Fields not requested are `null` in
/// JSON. `witness_labeling` is the cost witness when `rho` was computed and
/// the distinguishing witness otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    #[serde(with = "order_repr")]
    pub aut_order: BigUint,
    #[serde(rename = "D")]
    pub d: u32,
    pub rho: Option<usize>,
    pub det: Option<usize>,
    pub witness_labeling: Vec<u32>,
    pub witness_det_set: Option<Vec<usize>>,
    pub class_sizes: Option<Vec<usize>>,
}

/// Group orders are JSON numbers when they fit in `u64`, decimal strings
/// otherwise.
mod order_repr {
    use num_bigint::BigUint;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(v) {
            Ok(small) => s.serialize_u64(small),
            Err(_) => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v.into()),
            Repr::Text(t) => t.parse().map_err(D::Error::custom),
        }
    }
}

pub fn compute_report(
    g: &Graph,
    selection: Selection,
    budget: &Budget,
) -> Result<InvariantReport, BudgetExceeded> {
    let aut_order = group_order(g, budget)?;
    let (d, d_witness) = distinguishing_number(g, budget)?;
    let (rho, labeling) = if selection.rho {
        let (rho, w) = cost_with(g, d, budget)?;
        (Some(rho), w)
    } else {
        (None, d_witness)
    };
    let (det, det_set) = if selection.det {
        let (det, set) = determining_number(g, budget)?;
        (Some(det), Some(set))
    } else {
        (None, None)
    };
    Ok(InvariantReport {
        graph6: emit_graph6(g),
        n: g.order(),
        aut_order,
        d,
        rho,
        det,
        class_sizes: rho.map(|_| labeling.class_sizes()),
        witness_labeling: labeling.labels().to_vec(),
        witness_det_set: det_set,
    })
}

impl InvariantReport {
    /// Re-checks the witnesses against `g`: the labeling must be
    /// distinguishing with `D` labels (and have a class of size `rho`), the
    /// set must be determining with `det` elements. Minimality is not
    /// re-proved. Returns the list of problems found.
    pub fn check_witness(&self, g: &Graph, budget: &Budget) -> Result<Vec<String>, BudgetExceeded> {
        let mut problems = Vec::new();
        if emit_graph6(g) != self.graph6 || g.order() != self.n {
            problems.push("report does not describe this graph".to_string());
            return Ok(problems);
        }
        match Coloring::new(self.witness_labeling.clone()) {
            Err(e) => problems.push(format!("witness labeling invalid: {e}")),
            Ok(c) if c.len() != self.n => problems.push("witness labeling has wrong length".into()),
            Ok(c) => {
                if c.num_labels() != self.d {
                    problems.push(format!(
                        "witness labeling uses {} labels, D = {}",
                        c.num_labels(),
                        self.d
                    ));
                }
                if !is_color_rigid(g, &c, budget)? {
                    problems.push("witness labeling is not distinguishing".into());
                }
                if let Some(rho) = self.rho {
                    let sizes = c.class_sizes();
                    if sizes.first() != Some(&rho) {
                        problems.push(format!("smallest witness class is {sizes:?}, rho = {rho}"));
                    }
                    if self.class_sizes.as_ref() != Some(&sizes) {
                        problems.push("class_sizes does not match the witness".into());
                    }
                }
            }
        }
        if let (Some(det), Some(set)) = (self.det, &self.witness_det_set) {
            if set.len() != det {
                problems.push(format!("witness set has {} vertices, det = {det}", set.len()));
            }
            if set.iter().any(|&v| v >= self.n) {
                problems.push("witness set has out-of-range vertices".into());
            } else if !is_determining_set(g, set, budget)? {
                problems.push("witness set is not determining".into());
            }
        }
        Ok(problems)
    }
}
