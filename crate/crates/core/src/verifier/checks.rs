//! The registered claims. Per-graph checks return a [`Verdict`] for one
//! corpus graph; corpus checks look at the whole corpus at once.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use super::facts::Facts;
use crate::aut::{is_color_rigid, Coloring};
use crate::budget::BudgetExceeded;
use crate::families::{
    corona_cost_bound, corona_cost_bound_applies, corona_determining_number,
    corona_determining_number_k1, friendship_cost, friendship_distinguishing_number,
    friendship_gap, min_copies_for_labels,
};
use crate::invariants::{
    cost_with, distinguishing_number, is_determining_set, subset_distinguishing_number,
    subset_is_d_distinguishable,
};

pub(crate) enum Verdict {
    /// Hypothesis not met.
    Skip,
    Holds,
    Fails(Value),
    /// Holds, with an observation worth reporting.
    HoldsNoting(String),
    /// Hypothesis met, no violation, but the claim was not confirmed.
    Unsettled(String),
}

pub(crate) struct Aggregate {
    pub met: usize,
    /// Corpus index and payload of the first violation.
    pub failure: Option<(usize, Value)>,
    pub unsettled: bool,
    pub notes: Vec<String>,
}

pub(crate) type Outcome = Result<Verdict, BudgetExceeded>;
pub(crate) type GraphCheck = fn(&Facts) -> Outcome;

pub(crate) enum Kind {
    Graph(GraphCheck),
    Corpus(fn(&[Facts]) -> Result<Aggregate, BudgetExceeded>),
}

/// A registered claim.
pub struct CheckInfo {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub statement: &'static str,
    pub default_corpus: &'static str,
    /// Informative checks quote bounds from elsewhere; their failure does
    /// not count against the suite.
    pub informative: bool,
    pub(crate) kind: Kind,
}

const SMALL: &str = "all-connected:<=6";
const CORONAS: &str = "corona-pairs:(path:3),(complete:2);(path:2),(complete:2);(path:3),(path:2);\
(cycle:4),(complete:1);(path:3),(complete:1);(complete:3),(complete:1)";

pub(crate) static CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "Thm1.1",
        aliases: &[],
        statement: "D(G) = d iff G has a (d-1)-distinguishable determining set (minimum sets probed)",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(thm_1_1),
    },
    CheckInfo {
        id: "Prop2.2i",
        aliases: &[],
        statement: "rho_d(G) <= n/d",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(prop_2_2_i),
    },
    CheckInfo {
        id: "Prop2.2ii",
        aliases: &[],
        statement: "d = 1 iff rho_d(G) = n",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(prop_2_2_ii),
    },
    CheckInfo {
        id: "Prop2.3i",
        aliases: &[],
        statement: "d >= 2 implies rho_d(G) <= n/2",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(prop_2_3_i),
    },
    CheckInfo {
        id: "Prop2.3ii",
        aliases: &[],
        statement: "rho_d(G) = n/2 implies d = 2",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(prop_2_3_ii),
    },
    CheckInfo {
        id: "Prop2.4",
        aliases: &[],
        statement: "all but the largest class of a cost witness form a determining set",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(prop_2_4),
    },
    CheckInfo {
        id: "Prop2.5",
        aliases: &[],
        statement: "rho_d(G) <= n - Det(G)",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(prop_2_5),
    },
    CheckInfo {
        id: "Cor2.6",
        aliases: &[],
        statement: "D(G[A]) = d-1 for a minimum determining set A implies rho_d(G) <= min(n - Det, rho_{d-1}(G[A]))",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(cor_2_6),
    },
    CheckInfo {
        id: "Cor2.7i",
        aliases: &[],
        statement: "Det(G) <= rho_d(G) implies Det(G) <= n/2",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(cor_2_7_i),
    },
    CheckInfo {
        id: "Cor2.7ii",
        aliases: &[],
        statement: "d = 2 implies Det(G) <= n/2",
        default_corpus: SMALL,
        informative: false,
        kind: Kind::Graph(cor_2_7_ii),
    },
    CheckInfo {
        id: "Thm2.8",
        aliases: &[],
        statement: "every positive m is |Det - rho_d| of some graph (friendship gaps reported)",
        default_corpus: "friendship:2..12",
        informative: false,
        kind: Kind::Corpus(thm_2_8),
    },
    CheckInfo {
        id: "Thm3.1",
        aliases: &[],
        statement: "D(F_n) = ceil((1 + sqrt(8n+1))/2)",
        default_corpus: "friendship:2..8",
        informative: false,
        kind: Kind::Graph(thm_3_1),
    },
    CheckInfo {
        id: "Rem3.2",
        aliases: &["Remark3.2"],
        statement: "k_j = floor((j^2-3j+2)/2) + 1 and D(F_{k_j+j-1}) = j+1",
        default_corpus: "friendship:2..7",
        informative: false,
        kind: Kind::Corpus(rem_3_2),
    },
    CheckInfo {
        id: "Thm3.3",
        aliases: &[],
        statement: "rho_j(F_{k_j+i}) = i+1 for 0 <= i <= j-2",
        default_corpus: "friendship:2..6",
        informative: false,
        kind: Kind::Graph(thm_3_3),
    },
    CheckInfo {
        id: "Thm3.4",
        aliases: &[],
        statement: "Det(F_n) = n, with {v_1, v_3, ..., v_{2n-1}} determining",
        default_corpus: "friendship:2..6",
        informative: false,
        kind: Kind::Graph(thm_3_4),
    },
    CheckInfo {
        id: "Thm4.1",
        aliases: &[],
        statement: "Det(G o H) = Det(G) + n Det(H)",
        default_corpus: CORONAS,
        informative: false,
        kind: Kind::Graph(thm_4_1),
    },
    CheckInfo {
        id: "Thm4.2",
        aliases: &[],
        statement: "Det(G o K_1) = Det(G)",
        default_corpus: CORONAS,
        informative: false,
        kind: Kind::Graph(thm_4_2),
    },
    CheckInfo {
        id: "Thm4.3",
        aliases: &[],
        statement: "D(G o H) = max(D(G), D(H)) implies rho(G o H) <= rho(G) + n rho(H)",
        default_corpus: CORONAS,
        informative: false,
        kind: Kind::Graph(thm_4_3),
    },
    CheckInfo {
        id: "Corona.Degree",
        aliases: &[],
        statement: "no vertex in a copy of H has the degree of a vertex of G",
        default_corpus: CORONAS,
        informative: false,
        kind: Kind::Graph(corona_degree),
    },
    CheckInfo {
        id: "Boutin.Hypercube",
        aliases: &[],
        statement: "ceil(log2 k) - 1 <= rho(Q_k) <= ceil(log2 k) + 1",
        default_corpus: "hypercube:3..4",
        informative: true,
        kind: Kind::Graph(boutin_hypercube),
    },
];

fn verdict(holds: bool, values: impl FnOnce() -> Value) -> Verdict {
    if holds {
        Verdict::Holds
    } else {
        Verdict::Fails(values())
    }
}

/// Labels `subset` with `labels` and everything else with a fresh label.
fn complement_coloring(n: usize, subset: &[usize], labels: &[u32]) -> Coloring {
    let fresh = labels.iter().copied().max().unwrap_or(0) as u64 + 1;
    let mut raw = vec![fresh; n];
    for (&v, &l) in subset.iter().zip(labels) {
        raw[v] = l as u64;
    }
    Coloring::from_raw(&raw)
}

fn thm_1_1(f: &Facts) -> Outcome {
    let g = &f.item.graph;
    let n = f.n();
    let d = f.d()?;
    let (sets, complete) = f.min_sets()?;
    let budget = f.budget();
    let mut forward = false;
    for set in sets {
        let (s, labels) = if set.is_empty() {
            (0, Vec::new())
        } else {
            subset_distinguishing_number(g, set, &budget)?
        };
        // A determining set that is s-distinguishable plus one fresh label
        // must give a distinguishing labeling.
        let coloring = complement_coloring(n, set, &labels);
        if d > s + 1 || !is_color_rigid(g, &coloring, &budget)? {
            return Ok(Verdict::Fails(json!({
                "D": d,
                "determining_set": set,
                "set_distinguishing_number": s,
                "set_labels": labels,
                "complement_labeling": coloring.labels(),
            })));
        }
        forward |= s < d;
    }
    if forward {
        return Ok(Verdict::Holds);
    }
    // Fall back to a non-minimum set: all but the largest class of the
    // cost witness, keeping its labels.
    let r = f.report()?;
    let largest = largest_class(&r.witness_labeling);
    let union: Vec<usize> = (0..n).filter(|&v| r.witness_labeling[v] != largest).collect();
    let raw: Vec<u64> = union.iter().map(|&v| r.witness_labeling[v] as u64).collect();
    let labels = Coloring::from_raw(&raw);
    let found = labels.num_labels() < d
        && is_determining_set(g, &union, &budget)?
        && subset_is_d_distinguishable(g, &union, labels.labels(), &budget)?;
    let scope = if *complete { "all" } else { "the first" };
    let restricted = format!(
        "none of {scope} {} minimum determining sets is (D-1)-distinguishable",
        sets.len()
    );
    Ok(if found {
        Verdict::HoldsNoting(format!("{restricted}; a larger set from the cost witness is"))
    } else {
        Verdict::Unsettled(format!("restricted search: {restricted}"))
    })
}

/// Label of the largest class; ties go to the highest label.
fn largest_class(labels: &[u32]) -> u32 {
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &l in labels {
        *sizes.entry(l).or_default() += 1;
    }
    sizes
        .iter()
        .max_by_key(|&(&l, &s)| (s, l))
        .map(|(&l, _)| l)
        .unwrap_or(1)
}

fn prop_2_2_i(f: &Facts) -> Outcome {
    let (d, rho, n) = (f.d()? as usize, f.rho()?, f.n());
    Ok(verdict(d * rho <= n, || json!({ "n": n, "D": d, "rho": rho })))
}

fn prop_2_2_ii(f: &Facts) -> Outcome {
    let (d, rho, n) = (f.d()?, f.rho()?, f.n());
    Ok(verdict((d == 1) == (rho == n), || json!({ "n": n, "D": d, "rho": rho })))
}

fn prop_2_3_i(f: &Facts) -> Outcome {
    let d = f.d()?;
    if d < 2 {
        return Ok(Verdict::Skip);
    }
    let (rho, n) = (f.rho()?, f.n());
    Ok(verdict(2 * rho <= n, || json!({ "n": n, "D": d, "rho": rho })))
}

fn prop_2_3_ii(f: &Facts) -> Outcome {
    let (rho, n) = (f.rho()?, f.n());
    if 2 * rho != n {
        return Ok(Verdict::Skip);
    }
    let d = f.d()?;
    Ok(verdict(d == 2, || json!({ "n": n, "D": d, "rho": rho })))
}

fn prop_2_4(f: &Facts) -> Outcome {
    let r = f.report()?;
    let det = f.det()?;
    let largest = largest_class(&r.witness_labeling);
    let union: Vec<usize> = (0..f.n())
        .filter(|&v| r.witness_labeling[v] != largest)
        .collect();
    let determining = is_determining_set(&f.item.graph, &union, &f.budget())?;
    Ok(verdict(determining && det <= union.len(), || {
        json!({
            "D": r.d,
            "rho": r.rho,
            "det": det,
            "witness_labeling": r.witness_labeling,
            "union_of_smaller_classes": union,
            "union_is_determining": determining,
        })
    }))
}

fn prop_2_5(f: &Facts) -> Outcome {
    let (rho, det, n) = (f.rho()?, f.det()?, f.n());
    Ok(verdict(rho + det <= n, || json!({ "n": n, "rho": rho, "det": det })))
}

fn cor_2_6(f: &Facts) -> Outcome {
    let d = f.d()?;
    if d < 2 {
        return Ok(Verdict::Skip);
    }
    let g = &f.item.graph;
    let (n, rho, det) = (f.n(), f.rho()?, f.det()?);
    let (sets, _) = f.min_sets()?;
    let budget = f.budget();
    let mut met = false;
    for set in sets {
        let (sub, index) = g.induced_subgraph(set).expect("sets are non-empty and in range");
        if distinguishing_number(&sub, &budget)?.0 != d - 1 {
            continue;
        }
        met = true;
        let (rho_sub, witness) = cost_with(&sub, d - 1, &budget)?;
        let labels: Vec<u32> = set.iter().map(|v| witness.label(index[v])).collect();
        let coloring = complement_coloring(n, set, &labels);
        let rigid = is_color_rigid(g, &coloring, &budget)?;
        if !rigid || rho > (n - det).min(rho_sub) {
            return Ok(Verdict::Fails(json!({
                "n": n,
                "D": d,
                "rho": rho,
                "det": det,
                "determining_set": set,
                "rho_induced": rho_sub,
                "constructed_labeling": coloring.labels(),
                "constructed_is_distinguishing": rigid,
            })));
        }
    }
    Ok(if met { Verdict::Holds } else { Verdict::Skip })
}

fn cor_2_7_i(f: &Facts) -> Outcome {
    let (rho, det, n) = (f.rho()?, f.det()?, f.n());
    if det > rho {
        return Ok(Verdict::Skip);
    }
    Ok(verdict(2 * det <= n, || json!({ "n": n, "rho": rho, "det": det })))
}

fn cor_2_7_ii(f: &Facts) -> Outcome {
    if f.d()? != 2 {
        return Ok(Verdict::Skip);
    }
    let (det, n) = (f.det()?, f.n());
    Ok(verdict(2 * det <= n, || json!({ "n": n, "D": 2, "det": det })))
}

fn thm_3_1(f: &Facts) -> Outcome {
    let Some(n) = f.item.friendship else {
        return Ok(Verdict::Skip);
    };
    let d = f.d()? as u64;
    let expected = friendship_distinguishing_number(n as u64);
    Ok(verdict(d == expected, || json!({ "copies": n, "D": d, "formula": expected })))
}

fn thm_3_3(f: &Facts) -> Outcome {
    let Some(n) = f.item.friendship else {
        return Ok(Verdict::Skip);
    };
    let Some(expected) = friendship_cost(n as u64) else {
        return Ok(Verdict::Skip);
    };
    let rho = f.rho()? as u64;
    Ok(verdict(rho == expected, || json!({ "copies": n, "rho": rho, "formula": expected })))
}

fn thm_3_4(f: &Facts) -> Outcome {
    let Some(n) = f.item.friendship else {
        return Ok(Verdict::Skip);
    };
    let det = f.det()?;
    let odd: Vec<usize> = (0..n).map(|i| 2 * i + 1).collect();
    let determining = is_determining_set(&f.item.graph, &odd, &f.budget())?;
    Ok(verdict(det == n && determining, || {
        json!({ "copies": n, "det": det, "odd_spokes_determining": determining })
    }))
}

/// Factor reports when the item is a corona `G ∘ H` with `G` connected of
/// order at least 2 and `H` connected.
fn corona_parts<'f>(
    f: &'f Facts,
) -> Result<Option<&'f (crate::InvariantReport, crate::InvariantReport)>, BudgetExceeded> {
    match &f.item.corona {
        Some((g, h)) if g.order() >= 2 && g.is_connected() && h.is_connected() => {
            f.parts().map(Some)
        }
        _ => Ok(None),
    }
}

fn thm_4_1(f: &Facts) -> Outcome {
    let Some((g, h)) = corona_parts(f)? else {
        return Ok(Verdict::Skip);
    };
    let det = f.det()? as u64;
    let (det_g, det_h) = (g.det.unwrap() as u64, h.det.unwrap() as u64);
    let expected = corona_determining_number(det_g, g.n as u64, det_h);
    Ok(verdict(det == expected, || {
        json!({
            "det": det,
            "det_G": det_g,
            "det_H": det_h,
            "order_G": g.n,
            "formula": expected,
        })
    }))
}

fn thm_4_2(f: &Facts) -> Outcome {
    let Some((g, h)) = corona_parts(f)? else {
        return Ok(Verdict::Skip);
    };
    if h.n != 1 {
        return Ok(Verdict::Skip);
    }
    let det = f.det()? as u64;
    let expected = corona_determining_number_k1(g.det.unwrap() as u64);
    Ok(verdict(det == expected, || json!({ "det": det, "det_G": expected })))
}

fn thm_4_3(f: &Facts) -> Outcome {
    let Some((g, h)) = corona_parts(f)? else {
        return Ok(Verdict::Skip);
    };
    let d = f.d()? as u64;
    if !corona_cost_bound_applies(g.d as u64, h.d as u64, d) {
        return Ok(Verdict::Skip);
    }
    let rho = f.rho()? as u64;
    let (rho_g, rho_h) = (g.rho.unwrap() as u64, h.rho.unwrap() as u64);
    let bound = corona_cost_bound(rho_g, g.n as u64, rho_h);
    Ok(verdict(rho <= bound, || {
        json!({ "D": d, "rho": rho, "rho_G": rho_g, "rho_H": rho_h, "bound": bound })
    }))
}

fn corona_degree(f: &Facts) -> Outcome {
    let Some((g, h)) = &f.item.corona else {
        return Ok(Verdict::Skip);
    };
    if g.order() < 2 || !g.is_connected() || !h.is_connected() {
        return Ok(Verdict::Skip);
    }
    let degrees = f.item.graph.degrees();
    let base: BTreeSet<usize> = degrees[..g.order()].iter().copied().collect();
    let clash = degrees[g.order()..].iter().find(|d| base.contains(d));
    Ok(verdict(clash.is_none(), || {
        json!({ "degrees_in_G": base, "clashing_degree": clash })
    }))
}

fn boutin_hypercube(f: &Facts) -> Outcome {
    let Some(k) = f.item.hypercube.filter(|&k| k >= 1) else {
        return Ok(Verdict::Skip);
    };
    let log = k.next_power_of_two().trailing_zeros() as i64;
    let rho = f.rho()? as i64;
    Ok(verdict((log - 1..=log + 1).contains(&rho), || {
        json!({ "dimension": k, "rho": rho, "lower": log - 1, "upper": log + 1 })
    }))
}

/// `(corpus index, copies, value)` for each friendship graph, computed in
/// parallel.
fn friendship_values<T: Send>(
    facts: &[Facts],
    value: impl Fn(&Facts) -> Result<T, BudgetExceeded> + Sync,
) -> Result<Vec<(usize, usize, T)>, BudgetExceeded> {
    facts
        .par_iter()
        .enumerate()
        .filter_map(|(i, f)| f.item.friendship.map(|n| (i, n, f)))
        .map(|(i, n, f)| Ok((i, n, value(f)?)))
        .collect()
}

fn rem_3_2(facts: &[Facts]) -> Result<Aggregate, BudgetExceeded> {
    let values = friendship_values(facts, |f| f.d())?;
    let by_n: BTreeMap<usize, (usize, u32)> =
        values.iter().map(|&(i, n, d)| (n, (i, d))).collect();
    // Longest run 2..=top present in the corpus.
    let top = (2..).take_while(|n| by_n.contains_key(n)).last();
    let mut agg = Aggregate {
        met: 0,
        failure: None,
        unsettled: false,
        notes: Vec::new(),
    };
    let Some(top) = top else {
        agg.notes.push("needs friendship graphs F_2, F_3, ... in the corpus".into());
        return Ok(agg);
    };
    agg.notes.push(format!("contiguous range F_2..F_{top}"));
    for j in 3u64.. {
        let k = min_copies_for_labels(j) as usize;
        if k > top {
            break;
        }
        agg.met += 1;
        let first = (2..=top).find(|n| by_n[n].1 as u64 == j);
        if first != Some(k) && agg.failure.is_none() {
            let at = first.unwrap_or(k);
            agg.failure = Some((
                by_n[&at].0,
                json!({ "j": j, "k_j": k, "least_n_with_D_j": first }),
            ));
        }
        let next = k + j as usize - 1;
        if next <= top {
            agg.met += 1;
            let d = by_n[&next].1 as u64;
            if d != j + 1 && agg.failure.is_none() {
                agg.failure = Some((
                    by_n[&next].0,
                    json!({ "j": j, "copies": next, "D": d, "expected": j + 1 }),
                ));
            }
        }
    }
    Ok(agg)
}

fn thm_2_8(facts: &[Facts]) -> Result<Aggregate, BudgetExceeded> {
    let values = friendship_values(facts, |f| Ok((f.det()?, f.rho()?)))?;
    let mut agg = Aggregate {
        met: values.len(),
        failure: None,
        unsettled: !values.is_empty(),
        notes: Vec::new(),
    };
    let mut gaps = BTreeSet::new();
    for &(i, n, (det, rho)) in &values {
        let gap = det.abs_diff(rho) as u64;
        gaps.insert(gap);
        let expected = friendship_gap(n as u64);
        if expected.is_some_and(|e| e != gap) && agg.failure.is_none() {
            agg.failure = Some((
                i,
                json!({ "copies": n, "det": det, "rho": rho, "gap": gap, "closed_form_gap": expected }),
            ));
        }
    }
    if !values.is_empty() {
        let missing = (1..*gaps.last().unwrap()).find(|m| !gaps.contains(m));
        agg.notes.push(format!("achieved friendship gaps |Det - rho|: {gaps:?}"));
        agg.notes.push(
            "closed forms give gap (D-1)(D-2)/2 for F_n, so only triangular numbers occur".into(),
        );
        if let Some(m) = missing {
            agg.notes
                .push(format!("m = {m} is not achieved by any friendship graph; the claim is neither confirmed nor refuted"));
        }
    }
    Ok(agg)
}
